#include "dirwell/catalog.hpp"

#include "dirwell/error.hpp"

namespace dirwell {

namespace {

Vec constant_vec(int dim, double v) { return Vec::Constant(dim, v); }

Vec unit(int dim, int axis, double sign) {
  Vec u = Vec::Zero(dim);
  u[axis] = sign;
  return u;
}

Problem base(const std::string& name, int dim, double box_lo, double box_hi, int budget) {
  Problem p;
  p.dimension = dim;
  p.feasible = FeasibleSet::whole_space(dim);
  p.f = Objective::builtin(name);
  p.box_lo = constant_vec(dim, box_lo);
  p.box_hi = constant_vec(dim, box_hi);
  p.budget = budget;
  p.seed = 1;
  p.source = name;
  return p;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"x2exp", "x^2 e^{-x} on the line, direction +1, anchor 0.5", false},
      {"l1w_5", "weighted absolute sum over five coordinates, direction e1, anchor 0", false},
      {"expdir", "e^x on the line, direction -1, anchor 0", false},
      {"quad", "squared norm, all directions, anchor 0", false},
      {"doublewell", "(x^2-1)^2 on the line, all directions, anchor 1", false},
      {"polymax1", "x on the line, direction -1, anchor 0", true},
      {"l2fin2", "x1 + x2 restricted to the line x2 = 0, direction -e1, anchor 0", true},
  };
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

Problem catalog_problem(const std::string& name) {
  if (name == "x2exp") {
    Problem p = base(name, 1, -3.0, 3.0, 1201);
    p.directions = DirectionSet::from_generators({unit(1, 0, 1.0)});
    p.anchor = constant_vec(1, 0.5);
    return p;
  }
  if (name == "l1w_5") {
    Problem p = base(name, 5, -3.0, 3.0, 3000);
    p.directions = DirectionSet::from_generators({unit(5, 0, 1.0)});
    p.anchor = Vec::Zero(5);
    return p;
  }
  if (name == "expdir") {
    Problem p = base(name, 1, -4.0, 4.0, 1201);
    p.directions = DirectionSet::from_generators({unit(1, 0, -1.0)});
    p.anchor = Vec::Zero(1);
    return p;
  }
  if (name == "quad") {
    Problem p = base(name, 1, -3.0, 3.0, 1201);
    p.directions = DirectionSet::sphere(1);
    p.anchor = Vec::Zero(1);
    return p;
  }
  if (name == "doublewell") {
    Problem p = base(name, 1, -3.0, 3.0, 1201);
    p.directions = DirectionSet::sphere(1);
    p.anchor = constant_vec(1, 1.0);
    return p;
  }
  if (name == "polymax1") {
    Problem p = base(name, 1, -4.0, 4.0, 1201);
    p.directions = DirectionSet::from_generators({unit(1, 0, -1.0)});
    p.anchor = Vec::Zero(1);
    return p;
  }
  if (name == "l2fin2") {
    Problem p = base(name, 2, -3.0, 3.0, 2000);
    p.directions = DirectionSet::from_generators({unit(2, 0, -1.0)});
    p.anchor = Vec::Zero(2);
    return p;
  }
  fail(Errc::unknown_builtin, "no catalog problem named '" + name + "'");
}

}  // namespace dirwell
