#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"
#include "dirwell/feasible_set.hpp"
#include "dirwell/objective.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// A fully validated minimization problem: minimize f (plus optional convex
// term g) over the feasible set, analyzed relative to the direction set and
// the anchor point. sample_box bounds where point clouds are drawn.
struct Problem {
  int dimension = 0;
  FeasibleSet feasible;
  Objective f;
  std::optional<Objective> g;
  DirectionSet directions;
  std::optional<Vec> anchor;
  Vec box_lo;
  Vec box_hi;
  int budget = 0;
  std::uint64_t seed = 0;
  std::string source;  // catalog name, or "document" for ad-hoc problems

  const Vec& anchor_point() const {
    if (!anchor.has_value())
      fail(Errc::precondition_violation, "problem has no anchor point");
    return *anchor;
  }

  bool in_box(const Vec& x) const {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x[i] < box_lo[i] || x[i] > box_hi[i]) return false;
    return true;
  }

  // Objective value including the optional additive term.
  double total_value(const Vec& x) const {
    const double fx = f.value(x);
    if (!g.has_value()) return fx;
    const double gx = g->value(x);
    return fx + gx;
  }
};

}  // namespace dirwell
