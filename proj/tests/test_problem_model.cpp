#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dirwell/catalog.hpp"
#include "dirwell/error.hpp"
#include "dirwell/expr.hpp"
#include "dirwell/feasible_set.hpp"
#include "dirwell/objective.hpp"
#include "dirwell/problem_io.hpp"
#include "dirwell/vector_field.hpp"

using namespace dirwell;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("expression trees evaluate and report smoothness") {
  // x0^2 * exp(-x0)
  Expr f = Expr::mul({Expr::pow(Expr::coord(0), 2.0), Expr::exp(Expr::mul(
                          {Expr::constant(-1.0), Expr::coord(0)}))});
  CHECK(f.eval(v1(2.0)) == doctest::Approx(4.0 * std::exp(-2.0)));
  CHECK(f.smooth());
  CHECK(f.min_dimension() == 1);

  Expr g = Expr::abs(Expr::coord(1));
  CHECK(g.eval(v2(5, -3)) == 3.0);
  CHECK_FALSE(g.smooth());
  CHECK(g.min_dimension() == 2);
}

TEST_CASE("catalog builtins match their closed forms") {
  struct Case {
    const char* name;
    Vec at;
    double want;
  };
  const Case cases[] = {
      {"x2exp", v1(0.5), 0.25 * std::exp(-0.5)},
      {"quad", v2(1, 2), 5.0},
      {"doublewell", v1(2.0), 9.0},
      {"expdir", v1(1.0), std::exp(1.0)},
      {"polymax1", v1(0.7), 0.7},
  };
  for (const Case& c : cases) {
    Objective o = Objective::builtin(c.name);
    CHECK(o.value(c.at) == doctest::Approx(c.want));
  }

  Objective l1 = Objective::builtin("l1w_5");
  Vec x = Vec::Zero(5);
  x << 1, -2, 3, 0, 5;
  CHECK(l1.value(x) == doctest::Approx(1.0 + 2.0 / 2 + 3.0 / 3 + 0.0 + 5.0 / 5));
  CHECK_FALSE(l1.differentiable());

  // l2fin2 is extended: finite only on the x2 = 0 line.
  Objective fin = Objective::builtin("l2fin2");
  CHECK(fin.extended());
  CHECK(fin.value(v2(3, 0)) == doctest::Approx(3.0));
  CHECK(std::isinf(fin.value(v2(3, 0.5))));

  CHECK_THROWS_AS(Objective::builtin("nope"), Error);
}

TEST_CASE("gradients: closed form and finite differences agree on quad") {
  Objective quad = Objective::builtin("quad");
  Vec g = quad.gradient(v2(1.5, -2.0));
  CHECK(g[0] == doctest::Approx(3.0));
  CHECK(g[1] == doctest::Approx(-4.0));

  Objective expr_quad = Objective::from_expr(
      Expr::add({Expr::pow(Expr::coord(0), 2.0), Expr::pow(Expr::coord(1), 2.0)}));
  Vec h = expr_quad.gradient(v2(1.5, -2.0));
  CHECK(h[0] == doctest::Approx(3.0).epsilon(1e-5));
  CHECK(h[1] == doctest::Approx(-4.0).epsilon(1e-5));

  Objective l1 = Objective::builtin("l1w_5");
  CHECK_THROWS_AS(l1.gradient(Vec::Zero(5)), Error);
}

TEST_CASE("feasible sets: exact membership on each shape") {
  FeasibleSet box = FeasibleSet::box(v2(-1, -1), v2(1, 1));
  CHECK(box.contains(v2(1, 1)));
  CHECK_FALSE(box.contains(v2(1.0000001, 0)));

  FeasibleSet half = FeasibleSet::halfspaces({v2(1, 0)}, {0.5});
  CHECK(half.contains(v2(0.5, 9)));
  CHECK_FALSE(half.contains(v2(0.6, 0)));

  FeasibleSet ball = FeasibleSet::ball(v2(0, 0), 1.0);
  CHECK(ball.contains(v2(0.6, 0.8)));
  CHECK_FALSE(ball.contains(v2(0.8, 0.8)));

  // Degenerate box: an honest lower-dimensional set.
  FeasibleSet line = FeasibleSet::box(v2(-2, 0), v2(2, 0));
  CHECK(line.contains(v2(1, 0)));
  CHECK_FALSE(line.contains(v2(1, 1e-12)));
}

TEST_CASE("vector fields evaluate") {
  Mat A(2, 2);
  A << 2, 0, 0, 1;
  VectorField V = VectorField::affine(A, v2(0, -1));
  Vec out = V.eval(v2(1, 1));
  CHECK(out[0] == 2.0);
  CHECK(out[1] == 0.0);

  VectorField W = VectorField::from_exprs({Expr::exp(Expr::coord(0))});
  CHECK(W.eval(v1(0.0))[0] == 1.0);
}

TEST_CASE("catalog problems come fully equipped") {
  for (const CatalogEntry& e : catalog_entries()) {
    Problem p = catalog_problem(e.name);
    CHECK(p.dimension >= 1);
    CHECK(p.anchor.has_value());
    CHECK(p.budget > 0);
    CHECK(p.box_lo.size() == p.dimension);
    CHECK(p.feasible.contains(p.anchor_point()));
    CHECK(p.source == e.name);
  }
  CHECK(catalog_has("x2exp"));
  CHECK_FALSE(catalog_has("cubic"));
}

TEST_CASE("minimal catalog document picks up every default") {
  Problem p = parse_problem(R"({"f": {"builtin": "x2exp"}})");
  CHECK(p.dimension == 1);
  CHECK(p.anchor_point()[0] == doctest::Approx(0.5));
  CHECK_FALSE(p.directions.full_sphere);
  REQUIRE(p.directions.generators.size() == 1);
  CHECK(p.directions.generators[0][0] == 1.0);
}

TEST_CASE("explicit fields override catalog defaults") {
  Problem p = parse_problem(R"({
    "f": {"builtin": "quad"},
    "anchor": [0.25],
    "budget": 301,
    "seed": 42
  })");
  CHECK(p.anchor_point()[0] == 0.25);
  CHECK(p.budget == 301);
  CHECK(p.seed == 42);
}

TEST_CASE("document validation errors carry the right code") {
  auto code_of = [](const char* doc) {
    try {
      parse_problem(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::schema_violation;  // placeholder; every case below throws
  };

  // missing dimension on an expression objective
  CHECK(code_of(R"({"f": {"expr": 0.0}, "M": {"full_sphere": true}})") ==
        Errc::schema_violation);
  // generator of length != 1
  CHECK(code_of(R"({
    "dimension": 2,
    "f": {"expr": 0.0},
    "M": {"generators": [[1.0, 1.0]]},
    "anchor": [0, 0],
    "sample_box": {"lo": [-1, -1], "hi": [1, 1]},
    "budget": 100, "seed": 1
  })") == Errc::non_unit_generator);
  // anchor outside the feasible set
  CHECK(code_of(R"({
    "dimension": 1,
    "f": {"expr": 0.0},
    "M": {"full_sphere": true},
    "feasible": {"shape": "box", "lo": [0.0], "hi": [1.0]},
    "anchor": [2.0],
    "sample_box": {"lo": [0.0], "hi": [1.0]},
    "budget": 100, "seed": 1
  })") == Errc::anchor_infeasible);
  CHECK(code_of(R"({"f": {"builtin": "missing_name"}})") == Errc::unknown_builtin);
  CHECK(code_of("not json at all") == Errc::schema_violation);
}

TEST_CASE("serialize then parse reproduces the problem") {
  Problem p = parse_problem(R"({
    "dimension": 2,
    "f": {"expr": {"op": "add", "args": [{"op": "pow", "base": "x0", "exponent": 2.0},
                                          {"op": "pow", "base": "x1", "exponent": 2.0}]}},
    "M": {"generators": [[1.0, 0.0], [0.0, 1.0]]},
    "feasible": {"shape": "box", "lo": [-2, -2], "hi": [2, 2]},
    "anchor": [0.5, 0.5],
    "sample_box": {"lo": [-2, -2], "hi": [2, 2]},
    "budget": 400,
    "seed": 11
  })");
  Problem q = parse_problem(serialize_problem(p));
  CHECK(q.dimension == p.dimension);
  CHECK(q.budget == p.budget);
  CHECK(q.seed == p.seed);
  CHECK(q.anchor_point() == p.anchor_point());
  CHECK(q.directions.generators.size() == p.directions.generators.size());
  CHECK(q.f.value(v2(0.3, -0.7)) == doctest::Approx(p.f.value(v2(0.3, -0.7))));
  // twice-serialized text is stable
  CHECK(serialize_problem(q) == serialize_problem(p));
}
