#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dirwell/catalog.hpp"
#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"
#include "dirwell/objective.hpp"
#include "dirwell/oracle.hpp"

using namespace dirwell;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
  Vec v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

}  // namespace

TEST_CASE("scan agrees with closed forms for simple cones") {
  // full sphere: plain Euclidean distance
  DirectionSet sphere = DirectionSet::sphere(2);
  CHECK(oracle_minimal_time(sphere, v2(1.0, 1.0), v2(4.0, 5.0)).value() ==
        doctest::Approx(5.0).epsilon(1e-9));

  // 1-D upward cone: one-sided
  DirectionSet up = DirectionSet::from_generators({v1(1.0)});
  CHECK(oracle_minimal_time(up, v1(0.0), v1(0.0)).value() == 0.0);
  CHECK(oracle_minimal_time(up, v1(1.0), v1(3.5)).value() == doctest::Approx(2.5));
  CHECK_FALSE(oracle_minimal_time(up, v1(1.0), v1(0.5)).is_finite());

  // single planar generator: only the ray itself
  DirectionSet ray = DirectionSet::from_generators({v2(1.0, 0.0)});
  CHECK(oracle_minimal_time(ray, v2(0.0, 0.0), v2(2.0, 0.0)).value() == doctest::Approx(2.0));
  CHECK_FALSE(oracle_minimal_time(ray, v2(0.0, 0.0), v2(2.0, 0.1)).is_finite());
  CHECK_FALSE(oracle_minimal_time(ray, v2(0.0, 0.0), v2(-2.0, 0.0)).is_finite());

  // quarter plane
  DirectionSet quarter = DirectionSet::from_generators({v2(1.0, 0.0), v2(0.0, 1.0)});
  CHECK(oracle_minimal_time(quarter, v2(0.0, 0.0), v2(3.0, 4.0)).value() ==
        doctest::Approx(5.0).epsilon(1e-7));
  CHECK_FALSE(oracle_minimal_time(quarter, v2(0.0, 0.0), v2(-1.0, 0.5)).is_finite());

  // antipodal generators span the whole line
  DirectionSet line = DirectionSet::from_generators({v2(1.0, 0.0), v2(-1.0, 0.0)});
  CHECK(oracle_minimal_time(line, v2(0.0, 0.0), v2(-3.0, 0.0)).value() == doctest::Approx(3.0));
  CHECK_FALSE(oracle_minimal_time(line, v2(0.0, 0.0), v2(0.0, 1.0)).is_finite());

  // three generators spanning the upper half plane
  DirectionSet half =
      DirectionSet::from_generators({v2(1.0, 0.0), v2(0.0, 1.0), v2(-1.0, 0.0)});
  CHECK(oracle_minimal_time(half, v2(0.0, 0.0), v2(-2.0, 2.0)).value() ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-7));
  CHECK_FALSE(oracle_minimal_time(half, v2(0.0, 0.0), v2(0.0, -1.0)).is_finite());
}

TEST_CASE("scan preconditions") {
  Vec e1 = Vec::Zero(4);
  e1[0] = 1.0;
  DirectionSet four = DirectionSet::from_generators({e1});
  CHECK_THROWS_AS(oracle_minimal_time(four, Vec::Zero(4), e1), Error);

  DirectionSet up = DirectionSet::from_generators({v1(1.0)});
  OracleConfig coarse;
  coarse.direction_resolution = 32;
  CHECK_THROWS_AS(oracle_minimal_time(up, v1(0.0), v1(1.0), coarse), Error);
  CHECK_THROWS_AS(oracle_minimal_time(up, v1(0.0), v2(1.0, 1.0)), Error);
}

TEST_CASE("level diameters match hand computations on the line") {
  // squared norm: the eps level set is [-sqrt(eps), sqrt(eps)]
  Problem quad = catalog_problem("quad");
  CHECK(oracle_level_diameter(quad, 0.01) == doctest::Approx(0.2).epsilon(1e-6));
  CHECK(oracle_level_diameter(quad, 0.0) == 0.0);

  // e^x on [0, 4]: level set [0, log(1+eps)]
  Problem expdir = catalog_problem("expdir");
  CHECK(oracle_level_diameter(expdir, 0.5) ==
        doctest::Approx(std::log(1.5)).epsilon(2e-3));

  // x^2 e^{-x}: generous cube-root envelope at small eps
  Problem x2exp = catalog_problem("x2exp");
  CHECK(oracle_level_diameter(x2exp, 0.001) <= 0.2);

  // double well: both wells belong to the level set, so the diameter
  // spans from -sqrt(1.1) to sqrt(1.1)
  Problem dw = catalog_problem("doublewell");
  CHECK(oracle_level_diameter(dw, 0.01) ==
        doctest::Approx(2.0 * std::sqrt(1.1)).epsilon(1e-3));

  CHECK_THROWS_AS(oracle_level_diameter(quad, -0.1), Error);
}

TEST_CASE("level diameter of a planar disc") {
  Problem p;
  p.dimension = 2;
  p.feasible = FeasibleSet::whole_space(2);
  p.f = Objective::builtin("quad");
  p.directions = DirectionSet::sphere(2);
  p.anchor = Vec::Zero(2);
  p.box_lo = Vec::Constant(2, -2.0);
  p.box_hi = Vec::Constant(2, 2.0);
  p.budget = 1600;
  p.seed = 1;
  const double diam = oracle_level_diameter(p, 1.0);
  CHECK(diam <= 2.0 + 1e-9);
  CHECK(diam >= 2.0 - 0.03);

  Vec e1 = Vec::Zero(3);
  e1[0] = 1.0;
  Problem q = p;
  q.dimension = 3;
  q.feasible = FeasibleSet::whole_space(3);
  q.directions = DirectionSet::from_generators({e1});
  q.anchor = Vec::Zero(3);
  q.box_lo = Vec::Constant(3, -2.0);
  q.box_hi = Vec::Constant(3, 2.0);
  CHECK_THROWS_AS(oracle_level_diameter(q, 0.1), Error);
}

TEST_CASE("level diameter respects an extended-value objective") {
  // objective finite on the x2 = 0 line only; the domain is the positive
  // x1 ray, so the eps level set is the segment [0, eps] x {0}
  Problem p = catalog_problem("l2fin2");
  const double diam = oracle_level_diameter(p, 0.5);
  const double fine_spacing = 6.0 / 430.0;  // ten-fold refinement of a 44-point axis
  CHECK(diam <= 0.5 + 1e-9);
  CHECK(diam >= 0.5 - fine_spacing);
}

TEST_CASE("variational search on e^x against the downhill cone") {
  Problem p = catalog_problem("expdir");

  OracleEkeland at_min = oracle_ekeland(p, v1(0.0), 0.5);
  REQUIRE(at_min.found);
  CHECK(at_min.point[0] == doctest::Approx(0.0));
  CHECK(at_min.f_value == doctest::Approx(1.0));

  // from 0.5 the whole reachable tail [0, 0.5] is dominated only at 0
  OracleEkeland from_half = oracle_ekeland(p, v1(0.5), 0.7);
  REQUIRE(from_half.found);
  CHECK(from_half.point[0] == doctest::Approx(0.0));

  CHECK(oracle_ekeland_confirms(p, v1(0.5), 0.7, v1(0.0)));
  // 0.4 violates the domination conclusion against y = 0
  CHECK_FALSE(oracle_ekeland_confirms(p, v1(0.5), 0.7, v1(0.4)));

  CHECK_THROWS_AS(oracle_ekeland(p, v1(0.0), 0.0), Error);
  Problem planar = catalog_problem("l2fin2");
  CHECK_THROWS_AS(oracle_ekeland(planar, Vec::Zero(2), 0.1), Error);
}
