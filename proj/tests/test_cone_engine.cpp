#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"

using namespace dirwell;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

DirectionSet axis_cone_2d() { return DirectionSet::from_generators({v2(1, 0), v2(0, 1)}); }

}  // namespace

TEST_CASE("cone membership against single generators and sums") {
  DirectionSet e1 = DirectionSet::from_generators({v2(1, 0)});
  CHECK(cone_contains(e1, v2(3, 0)));
  CHECK_FALSE(cone_contains(e1, v2(-1, 0)));
  CHECK(cone_contains(e1, Vec::Zero(2)));

  DirectionSet axes = axis_cone_2d();
  CHECK(cone_contains(axes, v2(1, 1)));
  CHECK_FALSE(cone_contains(axes, v2(1, -0.5)));
}

TEST_CASE("non-unit generators are rejected at construction") {
  CHECK_THROWS_AS(DirectionSet::from_generators({v2(1, 1)}), Error);
  CHECK_THROWS_AS(DirectionSet::from_generators({v1(0.0)}), Error);
}

TEST_CASE("minimal time: norm on the domain, +inf off it") {
  DirectionSet one = DirectionSet::from_generators({v1(1)});
  CHECK(minimal_time(one, v1(0), v1(0.5)).value() == doctest::Approx(0.5));
  CHECK(minimal_time(one, v1(0.5), v1(0.5)).value() == 0.0);
  CHECK_FALSE(minimal_time(one, v1(1), v1(0.5)).is_finite());

  DirectionSet sphere = DirectionSet::sphere(2);
  CHECK(minimal_time(sphere, v2(0, 0), v2(3, 4)).value() == doctest::Approx(5.0));
}

TEST_CASE("domain membership matches the worked 1-D region") {
  // x = 0.5 with M = {1}: the domain is everything at or left of 0.5.
  DirectionSet one = DirectionSet::from_generators({v1(1)});
  CHECK(domain_contains(one, v1(-3), v1(0.5)));
  CHECK(domain_contains(one, v1(0.5), v1(0.5)));
  CHECK_FALSE(domain_contains(one, v1(0.6), v1(0.5)));

  CHECK(domain_contains(DirectionSet::sphere(2), v2(9, -4), v2(0, 0)));
}

TEST_CASE("dimension mismatch raises the input error") {
  DirectionSet one = DirectionSet::from_generators({v1(1)});
  CHECK_THROWS_AS(cone_contains(one, v2(1, 0)), Error);
  CHECK_THROWS_AS(minimal_time(one, v1(0), v2(1, 0)), Error);
}

TEST_CASE("minimal time to a set takes the reachable minimum") {
  DirectionSet one = DirectionSet::from_generators({v1(1)});
  CHECK(minimal_time_to_set(one, v1(0), {v1(0.5), v1(2)}).value() == doctest::Approx(0.5));
  CHECK_FALSE(minimal_time_to_set(one, v1(3), {v1(0.5), v1(2)}).is_finite());
  CHECK_FALSE(minimal_time_to_set(one, v1(0), {}).is_finite());

  DirectionSet sphere = DirectionSet::sphere(2);
  CHECK(minimal_time_to_set(sphere, v2(0, 0), {v2(3, 4), v2(0, 1)}).value() ==
        doctest::Approx(1.0));
}

TEST_CASE("enlargement membership") {
  DirectionSet one = DirectionSet::from_generators({v1(1)});
  CHECK(enlargement_contains(one, {v1(1)}, 0.5, v1(0.6)));
  CHECK_FALSE(enlargement_contains(one, {v1(1)}, 0.5, v1(1.2)));
  CHECK(enlargement_contains(DirectionSet::sphere(2), {v2(0, 0)}, 1.0, v2(0.6, 0.8)));
}

TEST_CASE("zero law within tolerance") {
  DirectionSet axes = axis_cone_2d();
  CHECK(minimal_time(axes, v2(1, 2), v2(1, 2)).value() == 0.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    Vec y = v2(u(rng), u(rng));
    Vec x = y + v2(0.3, 0.1);  // inside the axis cone, so finite and nonzero
    ExtReal t = minimal_time(axes, y, x);
    REQUIRE(t.is_finite());
    CHECK(t.value() > 0.1);
  }
}

TEST_CASE("triangle inequality on chained displacements") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(0.1, 1.5);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  DirectionSet M = DirectionSet::from_generators(
      {v2(1, 0), v2(std::sqrt(0.5), std::sqrt(0.5))});
  for (int i = 0; i < 100; ++i) {
    Vec x = v2(coord(rng), coord(rng));
    Vec y = x + coef(rng) * M.generators[0] + coef(rng) * M.generators[1];
    Vec z = y + coef(rng) * M.generators[0] + coef(rng) * M.generators[1];
    ExtReal xy = minimal_time(M, x, y);
    ExtReal yz = minimal_time(M, y, z);
    ExtReal xz = minimal_time(M, x, z);
    REQUIRE(xy.is_finite());
    REQUIRE(yz.is_finite());
    REQUIRE(xz.is_finite());
    CHECK(xz.value() <= xy.value() + yz.value() + 1e-9);
  }
}

TEST_CASE("boundary displacements respect the relative tolerance") {
  DirectionSet e1 = DirectionSet::from_generators({v2(1, 0)});
  // Just inside the tolerance band: still a member.
  CHECK(cone_contains(e1, v2(1, 5e-10)));
  // Far outside the band: rejected even though the ray is close.
  CHECK_FALSE(cone_contains(e1, v2(1, 1e-3)));
}
