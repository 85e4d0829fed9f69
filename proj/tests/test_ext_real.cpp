#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "dirwell/ext_real.hpp"

using dirwell::ExtReal;

TEST_CASE("default and factory states") {
  ExtReal zero;
  CHECK(zero.is_finite());
  CHECK(zero.value() == 0.0);

  ExtReal t = ExtReal::finite(2.5);
  CHECK(t.is_finite());
  CHECK(t.value() == 2.5);
  CHECK(t.raw() == 2.5);

  ExtReal inf = ExtReal::infinity();
  CHECK_FALSE(inf.is_finite());
  CHECK(inf.raw() == std::numeric_limits<double>::infinity());
  CHECK(inf.value_or(-1.0) == -1.0);
  CHECK(t.value_or(-1.0) == 2.5);
}

TEST_CASE("addition absorbs infinity") {
  ExtReal a = ExtReal::finite(1.0);
  ExtReal inf = ExtReal::infinity();
  CHECK((a + a).value() == 2.0);
  CHECK_FALSE((a + inf).is_finite());
  CHECK_FALSE((inf + a).is_finite());
  CHECK_FALSE((inf + inf).is_finite());
}

TEST_CASE("scalar multiplication keeps the state, except 0 * inf") {
  ExtReal inf = ExtReal::infinity();
  CHECK_FALSE((2.0 * inf).is_finite());
  // The sweep code multiplies epsilon by travel times; epsilon = 0 must
  // give a zero bound even against unreachable points.
  CHECK((0.0 * inf).value() == 0.0);
  CHECK((0.5 * ExtReal::finite(3.0)).value() == 1.5);
  CHECK((0.0 * ExtReal::finite(3.0)).value() == 0.0);
}

TEST_CASE("total order with infinity on top") {
  ExtReal a = ExtReal::finite(1.0);
  ExtReal b = ExtReal::finite(2.0);
  ExtReal inf = ExtReal::infinity();
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= a);
  CHECK(a < inf);
  CHECK(inf > b);
  CHECK(inf == ExtReal::infinity());
  CHECK(inf <= inf);
  CHECK(a != b);

  CHECK(a <= 1.0);
  CHECK_FALSE(inf <= 1e300);
  CHECK(1.0 <= b);
}
