#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dirwell/catalog.hpp"
#include "dirwell/ekeland.hpp"
#include "dirwell/error.hpp"
#include "dirwell/oracle.hpp"
#include "dirwell/sample_cloud.hpp"

using namespace dirwell;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

}  // namespace

TEST_CASE("descent set membership") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  // y in F(x) iff f(y) + sqrt_eps * T(x, y) <= f(x)
  CHECK(member_F(p, v1(0.1), v1(0.0), 0.1));   // 0 + 0.1*0.1 <= 0.01
  CHECK(member_F(p, v1(0.1), v1(0.1), 0.1));   // x itself, equality
  CHECK_FALSE(member_F(p, v1(0.1), v1(0.5), 0.1));
}

TEST_CASE("squared norm from x0 = 0.1: one descent step to the minimizer") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  EkelandResult r = ekeland_point(p, cloud, v1(0.1), 0.01);
  CHECK(r.x_eps[0] >= 0.0);
  CHECK(r.x_eps[0] <= 0.1);
  CHECK(r.iterations >= 1);
  CHECK(r.trace.front() == v1(0.1));
  CHECK(r.trace.back() == r.x_eps);
  CHECK(r.residual_i >= -1e-9);
  CHECK(r.residual_ii >= -1e-9);
  CHECK(r.violations_iii == 0);

  EkelandVerification v = verify_ekeland(r, p, cloud);
  CHECK(v.pass);
  CHECK(v.telescoping_ok);

  CHECK(oracle_ekeland_confirms(p, v1(0.1), 0.01, r.x_eps));
}

TEST_CASE("monotone objective along a one-sided cone keeps x0") {
  // x2exp with M = {1}: from x0 = 0.3 every reachable descent candidate
  // sits left of 0.3 where f grows toward the anchor side; the start is
  // already the selected point.
  Problem p = catalog_problem("x2exp");
  SampleCloud cloud = sample_directional_region(p);
  EkelandResult r = ekeland_point(p, cloud, v1(0.3), 0.09);
  CHECK(r.x_eps == v1(0.3));
  CHECK(r.iterations == 0);
  CHECK(verify_ekeland(r, p, cloud).pass);
  CHECK(oracle_ekeland_confirms(p, v1(0.3), 0.09, r.x_eps));
}

TEST_CASE("default start is the sampled argmin") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  EkelandResult r = ekeland_point(p, cloud, 0.01);
  CHECK(r.start == cloud_infimum(cloud).point);
  CHECK(r.iterations == 0);  // an argmin is already the answer
  CHECK(r.x_eps == r.start);
}

TEST_CASE("preconditions are enforced") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  CHECK_THROWS_AS(ekeland_point(p, cloud, v1(0.1), 0.0), Error);
  CHECK_THROWS_AS(ekeland_point(p, cloud, v1(0.1), -1.0), Error);
  // x0 = 1 is not an eps-minimizer for eps = 0.01 (f = 1 > 0.01)
  CHECK_THROWS_AS(ekeland_point(p, cloud, v1(1.0), 0.01), Error);

  // start outside the directional region: 0.6 is above the anchor 0.5 and
  // the cone only points upward, so the anchor cannot be reached from it
  Problem q = catalog_problem("x2exp");
  SampleCloud qcloud = sample_directional_region(q);
  CHECK_THROWS_AS(ekeland_point(q, qcloud, v1(0.6), 0.5), Error);

  // infeasible start
  Problem b = catalog_problem("quad");
  b.feasible = FeasibleSet::box(v1(-1.0), v1(1.0));
  SampleCloud bcloud = sample_directional_region(b);
  CHECK_THROWS_AS(ekeland_point(b, bcloud, v1(1.5), 100.0), Error);
}

TEST_CASE("the corollary holds for smooth convex objectives") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  EkelandResult r = ekeland_point(p, cloud, v1(0.1), 0.01);
  CHECK(corollary_violations(r, p, cloud) == 0);
}

TEST_CASE("iteration count and trace values descend") {
  Problem p = catalog_problem("doublewell");
  SampleCloud cloud = sample_directional_region(p);
  // anchor is 1; start just off the well with a generous eps
  EkelandResult r = ekeland_point(p, cloud, v1(1.2), 0.2);
  CHECK(verify_ekeland(r, p, cloud).pass);
  for (std::size_t k = 1; k < r.trace.size(); ++k) {
    CHECK(p.f.value(r.trace[k]) <= p.f.value(r.trace[k - 1]) + 1e-12);
  }
}

TEST_CASE("oracle search agrees with the theorem on its own") {
  Problem p = catalog_problem("x2exp");
  OracleEkeland o = oracle_ekeland(p, v1(0.3), 0.09);
  REQUIRE(o.found);
  CHECK(o.point[0] == doctest::Approx(0.3).epsilon(1e-6));

  Problem q = catalog_problem("quad");
  OracleEkeland oq = oracle_ekeland(q, v1(0.1), 0.01);
  REQUIRE(oq.found);
  CHECK(oq.point[0] >= -1e-9);
  CHECK(oq.point[0] <= 0.1 + 1e-9);
}
