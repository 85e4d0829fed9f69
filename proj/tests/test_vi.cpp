#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "dirwell/error.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/vi.hpp"

using namespace dirwell;

namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

Vec v2(double a, double b) {
  Vec v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

// V(x) = x on [-1,1], upward cone, anchored at the right endpoint so the
// directional region is the whole segment. The unique solution is 0.
std::string line_doc(double field_scale) {
  return std::string("{\"dimension\": 1,") +
         " \"f\": {\"expr\": 0.0, \"grad\": [0.0]}," +
         " \"V\": {\"affine\": {\"matrix\": [[" + std::to_string(field_scale) + "]]}}," +
         " \"M\": {\"generators\": [[1.0]]}," +
         " \"feasible\": {\"shape\": \"box\", \"lo\": [-1.0], \"hi\": [1.0]}," +
         " \"anchor\": [1.0]," +
         " \"sample_box\": {\"lo\": [-1.0], \"hi\": [1.0]}," +
         " \"budget\": 201, \"seed\": 5}";
}

}  // namespace

TEST_CASE("document parsing accepts exactly one field form") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  CHECK(vi.field.is_affine());
  CHECK(vi.field.eval(v1(0.25))[0] == doctest::Approx(0.25));
  CHECK(vi.base.dimension == 1);

  // no V at all
  CHECK_THROWS_AS(parse_vi_problem("{\"dimension\": 1,"
                                   " \"f\": {\"expr\": 0.0},"
                                   " \"M\": {\"generators\": [[1.0]]},"
                                   " \"feasible\": {\"shape\": \"whole_space\"},"
                                   " \"anchor\": [0.0],"
                                   " \"sample_box\": {\"lo\": [-1.0], \"hi\": [1.0]},"
                                   " \"budget\": 64, \"seed\": 1}"),
                  Error);
  // both forms at once
  CHECK_THROWS_AS(parse_vi_problem("{\"dimension\": 1,"
                                   " \"f\": {\"expr\": 0.0},"
                                   " \"V\": {\"affine\": {\"matrix\": [[1.0]]}, \"expr\": [0.0]},"
                                   " \"M\": {\"generators\": [[1.0]]},"
                                   " \"feasible\": {\"shape\": \"whole_space\"},"
                                   " \"anchor\": [0.0],"
                                   " \"sample_box\": {\"lo\": [-1.0], \"hi\": [1.0]},"
                                   " \"budget\": 64, \"seed\": 1}"),
                  Error);
  // field dimension does not match the problem
  CHECK_THROWS_AS(parse_vi_problem("{\"dimension\": 1,"
                                   " \"f\": {\"expr\": 0.0},"
                                   " \"V\": {\"affine\": {\"matrix\": [[1.0, 0.0], [0.0, 1.0]]}},"
                                   " \"M\": {\"generators\": [[1.0]]},"
                                   " \"feasible\": {\"shape\": \"whole_space\"},"
                                   " \"anchor\": [0.0],"
                                   " \"sample_box\": {\"lo\": [-1.0], \"hi\": [1.0]},"
                                   " \"budget\": 64, \"seed\": 1}"),
                  Error);
}

TEST_CASE("serialize and parse round-trip is stable") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  const std::string once = serialize_vi_problem(vi);
  VIProblem again = parse_vi_problem(once);
  CHECK(serialize_vi_problem(again) == once);
}

TEST_CASE("directional solutions of V(x) = x on the segment") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  SampleCloud cloud = sample_directional_region(vi.base);
  CHECK(directional_solution_check(vi, v1(0.0), cloud));
  CHECK_FALSE(directional_solution_check(vi, v1(0.5), cloud));
  CHECK_FALSE(directional_solution_check(vi, v1(-0.5), cloud));
  CHECK_THROWS_AS(directional_solution_check(vi, v1(2.0), cloud), Error);
}

TEST_CASE("strong sets are epsilon intervals for the linear field") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  SampleCloud cloud = sample_directional_region(vi.base);
  const double eps = 0.1;

  // unprimed: x belongs iff x <= eps
  CHECK(member_R(vi, cloud, v1(0.05), eps));
  CHECK(member_R(vi, cloud, v1(-0.7), eps));
  CHECK_FALSE(member_R(vi, cloud, v1(0.2), eps));
  CHECK(r_margin(vi, cloud, v1(0.2), eps) > 0.0);

  // primed: x belongs iff x >= -eps
  CHECK(member_Rp(vi, v1(-0.05), eps, cloud));
  CHECK(member_Rp(vi, v1(0.7), eps, cloud));
  CHECK_FALSE(member_Rp(vi, v1(-0.2), eps, cloud));

  // the Minty sets coincide with the strong ones here
  CHECK(member_S(vi, cloud, v1(0.05), eps));
  CHECK_FALSE(member_S(vi, cloud, v1(0.2), eps));
  CHECK(member_Sp(vi, v1(-0.05), eps, cloud));
  CHECK_FALSE(member_Sp(vi, v1(-0.2), eps, cloud));
}

TEST_CASE("Minty sets require a vanishing composite term") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  vi.base.g = Objective::builtin("quad");
  SampleCloud cloud = sample_directional_region(vi.base);
  CHECK_THROWS_AS(s_margin(vi, cloud, v1(0.0), 0.1), Error);
  CHECK_THROWS_AS(sp_margin(vi, v1(0.0), 0.1, cloud), Error);
}

TEST_CASE("agreement rate is perfect for a monotone linear field") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  SampleCloud cloud = sample_directional_region(vi.base);
  CHECK(minty_agreement(vi, 0.1, cloud) == doctest::Approx(1.0));
}

TEST_CASE("local membership lifts to the full set at a solution") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  SampleCloud cloud = sample_directional_region(vi.base);

  LocalLiftResult at_solution = local_lift_check(vi, v1(0.0), 0.1, 0.5, cloud);
  CHECK(at_solution.unprimed == LiftVerdict::pass);
  CHECK(at_solution.primed == LiftVerdict::pass);

  // at 0.5 the unprimed local inequality already fails, so the
  // implication holds vacuously; the primed side is a genuine pass
  LocalLiftResult off_solution = local_lift_check(vi, v1(0.5), 0.1, 0.4, cloud);
  CHECK(off_solution.unprimed == LiftVerdict::vacuous_pass);
  CHECK(off_solution.primed == LiftVerdict::pass);

  // below grid resolution the primed window is empty; the unprimed side
  // still sees the refinement tail the domain sampler lays toward x
  LocalLiftResult empty = local_lift_check(vi, v1(0.0), 0.1, 1e-6, cloud);
  CHECK(empty.unprimed == LiftVerdict::pass);
  CHECK(empty.primed == LiftVerdict::inconclusive);

  CHECK_THROWS_AS(local_lift_check(vi, v1(0.0), 0.1, 0.0, cloud), Error);

  CHECK(to_string(LiftVerdict::vacuous_pass) == "vacuous-pass");
}

TEST_CASE("report for V(x) = x: unique solution, shrinking primed sets") {
  VIProblem vi = parse_vi_problem(line_doc(1.0));
  VIReport report = vi_wellposedness_report(vi);

  CHECK(report.spacing == doctest::Approx(0.01));
  CHECK(report.monotone.pass);
  REQUIRE(report.candidate_found);
  CHECK(report.candidate[0] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(report.rp_sweep.verdict == SweepVerdict::shrinks);
  REQUIRE(report.rp_sweep.diameters.size() == kDefaultSchedule.size());
  for (std::size_t i = 1; i < report.rp_sweep.diameters.size(); ++i) {
    CHECK(report.rp_sweep.diameters[i] <= report.rp_sweep.diameters[i - 1] + 1e-12);
  }

  CHECK(report.cluster_count == 1);
  CHECK(report.cluster_diameter <= 2.0 * report.spacing);
  CHECK(report.unique_solution);
  CHECK(report.minty_rate == doctest::Approx(1.0));
  CHECK(report.verdict == OverallVerdict::well_posed);
}

TEST_CASE("report for V(x) = -x: three scattered solutions, no shrinkage") {
  VIProblem vi = parse_vi_problem(line_doc(-1.0));
  VIReport report = vi_wellposedness_report(vi);

  CHECK_FALSE(report.monotone.pass);
  CHECK(report.candidate_found);
  CHECK(report.rp_sweep.verdict == SweepVerdict::does_not_shrink);

  // the endpoints and the center all satisfy the defining inequality
  CHECK(report.cluster_count == 3);
  CHECK(report.cluster_diameter == doctest::Approx(2.0));
  CHECK_FALSE(report.unique_solution);
  CHECK(report.minty_rate < 0.5);
  CHECK(report.verdict == OverallVerdict::not_well_posed);
}

TEST_CASE("a monotone planar field agrees with its Minty relaxation") {
  VIProblem vi = parse_vi_problem(
      "{\"dimension\": 2,"
      " \"f\": {\"expr\": 0.0, \"grad\": [0.0, 0.0]},"
      " \"V\": {\"affine\": {\"matrix\": [[2.0, 0.0], [0.0, 1.0]]}},"
      " \"M\": {\"full_sphere\": true},"
      " \"feasible\": {\"shape\": \"box\", \"lo\": [-1.0, -1.0], \"hi\": [1.0, 1.0]},"
      " \"anchor\": [0.0, 0.0],"
      " \"sample_box\": {\"lo\": [-1.0, -1.0], \"hi\": [1.0, 1.0]},"
      " \"budget\": 400, \"seed\": 7}");
  SampleCloud cloud = sample_directional_region(vi.base);
  CHECK(directional_solution_check(vi, v2(0.0, 0.0), cloud));
  CHECK_FALSE(directional_solution_check(vi, v2(0.5, 0.5), cloud));
  CHECK(minty_agreement(vi, 0.1, cloud) >= 0.99);
}
