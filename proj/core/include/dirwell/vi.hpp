#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirwell/certificates.hpp"
#include "dirwell/problem.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/spot_checks.hpp"
#include "dirwell/types.hpp"
#include "dirwell/vector_field.hpp"

namespace dirwell {

// Variational-inequality instance: find x in A with
// <V(x), x-y> + g(x) - g(y) <= 0 against the directional region. The
// composite term g lives on the base problem.
struct VIProblem {
  Problem base;
  VectorField field;
};

VIProblem parse_vi_problem(const std::string& text);
VIProblem load_vi_problem(const std::string& path);
std::string serialize_vi_problem(const VIProblem& vi);

// True iff <V(xbar), xbar-y> + g(xbar) - g(y) <= 0 within tolerance for
// every cloud point.
bool directional_solution_check(const VIProblem& vi, const Vec& xbar, const SampleCloud& cloud);

// Membership in the strong sets (V at the candidate) and the Minty sets
// (V at the opposing point). Unprimed versions quantify over an
// on-demand sample of D_x, primed over the cloud. The margin variants
// return the worst tolerance-adjusted slack; membership is margin <= 0.
double r_margin(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon);
double rp_margin(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud);
double s_margin(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon);
double sp_margin(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud);

bool member_R(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon);
bool member_Rp(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud);
bool member_S(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon);
bool member_Sp(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud);

// Fraction of cloud points where the strong and Minty memberships agree,
// both unprimed and primed; disagreements whose margins sit within ten
// times the absolute tolerance count as agreements.
double minty_agreement(const VIProblem& vi, double epsilon, const SampleCloud& cloud);

enum class LiftVerdict { pass, vacuous_pass, fail, inconclusive };
std::string to_string(LiftVerdict v);

struct LocalLiftResult {
  LiftVerdict unprimed = LiftVerdict::inconclusive;
  LiftVerdict primed = LiftVerdict::inconclusive;
};

// Checks the local-to-global membership implication: if the defining
// inequality holds on the sub-cloud within travel time tbar of xbar, the
// full membership must hold too. A failing local hypothesis gives a
// vacuous pass, an empty sub-cloud is inconclusive.
LocalLiftResult local_lift_check(const VIProblem& vi, const Vec& xbar, double epsilon, double tbar,
                                 const SampleCloud& cloud);

struct VISweep {
  std::vector<double> epsilons;
  std::vector<double> diameters;
  std::vector<std::size_t> member_counts;
  SweepVerdict verdict = SweepVerdict::inconclusive;
  double floor = 0.0;
};

struct VIReport {
  double spacing = 0.0;
  std::vector<double> schedule;
  SpotCheck monotone;
  std::string hemicontinuity = "assumed (field is continuous by construction)";
  bool candidate_found = false;
  Vec candidate;
  VISweep rp_sweep;  // diameters of the primed strong set at the candidate
  std::vector<Vec> solutions;  // one representative per cluster
  std::size_t cluster_count = 0;
  double cluster_diameter = 0.0;
  bool unique_solution = false;
  double minty_rate = 0.0;
  OverallVerdict verdict = OverallVerdict::inconclusive;
  std::string window_note;
};

// Scans the cloud for points inside every strong set of the schedule
// (the smallest epsilon decides), sweeps the primed set anchored at the
// best candidate, clusters directional solutions at radius 2*spacing,
// and records the Minty agreement rate at the smallest epsilon.
VIReport vi_wellposedness_report(const VIProblem& vi,
                                 const std::vector<double>& schedule = kDefaultSchedule);

}  // namespace dirwell
