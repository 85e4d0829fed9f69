#include "dirwell/vi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"
#include "json_util.hpp"

namespace dirwell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAgreementBand = 10.0 * kTolAbs;

// Segment refinement of the Minty quantifier: the inequality at
// y_l = x + l(y-x) divided by l, so the same tolerance applies at every
// rung of the ladder.
constexpr double kLambdaLadder[] = {1.0,  1e-1, 1e-2, 1e-3, 1e-4, 1e-5,
                                    1e-6, 1e-7, 1e-8, 1e-9, 1e-10};

// Worst slack of lhs <= rhs under the shared membership tolerance.
double pair_slack(double lhs, double rhs) {
  return lhs - rhs - (kTolAbs + kTolRel * (std::abs(lhs) + std::abs(rhs)));
}

double composite_term(const VIProblem& vi, double gx, const Vec& y) {
  if (!vi.base.g) return 0.0;
  const double gy = vi.base.g->value(y);
  if (std::isinf(gy)) return -kInf;  // vacuous against any finite bound
  return gx - gy;
}

double g_at(const VIProblem& vi, const Vec& x) { return vi.base.g ? vi.base.g->value(x) : 0.0; }

// Strong-set slack of x against one opponent y, time measured y -> x for
// the unprimed set and x -> y for the primed one.
double strong_slack(const VIProblem& vi, const Vec& x, const Vec& vx, double gx, const Vec& y,
                    bool primed, double epsilon) {
  const ExtReal travel = primed ? minimal_time(vi.base.directions, x, y)
                                : minimal_time(vi.base.directions, y, x);
  if (!travel.is_finite()) return -kInf;
  const double extra = composite_term(vi, gx, y);
  if (std::isinf(extra) && extra < 0.0) return -kInf;
  return pair_slack(vx.dot(x - y) + extra, epsilon * travel.value());
}

double strong_margin(const VIProblem& vi, const std::vector<Vec>& ys, const Vec& x, bool primed,
                     double epsilon) {
  const Vec vx = vi.field.eval(x);
  const double gx = g_at(vi, x);
  double worst = -kInf;
  for (const Vec& y : ys) {
    worst = std::max(worst, strong_slack(vi, x, vx, gx, y, primed, epsilon));
  }
  return worst;
}

// Minty slack against one opponent, refined along the segment toward x;
// the normalized form keeps T out of the comparison.
double minty_slack(const VIProblem& vi, const Vec& x, const Vec& y, bool primed, double epsilon) {
  const ExtReal travel = primed ? minimal_time(vi.base.directions, x, y)
                                : minimal_time(vi.base.directions, y, x);
  if (!travel.is_finite()) return -kInf;
  const double dist = travel.value();
  if (dist == 0.0) return -kInf;
  double worst = -kInf;
  for (double lambda : kLambdaLadder) {
    const Vec y_l = x + lambda * (y - x);
    worst = std::max(worst, pair_slack(vi.field.eval(y_l).dot(x - y), epsilon * dist));
  }
  return worst;
}

double minty_margin(const VIProblem& vi, const std::vector<Vec>& ys, const Vec& x, bool primed,
                    double epsilon) {
  if (vi.base.g) {
    fail(Errc::unsupported_configuration, "Minty sets are defined for g identically 0");
  }
  double worst = -kInf;
  for (const Vec& y : ys) {
    worst = std::max(worst, minty_slack(vi, x, y, primed, epsilon));
  }
  return worst;
}

SweepVerdict shrink_verdict(const std::vector<double>& diameters, double floor) {
  bool nonincreasing = true;
  for (std::size_t i = 1; i < diameters.size(); ++i) {
    if (diameters[i] > diameters[i - 1] + 1e-12) nonincreasing = false;
  }
  if (nonincreasing && diameters.back() <= floor) return SweepVerdict::shrinks;
  if (diameters.back() > 10.0 * floor) return SweepVerdict::does_not_shrink;
  return SweepVerdict::inconclusive;
}

void check_schedule(const std::vector<double>& schedule) {
  if (schedule.size() < 4) fail(Errc::bad_argument, "schedule needs at least 4 values");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0)) fail(Errc::bad_argument, "schedule values must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      fail(Errc::bad_argument, "schedule must be strictly decreasing");
    }
  }
}

VectorField field_from(const jsonio::json& j, int dim) {
  jsonio::check_keys(j, "V", {"affine", "expr"});
  const bool has_affine = j.contains("affine");
  const bool has_expr = j.contains("expr");
  if (has_affine == has_expr) {
    fail(Errc::schema_violation, "V needs exactly one of affine or expr");
  }
  VectorField field;
  if (has_affine) {
    const auto& a = jsonio::require(j, "affine");
    jsonio::check_keys(a, "V.affine", {"matrix", "offset"});
    const Mat m = jsonio::mat_from(jsonio::require(a, "matrix"), "V.affine.matrix");
    Vec offset = Vec::Zero(m.rows());
    if (a.contains("offset")) offset = jsonio::vec_from(a["offset"], "V.affine.offset");
    field = VectorField::affine(m, offset);
  } else {
    field = VectorField::from_exprs(jsonio::expr_list_from(j["expr"], "V.expr"));
  }
  if (field.dim() > dim || (field.is_affine() && field.dim() != dim)) {
    fail(Errc::dimension_mismatch, "V does not match the problem dimension");
  }
  return field;
}

jsonio::json field_to(const VectorField& field) {
  jsonio::json j;
  if (field.is_affine()) {
    j["affine"]["matrix"] = jsonio::mat_to(field.matrix());
    j["affine"]["offset"] = jsonio::vec_to(field.offset());
  } else {
    auto arr = jsonio::json::array();
    for (const Expr& e : field.exprs()) arr.push_back(jsonio::expr_to(e));
    j["expr"] = std::move(arr);
  }
  return j;
}

}  // namespace

std::string to_string(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::pass: return "pass";
    case LiftVerdict::vacuous_pass: return "vacuous-pass";
    case LiftVerdict::fail: return "fail";
    case LiftVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

VIProblem parse_vi_problem(const std::string& text) {
  const jsonio::json j = jsonio::parse_text(text);
  VIProblem vi;
  vi.base = jsonio::problem_from(j, {"V"});
  if (!j.contains("V")) fail(Errc::schema_violation, "VI document needs a V field");
  vi.field = field_from(j["V"], vi.base.dimension);
  return vi;
}

VIProblem load_vi_problem(const std::string& path) {
  return parse_vi_problem(jsonio::read_file(path));
}

std::string serialize_vi_problem(const VIProblem& vi) {
  jsonio::json j = jsonio::problem_to(vi.base);
  j["V"] = field_to(vi.field);
  return j.dump(2) + "\n";
}

bool directional_solution_check(const VIProblem& vi, const Vec& xbar, const SampleCloud& cloud) {
  if (!vi.base.feasible.contains(xbar)) {
    fail(Errc::precondition_violation, "candidate is not feasible");
  }
  const Vec vx = vi.field.eval(xbar);
  const double gx = g_at(vi, xbar);
  if (std::isinf(gx)) return false;
  for (const Vec& y : cloud.points) {
    const double extra = composite_term(vi, gx, y);
    if (std::isinf(extra) && extra < 0.0) continue;
    if (!leq_tol(vx.dot(xbar - y) + extra, 0.0)) return false;
  }
  return true;
}

double r_margin(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon) {
  return strong_margin(vi, sample_domain_of(vi.base, cloud, x), x, false, epsilon);
}

double rp_margin(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud) {
  return strong_margin(vi, cloud.points, x, true, epsilon);
}

double s_margin(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon) {
  return minty_margin(vi, sample_domain_of(vi.base, cloud, x), x, false, epsilon);
}

double sp_margin(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud) {
  return minty_margin(vi, cloud.points, x, true, epsilon);
}

bool member_R(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon) {
  return r_margin(vi, cloud, x, epsilon) <= 0.0;
}

bool member_Rp(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud) {
  return rp_margin(vi, x, epsilon, cloud) <= 0.0;
}

bool member_S(const VIProblem& vi, const SampleCloud& cloud, const Vec& x, double epsilon) {
  return s_margin(vi, cloud, x, epsilon) <= 0.0;
}

bool member_Sp(const VIProblem& vi, const Vec& x, double epsilon, const SampleCloud& cloud) {
  return sp_margin(vi, x, epsilon, cloud) <= 0.0;
}

double minty_agreement(const VIProblem& vi, double epsilon, const SampleCloud& cloud) {
  if (cloud.points.empty()) fail(Errc::bad_argument, "agreement needs a nonempty cloud");
  std::size_t agreed = 0;
  for (const Vec& x : cloud.points) {
    const std::vector<Vec> local = sample_domain_of(vi.base, cloud, x);
    const double mr = strong_margin(vi, local, x, false, epsilon);
    const double ms = minty_margin(vi, local, x, false, epsilon);
    const double mrp = strong_margin(vi, cloud.points, x, true, epsilon);
    const double msp = minty_margin(vi, cloud.points, x, true, epsilon);
    auto pair_agrees = [](double a, double b) {
      if ((a <= 0.0) == (b <= 0.0)) return true;
      return std::abs(a) <= kAgreementBand && std::abs(b) <= kAgreementBand;
    };
    if (pair_agrees(mr, ms) && pair_agrees(mrp, msp)) ++agreed;
  }
  return static_cast<double>(agreed) / static_cast<double>(cloud.points.size());
}

LocalLiftResult local_lift_check(const VIProblem& vi, const Vec& xbar, double epsilon, double tbar,
                                 const SampleCloud& cloud) {
  if (!(tbar > 0.0)) fail(Errc::bad_argument, "tbar must be positive");
  LocalLiftResult out;
  const Vec vx = vi.field.eval(xbar);
  const double gx = g_at(vi, xbar);

  auto run = [&](bool primed) {
    const std::vector<Vec> ys =
        primed ? cloud.points : sample_domain_of(vi.base, cloud, xbar);
    std::size_t local_count = 0;
    bool local_ok = true;
    for (const Vec& y : ys) {
      const ExtReal travel = primed ? minimal_time(vi.base.directions, xbar, y)
                                    : minimal_time(vi.base.directions, y, xbar);
      if (!travel.is_finite()) continue;
      const double t = travel.value();
      const bool in_window = primed ? t < tbar : t <= tbar;
      if (!in_window || t == 0.0) continue;
      ++local_count;
      const double extra = composite_term(vi, gx, y);
      if (std::isinf(extra) && extra < 0.0) continue;
      if (!leq_tol(vx.dot(xbar - y) + extra, epsilon * t)) local_ok = false;
    }
    if (local_count == 0) return LiftVerdict::inconclusive;
    if (!local_ok) return LiftVerdict::vacuous_pass;
    const double margin = strong_margin(vi, ys, xbar, primed, epsilon);
    return margin <= 0.0 ? LiftVerdict::pass : LiftVerdict::fail;
  };
  out.unprimed = run(false);
  out.primed = run(true);
  return out;
}

VIReport vi_wellposedness_report(const VIProblem& vi, const std::vector<double>& schedule) {
  check_schedule(schedule);
  const SampleCloud cloud = sample_directional_region(vi.base);

  VIReport report;
  report.spacing = cloud.spacing;
  report.schedule = schedule;
  report.window_note = "within the sampled window";
  report.monotone =
      monotonicity_spotcheck(vi.field, vi.base.box_lo, vi.base.box_hi, 200, vi.base.seed);

  // Intersection over the schedule: the strong sets grow with epsilon, so
  // membership at the smallest value decides.
  const double eps_min = schedule.back();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (member_R(vi, cloud, cloud.points[i], eps_min)) candidates.push_back(i);
  }

  if (!candidates.empty()) {
    // Best candidate: the one closest to a directional solution, i.e.
    // with the smallest worst-case defining value over the cloud.
    double best_score = kInf;
    std::size_t best = candidates.front();
    for (std::size_t i : candidates) {
      const Vec& x = cloud.points[i];
      const Vec vx = vi.field.eval(x);
      const double gx = g_at(vi, x);
      double score = -kInf;
      if (std::isinf(gx)) {
        score = kInf;
      } else {
        for (const Vec& y : cloud.points) {
          const double extra = composite_term(vi, gx, y);
          if (std::isinf(extra) && extra < 0.0) continue;
          score = std::max(score, vx.dot(x - y) + extra);
        }
      }
      if (score < best_score) {
        best_score = score;
        best = i;
      }
    }
    report.candidate_found = true;
    report.candidate = cloud.points[best];
  }

  if (report.candidate_found) {
    // The primed sweep is anchored at the candidate; reuse the cloud when
    // the candidate is the anchor itself.
    const SampleCloud* sweep_cloud = &cloud;
    SampleCloud rebuilt;
    if (report.candidate != cloud.anchor) {
      Problem shifted = vi.base;
      shifted.anchor = report.candidate;
      rebuilt = sample_directional_region(shifted);
      sweep_cloud = &rebuilt;
    }
    report.rp_sweep.epsilons = schedule;
    report.rp_sweep.floor = std::max(4.0 * sweep_cloud->spacing, 1e-6);
    for (double eps : schedule) {
      std::vector<char> marks(sweep_cloud->points.size());
      std::size_t count = 0;
      for (std::size_t i = 0; i < sweep_cloud->points.size(); ++i) {
        const bool in = member_Rp(vi, sweep_cloud->points[i], eps, *sweep_cloud);
        marks[i] = in ? 1 : 0;
        if (in) ++count;
      }
      report.rp_sweep.member_counts.push_back(count);
      report.rp_sweep.diameters.push_back(
          diameter_if(*sweep_cloud, [&](std::size_t i) { return marks[i] != 0; }));
    }
    report.rp_sweep.verdict = shrink_verdict(report.rp_sweep.diameters, report.rp_sweep.floor);
  }

  // Directional solutions, clustered at grid resolution.
  std::vector<std::size_t> sols;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (directional_solution_check(vi, cloud.points[i], cloud)) sols.push_back(i);
  }
  if (!sols.empty()) {
    const double radius = 2.0 * cloud.spacing;
    std::vector<int> label(sols.size(), -1);
    int next = 0;
    for (std::size_t a = 0; a < sols.size(); ++a) {
      if (label[a] >= 0) continue;
      label[a] = next;
      std::vector<std::size_t> queue{a};
      while (!queue.empty()) {
        const std::size_t cur = queue.back();
        queue.pop_back();
        for (std::size_t b = 0; b < sols.size(); ++b) {
          if (label[b] >= 0) continue;
          if ((cloud.points[sols[cur]] - cloud.points[sols[b]]).norm() <= radius) {
            label[b] = next;
            queue.push_back(b);
          }
        }
      }
      report.solutions.push_back(cloud.points[sols[a]]);
      ++next;
    }
    report.cluster_count = static_cast<std::size_t>(next);
    std::vector<Vec> sol_points;
    sol_points.reserve(sols.size());
    for (std::size_t i : sols) sol_points.push_back(cloud.points[i]);
    report.cluster_diameter = diameter(sol_points);
    report.unique_solution = next == 1 && report.cluster_diameter <= radius;
  }

  if (!vi.base.g) report.minty_rate = minty_agreement(vi, eps_min, cloud);

  if (!report.candidate_found) {
    report.verdict = OverallVerdict::not_well_posed;
  } else if (report.rp_sweep.verdict == SweepVerdict::shrinks) {
    report.verdict = OverallVerdict::well_posed;
  } else if (report.rp_sweep.verdict == SweepVerdict::does_not_shrink) {
    report.verdict = OverallVerdict::not_well_posed;
  } else {
    report.verdict = OverallVerdict::inconclusive;
  }
  return report;
}

}  // namespace dirwell
