#include "dirwell/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"
#include "dirwell/rng.hpp"

namespace dirwell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// lhs <= eps * T + extra, vacuous when the travel time is infinite.
bool quantified_leq(double lhs, double eps, ExtReal travel, double extra) {
  if (!travel.is_finite()) return true;
  return leq_tol(lhs, eps * travel.value() + extra);
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

SweepVerdict shrink_verdict(const std::vector<double>& diameters, double floor) {
  bool nonincreasing = true;
  for (std::size_t i = 1; i < diameters.size(); ++i) {
    if (diameters[i] > diameters[i - 1] + 1e-12) nonincreasing = false;
  }
  const double final_d = diameters.back();
  if (nonincreasing && final_d <= floor) return SweepVerdict::shrinks;
  if (final_d > 10.0 * floor) return SweepVerdict::does_not_shrink;
  return SweepVerdict::inconclusive;
}

// Unit directions into the cone, shared across slice offsets: the
// coordinate circle/sphere when M is full, otherwise normalized convex
// combinations of the generators on a simplex grid of about 64 nodes.
std::vector<Vec> slice_directions(const Problem& p) {
  const DirectionSet& M = p.directions;
  const int n = p.dimension;
  std::vector<Vec> dirs;
  if (M.full_sphere) {
    if (n == 1) {
      dirs.push_back(Vec::Constant(1, 1.0));
      dirs.push_back(Vec::Constant(1, -1.0));
    } else if (n == 2) {
      for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * M_PI * k / 64.0;
        Vec u(2);
        u << std::cos(phi), std::sin(phi);
        dirs.push_back(u);
      }
    } else {
      auto rng = make_rng(p.seed, "slice-directions");
      std::normal_distribution<double> gauss(0.0, 1.0);
      while (dirs.size() < 64) {
        Vec u(n);
        for (int i = 0; i < n; ++i) u[i] = gauss(rng);
        const double norm = u.norm();
        if (norm > 1e-9) dirs.push_back(u / norm);
      }
    }
    return dirs;
  }

  const std::size_t k = M.generators.size();
  if (k == 1) return {M.generators[0]};

  // Smallest simplex resolution whose node count reaches 64.
  std::size_t m = 1;
  auto node_count = [&](std::size_t res) {
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i) c = c * (res + i) / i;
    return c;
  };
  while (node_count(m) < 64.0) ++m;

  std::set<std::vector<double>> seen;
  std::vector<std::size_t> w(k, 0);
  std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == k) {
      w[pos] = left;
      Vec u = Vec::Zero(n);
      for (std::size_t i = 0; i < k; ++i) {
        u += (static_cast<double>(w[i]) / static_cast<double>(m)) * M.generators[i];
      }
      const double norm = u.norm();
      if (norm > 1e-9) {
        u /= norm;
        std::vector<double> key(u.data(), u.data() + u.size());
        if (seen.insert(std::move(key)).second) dirs.push_back(u);
      }
      return;
    }
    for (std::size_t take = 0; take <= left; ++take) {
      w[pos] = take;
      emit(pos + 1, left - take);
    }
  };
  emit(0, m);
  return dirs;
}

// Secant bound on f around the anchor, from cached cloud values.
double lipschitz_estimate(const SampleCloud& cloud, double f_anchor) {
  double best = 0.0;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (!std::isfinite(cloud.values[i])) continue;
    const double dist = (cloud.points[i] - cloud.anchor).norm();
    if (dist < 1e-12) continue;
    best = std::max(best, std::abs(cloud.values[i] - f_anchor) / dist);
  }
  return best > 0.0 ? best : 1.0;
}

Agreement agree_of(ProfileVerdict prof, SweepVerdict sweep) {
  const bool adm = prof == ProfileVerdict::admissible;
  const bool not_adm = prof == ProfileVerdict::not_admissible;
  const bool shr = sweep == SweepVerdict::shrinks;
  const bool dns = sweep == SweepVerdict::does_not_shrink;
  if ((adm && shr) || (not_adm && dns)) return Agreement::agree;
  if ((adm && dns) || (not_adm && shr)) return Agreement::disagree;
  return Agreement::inconclusive;
}

Agreement relation_of(SweepVerdict a, SweepVerdict b) {
  if (a == SweepVerdict::inconclusive || b == SweepVerdict::inconclusive) {
    return Agreement::inconclusive;
  }
  return a == b ? Agreement::agree : Agreement::disagree;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::G: return "G";
    case Family::Gp: return "Gp";
    case Family::H: return "H";
    case Family::Hp: return "Hp";
    case Family::P: return "P";
    case Family::Pp: return "Pp";
    case Family::Q: return "Q";
  }
  fail(Errc::bad_argument, "unknown family");
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::L, Family::G, Family::Gp, Family::H, Family::Hp, Family::P, Family::Pp,
                   Family::Q}) {
    if (family_name(f) == name) return f;
  }
  fail(Errc::bad_argument, "unknown family name: " + name);
}

std::string to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::shrinks: return "shrinks";
    case SweepVerdict::does_not_shrink: return "does-not-shrink";
    case SweepVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::well_posed: return "well-posed";
    case OverallVerdict::not_well_posed: return "not-well-posed";
    case OverallVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(ProfileVerdict v) {
  switch (v) {
    case ProfileVerdict::admissible: return "admissible";
    case ProfileVerdict::not_admissible: return "not-admissible";
    case ProfileVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Agreement v) {
  switch (v) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<Vec> sample_domain_of(const Problem& p, const SampleCloud& cloud, const Vec& x,
                                  std::size_t cap) {
  if (p.directions.full_sphere) return cloud.points;

  std::set<std::vector<double>> seen;
  std::vector<Vec> ys;
  auto push_unique = [&](const Vec& y) {
    std::vector<double> key(y.data(), y.data() + y.size());
    if (seen.insert(std::move(key)).second) ys.push_back(y);
  };

  push_unique(x);
  for (const Vec& y : cloud.points) {
    if (ys.size() >= cap) break;
    if (domain_contains(p.directions, y, x)) push_unique(y);
  }

  if (ys.size() < cap) {
    const std::size_t per = (cap - ys.size()) / p.directions.generators.size();
    for (const Vec& dir : p.directions.generators) {
      const double t_exit = box_exit_time(x, dir, p.box_lo, p.box_hi);
      if (t_exit <= 1e-9) continue;
      const std::size_t nu = per * 6 / 10;
      const std::size_t ng = per - nu;
      for (std::size_t j = 1; j <= nu && ys.size() < cap; ++j) {
        const Vec y = x - (t_exit * static_cast<double>(j) / static_cast<double>(nu)) * dir;
        if (p.feasible.contains(y)) push_unique(y);
      }
      if (ng > 0) {
        const double ratio = std::pow(1e-9 / t_exit, 1.0 / static_cast<double>(ng));
        double t = t_exit;
        for (std::size_t j = 1; j <= ng && ys.size() < cap; ++j) {
          t *= ratio;
          const Vec y = x - t * dir;
          if (p.feasible.contains(y)) push_unique(y);
        }
      }
    }
  }
  return ys;
}

bool member_L(const Problem& p, const Vec& x, const FamilyParams& prm) {
  return leq_tol(p.f.value(x), prm.surrogate_inf + prm.epsilon);
}

bool member_G(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon) {
  const double fx = p.f.value(x);
  for (const Vec& y : sample_domain_of(p, cloud, x)) {
    const ExtReal travel = minimal_time(p.directions, y, x);
    if (!quantified_leq(fx, epsilon, travel, p.f.value(y))) return false;
  }
  return true;
}

bool member_Gp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud) {
  const double fx = p.f.value(x);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const ExtReal travel = minimal_time(p.directions, x, cloud.points[i]);
    if (!quantified_leq(fx, prm.epsilon, travel, cloud.values[i])) return false;
  }
  return true;
}

bool member_H(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon) {
  const Vec grad = p.f.gradient(x);
  for (const Vec& y : sample_domain_of(p, cloud, x)) {
    const ExtReal travel = minimal_time(p.directions, y, x);
    if (!quantified_leq(grad.dot(x - y), epsilon, travel, 0.0)) return false;
  }
  return true;
}

bool member_Hp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud) {
  const Vec grad = p.f.gradient(x);
  for (const Vec& y : cloud.points) {
    const ExtReal travel = minimal_time(p.directions, x, y);
    if (!quantified_leq(grad.dot(x - y), prm.epsilon, travel, 0.0)) return false;
  }
  return true;
}

bool member_P(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon) {
  if (!p.g) fail(Errc::precondition_violation, "composite membership needs g");
  const Vec grad = p.f.gradient(x);
  const double gx = p.g->value(x);
  for (const Vec& y : sample_domain_of(p, cloud, x)) {
    const ExtReal travel = minimal_time(p.directions, y, x);
    if (!travel.is_finite()) continue;
    const double gy = p.g->value(y);
    if (std::isinf(gy)) continue;  // -inf on the left side, vacuous
    if (!leq_tol(grad.dot(x - y) + gx - gy, epsilon * travel.value())) return false;
  }
  return true;
}

bool member_Pp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud) {
  if (!p.g) fail(Errc::precondition_violation, "composite membership needs g");
  const Vec grad = p.f.gradient(x);
  const double gx = p.g->value(x);
  for (const Vec& y : cloud.points) {
    const ExtReal travel = minimal_time(p.directions, x, y);
    if (!travel.is_finite()) continue;
    const double gy = p.g->value(y);
    if (std::isinf(gy)) continue;
    if (!leq_tol(grad.dot(x - y) + gx - gy, prm.epsilon * travel.value())) return false;
  }
  return true;
}

bool member_Q(const Problem& p, const Vec& x, const FamilyParams& prm) {
  return leq_tol(p.f.gradient(x).dot(x - prm.anchor), prm.epsilon);
}

SweepReport diameter_sweep(const Problem& p, const SampleCloud& cloud, Family family,
                           const std::vector<double>& schedule) {
  check_schedule(schedule);
  const InfimumResult inf = cloud_infimum(cloud);

  FamilyParams prm;
  prm.family = family;
  prm.anchor = cloud.anchor;
  prm.surrogate_inf = inf.value;

  SweepReport report;
  report.family = family;
  report.epsilons = schedule;
  report.window_note = "within the sampled window";
  report.floor = std::max(4.0 * cloud.spacing, 1e-6);

  std::vector<char> marks(cloud.points.size());
  for (double eps : schedule) {
    prm.epsilon = eps;
    std::size_t count = 0;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      const Vec& x = cloud.points[i];
      bool in = false;
      switch (family) {
        case Family::L: in = leq_tol(cloud.values[i], inf.value + eps); break;
        case Family::G: in = member_G(p, cloud, x, eps); break;
        case Family::Gp: in = member_Gp(p, x, prm, cloud); break;
        case Family::H: in = member_H(p, cloud, x, eps); break;
        case Family::Hp: in = member_Hp(p, x, prm, cloud); break;
        case Family::P: in = member_P(p, cloud, x, eps); break;
        case Family::Pp: in = member_Pp(p, x, prm, cloud); break;
        case Family::Q: in = member_Q(p, x, prm); break;
      }
      marks[i] = in ? 1 : 0;
      if (in) ++count;
    }
    const double d = diameter_if(cloud, [&](std::size_t i) { return marks[i] != 0; });
    report.member_counts.push_back(count);
    report.diameters.push_back(d);
    report.r_values.push_back(d / 2.0);
  }
  report.verdict = shrink_verdict(report.diameters, report.floor);
  return report;
}

SweepReport diameter_sweep(const Problem& p, Family family, const std::vector<double>& schedule) {
  return diameter_sweep(p, sample_directional_region(p), family, schedule);
}

AdmissibleProfile c_profile(const Problem& p, const SampleCloud& cloud, ProfileKind which,
                            const std::vector<double>& ts) {
  const Vec anchor = p.anchor_point();
  if (ts.empty()) fail(Errc::bad_argument, "profile grid is empty");
  for (double t : ts) {
    if (!(t > 0.0)) fail(Errc::bad_argument, "profile grid values must be positive");
  }
  const double f_anchor = p.f.value(anchor);
  if (!std::isfinite(f_anchor)) {
    fail(Errc::precondition_violation, "objective is not finite at the anchor");
  }

  AdmissibleProfile profile;
  profile.which = which;
  profile.ts = ts;
  std::sort(profile.ts.begin(), profile.ts.end());
  profile.c_at_zero = 0.0;
  profile.tau_adm = 4.0 * cloud.spacing * lipschitz_estimate(cloud, f_anchor);

  const std::vector<Vec> dirs = slice_directions(p);
  for (double t : profile.ts) {
    double best = kInf;
    std::size_t admitted = 0;
    for (const Vec& u : dirs) {
      const Vec x = anchor - t * u;
      if (!p.in_box(x) || !p.feasible.contains(x)) continue;
      if (which == ProfileKind::c0) {
        best = std::min(best, p.f.value(x) - f_anchor);
        ++admitted;
      } else {
        if (!std::isfinite(p.f.value(x))) continue;
        best = std::min(best, p.f.gradient(x).dot(x - anchor));
        ++admitted;
      }
    }
    profile.c_values.push_back(best);
    profile.slice_counts.push_back(admitted);
  }

  bool any_nonpositive = false;
  bool all_clear = true;
  for (double c : profile.c_values) {
    if (std::isfinite(c) && c <= 0.0) any_nonpositive = true;
    if (!(c > profile.tau_adm)) all_clear = false;
  }
  if (any_nonpositive) {
    profile.verdict = ProfileVerdict::not_admissible;
  } else if (all_clear) {
    profile.verdict = ProfileVerdict::admissible;
  } else {
    profile.verdict = ProfileVerdict::inconclusive;
  }
  return profile;
}

ScalingCheck scaling_inequality_check(const AdmissibleProfile& profile) {
  if (profile.which != ProfileKind::c0) {
    fail(Errc::bad_argument, "scaling check applies to c0 profiles");
  }
  ScalingCheck out;
  for (std::size_t i = 0; i < profile.ts.size(); ++i) {
    for (std::size_t j = i + 1; j < profile.ts.size(); ++j) {
      const double s = profile.ts[i];
      const double t = profile.ts[j];
      const double ct = profile.c_values[j];
      if (std::isinf(ct)) continue;
      const double rhs = (s / t) * ct;
      const double cs = profile.c_values[i];
      if (cs <= rhs + 1e-6 * (1.0 + std::abs(rhs))) continue;
      out.pass = false;
      out.s = s;
      out.t = t;
      out.lhs = cs;
      out.rhs = rhs;
      return out;
    }
  }
  return out;
}

RadiusBoundResult radius_bound_check(const SampleCloud& cloud, const AdmissibleProfile& profile) {
  if (profile.which != ProfileKind::c0) {
    fail(Errc::bad_argument, "radius bounds apply to c0 profiles");
  }
  const InfimumResult inf = cloud_infimum(cloud);
  RadiusBoundResult out;
  for (std::size_t i = 0; i < profile.ts.size(); ++i) {
    RadiusBoundResult::Entry e;
    e.t = profile.ts[i];
    e.c_value = profile.c_values[i];
    if (!std::isfinite(e.c_value)) {
      e.skipped = true;
      e.note = "slice empty within the window";
      out.entries.push_back(e);
      continue;
    }
    if (e.c_value <= 0.0) {
      e.skipped = true;
      e.note = "c0 not positive";
      out.entries.push_back(e);
      continue;
    }
    const double d = diameter_if(
        cloud, [&](std::size_t k) { return leq_tol(cloud.values[k], inf.value + e.c_value); });
    e.r = d / 2.0;
    e.lo = e.t / 2.0 - 2.0 * cloud.spacing;
    e.hi = e.t + 2.0 * cloud.spacing;
    e.ok = e.r >= e.lo && e.r <= e.hi;
    if (!e.ok) out.pass = false;
    out.entries.push_back(e);
  }
  return out;
}

CrosscheckResult admissibility_crosscheck(const Problem& p, const SampleCloud& cloud,
                                          const std::vector<double>& schedule,
                                          const std::vector<double>& ts) {
  CrosscheckResult out;
  const AdmissibleProfile profile = c_profile(p, cloud, ProfileKind::c0, ts);
  const SweepReport sweep = diameter_sweep(p, cloud, Family::L, schedule);
  out.profile = profile.verdict;
  out.sweep = sweep.verdict;
  out.agreement = agree_of(profile.verdict, sweep.verdict);
  return out;
}

WellPosednessReport wellposedness_report(const Problem& p, const std::vector<double>& schedule) {
  check_schedule(schedule);
  const SampleCloud cloud = sample_directional_region(p);
  const InfimumResult inf = cloud_infimum(cloud);
  const Vec anchor = cloud.anchor;

  WellPosednessReport report;
  report.spacing = cloud.spacing;
  report.schedule = schedule;
  report.surrogate_inf = inf.value;
  report.window_note = "within the sampled window";
  report.convexity = convexity_spotcheck(p.f, p.box_lo, p.box_hi, 200, p.seed);
  report.subhomogeneity = subhomogeneity_spotcheck(p.f, anchor, cloud, 200, p.seed);
  report.anchor_is_argmin = leq_tol(p.f.value(anchor), inf.value);

  const bool differentiable = p.f.differentiable();
  auto add_family = [&](Family fam, bool applicable, const std::string& reason) {
    FamilyOutcome outcome;
    outcome.family = fam;
    outcome.applicable = applicable;
    outcome.reason = reason;
    if (applicable) outcome.sweep = diameter_sweep(p, cloud, fam, schedule);
    report.families.push_back(std::move(outcome));
  };

  const std::string no_convex = "convexity spot check failed";
  const std::string no_grad = "objective is not differentiable";
  const std::string no_subhom = "subhomogeneity spot check failed";
  const std::string no_argmin = "anchor is not the sampled argmin";

  add_family(Family::L, true, "");
  add_family(Family::Gp, report.convexity.pass, report.convexity.pass ? "" : no_convex);
  {
    const bool ok = report.convexity.pass && differentiable;
    add_family(Family::Hp, ok, ok ? "" : (!report.convexity.pass ? no_convex : no_grad));
  }
  {
    const bool ok = p.g.has_value() && differentiable;
    add_family(Family::Pp, ok, ok ? "" : (!p.g ? "no composite term" : no_grad));
  }
  {
    std::string reason;
    if (!report.convexity.pass) {
      reason = no_convex;
    } else if (!differentiable) {
      reason = no_grad;
    } else if (!report.subhomogeneity.pass) {
      reason = no_subhom;
    } else if (!report.anchor_is_argmin) {
      reason = no_argmin;
    }
    add_family(Family::Q, reason.empty(), reason);
  }

  if (report.subhomogeneity.pass && report.anchor_is_argmin) {
    report.profile = c_profile(p, cloud, ProfileKind::c0, kDefaultProfileGrid);
    CrosscheckResult cross;
    cross.profile = report.profile->verdict;
    cross.sweep = report.families.front().sweep->verdict;
    cross.agreement = agree_of(cross.profile, cross.sweep);
    report.crosscheck = cross;
  }

  for (std::size_t a = 0; a < report.families.size(); ++a) {
    for (std::size_t b = a + 1; b < report.families.size(); ++b) {
      if (!report.families[a].applicable || !report.families[b].applicable) continue;
      AgreementEntry entry;
      entry.a = report.families[a].family;
      entry.b = report.families[b].family;
      entry.relation =
          relation_of(report.families[a].sweep->verdict, report.families[b].sweep->verdict);
      report.agreement.push_back(entry);
    }
  }

  bool any_disagree = false;
  bool any_dns = false;
  bool any_inconclusive = false;
  for (const AgreementEntry& e : report.agreement) {
    if (e.relation == Agreement::disagree) any_disagree = true;
  }
  if (report.crosscheck && report.crosscheck->agreement == Agreement::disagree) {
    any_disagree = true;
  }
  for (const FamilyOutcome& fo : report.families) {
    if (!fo.applicable) continue;
    if (fo.sweep->verdict == SweepVerdict::does_not_shrink) any_dns = true;
    if (fo.sweep->verdict == SweepVerdict::inconclusive) any_inconclusive = true;
  }
  if (any_disagree) {
    report.overall = OverallVerdict::inconclusive;
  } else if (any_dns) {
    report.overall = OverallVerdict::not_well_posed;
  } else if (any_inconclusive) {
    report.overall = OverallVerdict::inconclusive;
  } else {
    report.overall = OverallVerdict::well_posed;
  }
  return report;
}

}  // namespace dirwell
