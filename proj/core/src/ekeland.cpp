#include "dirwell/ekeland.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"

namespace dirwell {

namespace {

constexpr int kIterationCap = 10000;
constexpr double kInf = std::numeric_limits<double>::infinity();

// f(y) + sqrt_eps * T(x, y), +inf when y is not reachable from x.
double descent_value(const Problem& p, const Vec& x, const Vec& y, double fy, double sqrt_eps) {
  const ExtReal travel = minimal_time(p.directions, x, y);
  if (!travel.is_finite()) return kInf;
  return fy + sqrt_eps * travel.value();
}

}  // namespace

bool member_F(const Problem& p, const Vec& x, const Vec& y, double sqrt_eps) {
  return leq_tol(descent_value(p, x, y, p.f.value(y), sqrt_eps), p.f.value(x));
}

EkelandResult ekeland_point(const Problem& p, const SampleCloud& cloud, const Vec& x0,
                            double epsilon) {
  if (!(epsilon > 0.0)) fail(Errc::bad_argument, "epsilon must be positive");
  const InfimumResult inf = cloud_infimum(cloud);
  const double f0 = p.f.value(x0);
  if (!leq_tol(f0, inf.value + epsilon)) {
    fail(Errc::precondition_violation, "start point is not an epsilon-minimizer");
  }
  if (!p.feasible.contains(x0) || !domain_contains(p.directions, x0, cloud.anchor)) {
    fail(Errc::precondition_violation, "start point is outside the directional region");
  }

  const double sq = std::sqrt(epsilon);
  EkelandResult result;
  result.epsilon = epsilon;
  result.start = x0;
  result.trace.push_back(x0);

  Vec xc = x0;
  double fc = f0;
  int k = 0;
  while (true) {
    if (k >= kIterationCap) {
      fail(Errc::nonconvergence, "no fixed point after " + std::to_string(kIterationCap) +
                                     " descent steps, f = " + std::to_string(fc));
    }
    // Best objective value over cloud ∩ F(xc), exact arithmetic: the
    // descent set itself carries no tolerance so that case A terminates.
    double inf_F = kInf;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      if (descent_value(p, xc, cloud.points[i], cloud.values[i], sq) <= fc) {
        inf_F = std::min(inf_F, cloud.values[i]);
      }
    }
    if (fc - inf_F <= 1e-12 * (1.0 + std::abs(fc))) break;  // case A

    const double bar = 0.5 * (fc + inf_F);  // case B: halve the gap
    std::size_t chosen = cloud.points.size();
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      if (cloud.values[i] < bar &&
          descent_value(p, xc, cloud.points[i], cloud.values[i], sq) <= fc) {
        chosen = i;
        break;
      }
    }
    if (chosen == cloud.points.size()) break;  // only possible off-cloud, treat as case A
    xc = cloud.points[chosen];
    fc = cloud.values[chosen];
    result.trace.push_back(xc);
    ++k;
  }

  result.x_eps = xc;
  result.iterations = k;

  const ExtReal t0 = minimal_time(p.directions, x0, xc);
  result.residual_i = sq - t0.raw();
  result.residual_ii = f0 - (fc + sq * t0.raw());
  result.violations_iii = 0;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const ExtReal travel = minimal_time(p.directions, xc, cloud.points[i]);
    if (!travel.is_finite()) continue;
    if (!leq_tol(fc, cloud.values[i] + sq * travel.value())) ++result.violations_iii;
  }
  return result;
}

EkelandResult ekeland_point(const Problem& p, const SampleCloud& cloud, double epsilon) {
  return ekeland_point(p, cloud, cloud_infimum(cloud).point, epsilon);
}

EkelandVerification verify_ekeland(const EkelandResult& r, const Problem& p,
                                   const SampleCloud& cloud) {
  EkelandVerification v;
  const double sq = std::sqrt(r.epsilon);
  const double f0 = p.f.value(r.start);
  const double fe = p.f.value(r.x_eps);

  const ExtReal t0 = minimal_time(p.directions, r.start, r.x_eps);
  v.residual_i = sq - t0.raw();
  v.residual_ii = f0 - (fe + sq * t0.raw());

  v.violations_iii = 0;
  for (const Vec& y : cloud.points) {
    const ExtReal travel = minimal_time(p.directions, r.x_eps, y);
    if (!travel.is_finite()) continue;
    if (!leq_tol(fe, p.f.value(y) + sq * travel.value())) ++v.violations_iii;
  }

  v.telescoping_worst = -kInf;
  v.telescoping_ok = true;
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    const double fk = p.f.value(r.trace[k]);
    for (std::size_t l = k + 1; l < r.trace.size(); ++l) {
      const ExtReal travel = minimal_time(p.directions, r.trace[k], r.trace[l]);
      if (!travel.is_finite()) {
        v.telescoping_ok = false;
        continue;
      }
      const double gap = sq * travel.value() - (fk - p.f.value(r.trace[l]));
      v.telescoping_worst = std::max(v.telescoping_worst, gap);
      if (gap > 1e-9) v.telescoping_ok = false;
    }
  }
  if (r.trace.size() < 2) v.telescoping_worst = 0.0;

  v.pass = v.residual_i >= -1e-9 && v.residual_ii >= -1e-9 && v.violations_iii == 0 &&
           v.telescoping_ok;
  return v;
}

int corollary_violations(const EkelandResult& r, const Problem& p, const SampleCloud& cloud,
                         double tol) {
  const Vec grad = p.f.gradient(r.x_eps);
  const double sq = std::sqrt(r.epsilon);
  int count = 0;
  for (const Vec& y : cloud.points) {
    const ExtReal travel = minimal_time(p.directions, r.x_eps, y);
    if (!travel.is_finite()) continue;
    if (grad.dot(r.x_eps - y) > sq * travel.value() + tol) ++count;
  }
  return count;
}

}  // namespace dirwell
