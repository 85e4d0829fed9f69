#include "dirwell/spot_checks.hpp"

#include <cmath>

#include "dirwell/error.hpp"
#include "dirwell/rng.hpp"

namespace dirwell {

namespace {

constexpr double kSpotTol = 1e-9;

void require_trials(int trials) {
  if (trials < 1) fail(Errc::bad_argument, "spot check needs at least one trial");
}

}  // namespace

SpotCheck convexity_spotcheck(const Objective& o, const Vec& lo, const Vec& hi, int trials,
                              std::uint64_t seed) {
  require_trials(trials);
  auto rng = make_rng(seed, "convexity");
  SpotCheck out;
  for (int t = 0; t < trials; ++t) {
    const Vec a = uniform_point(rng, lo, hi);
    const Vec b = uniform_point(rng, lo, hi);
    const double lam = uniform_in(rng, 0.0, 1.0);
    const double fa = o.value(a);
    const double fb = o.value(b);
    if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
    const double rhs = lam * fa + (1.0 - lam) * fb;
    const double mid = o.value(lam * a + (1.0 - lam) * b);
    if (mid > rhs + kSpotTol) {
      out.pass = false;
      out.witness_a = a;
      out.witness_b = b;
      out.witness_s = lam;
      out.violation = mid - rhs;
      return out;
    }
  }
  return out;
}

SpotCheck subhomogeneity_spotcheck(const Objective& o, const Vec& anchor, const SampleCloud& cloud,
                                   int trials, std::uint64_t seed) {
  require_trials(trials);
  if (cloud.points.empty()) fail(Errc::bad_argument, "spot check needs a nonempty cloud");
  auto rng = make_rng(seed, "subhomogeneity");
  std::uniform_int_distribution<std::size_t> pick(0, cloud.points.size() - 1);
  const double f_anchor = o.value(anchor);
  SpotCheck out;
  for (int t = 0; t < trials; ++t) {
    const std::size_t i = pick(rng);
    const Vec& x = cloud.points[i];
    const double fx = cloud.values[i];
    const double s = uniform_in(rng, 0.0, 1.0);
    if (!std::isfinite(fx) || !std::isfinite(f_anchor)) continue;
    const double rhs = s * fx + (1.0 - s) * f_anchor;
    const double lhs = o.value(s * x + (1.0 - s) * anchor);
    if (lhs > rhs + kSpotTol) {
      out.pass = false;
      out.witness_a = x;
      out.witness_b = anchor;
      out.witness_s = s;
      out.violation = lhs - rhs;
      return out;
    }
  }
  return out;
}

SpotCheck monotonicity_spotcheck(const VectorField& v, const Vec& lo, const Vec& hi, int trials,
                                 std::uint64_t seed) {
  require_trials(trials);
  auto rng = make_rng(seed, "monotonicity");
  SpotCheck out;
  for (int t = 0; t < trials; ++t) {
    const Vec x = uniform_point(rng, lo, hi);
    const Vec y = uniform_point(rng, lo, hi);
    const double dot = (v.eval(x) - v.eval(y)).dot(x - y);
    if (dot < -kSpotTol) {
      out.pass = false;
      out.witness_a = x;
      out.witness_b = y;
      out.witness_s = 0.0;
      out.violation = -dot;
      return out;
    }
  }
  return out;
}

}  // namespace dirwell
