#pragma once

#include <vector>

#include "dirwell/problem.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Output of the variational-principle construction. residual_i is the
// slack in T(x0, x_eps) <= sqrt(eps), residual_ii the slack in
// f(x_eps) + sqrt(eps) T(x0, x_eps) <= f(x0); both stay >= -1e-9 on an
// accepted result, and violations_iii counts cloud samples breaking the
// pointwise minimality conclusion.
struct EkelandResult {
  Vec x_eps;
  double epsilon = 0.0;
  Vec start;
  int iterations = 0;
  double residual_i = 0.0;
  double residual_ii = 0.0;
  int violations_iii = 0;
  std::vector<Vec> trace;  // x0 and every accepted iterate
};

// True iff f(y) + sqrt_eps * T(x, y) <= f(x) within tolerance, the
// descent set used by the construction.
bool member_F(const Problem& p, const Vec& x, const Vec& y, double sqrt_eps);

// Runs the iterative selection: from x_k, the descent set F(x_k) is
// scanned over the cloud; if its best value already matches f(x_k) the
// iteration stops (case A), otherwise the first cloud point below the
// halfway mark between f(x_k) and that best value becomes x_{k+1}
// (case B). The start must be an epsilon-minimizer inside the region.
EkelandResult ekeland_point(const Problem& p, const SampleCloud& cloud, const Vec& x0,
                            double epsilon);
EkelandResult ekeland_point(const Problem& p, const SampleCloud& cloud, double epsilon);

struct EkelandVerification {
  bool pass = false;
  double residual_i = 0.0;
  double residual_ii = 0.0;
  int violations_iii = 0;
  double telescoping_worst = 0.0;  // max of sqrt(eps) T(x_k,x_l) - (f(x_k)-f(x_l))
  bool telescoping_ok = false;
};

// Recomputes the three conclusions and the telescoping chain bound from
// the raw problem data, without reusing anything the iteration cached.
EkelandVerification verify_ekeland(const EkelandResult& r, const Problem& p,
                                   const SampleCloud& cloud);

// Cloud samples violating <f'(x_eps), x_eps - y> <= sqrt(eps) T(x_eps, y)
// beyond tol; meaningful for differentiable convex objectives.
int corollary_violations(const EkelandResult& r, const Problem& p, const SampleCloud& cloud,
                         double tol = 1e-6);

}  // namespace dirwell
