#pragma once

#include <Eigen/Core>

namespace dirwell {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Inequality with the membership tolerance used across all certificate
// families: absolute 1e-9 plus 1e-9 relative on each side.
inline constexpr double kTolAbs = 1e-9;
inline constexpr double kTolRel = 1e-9;

inline bool leq_tol(double lhs, double rhs) {
  return lhs <= rhs + kTolAbs + kTolRel * (std::abs(lhs) + std::abs(rhs));
}

// Signed violation of lhs <= rhs after the tolerance band; positive means the
// inequality genuinely fails at this point.
inline double violation(double lhs, double rhs) {
  return lhs - rhs - kTolAbs - kTolRel * (std::abs(lhs) + std::abs(rhs));
}

}  // namespace dirwell
