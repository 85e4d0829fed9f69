#include "dirwell/nnls.hpp"

#include <Eigen/QR>
#include <limits>
#include <vector>

namespace dirwell {

namespace {

// Least squares on the passive column subset.
Vec solve_subproblem(const Mat& A, const Vec& b, const std::vector<int>& passive) {
  Mat Ap(A.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t j = 0; j < passive.size(); ++j) Ap.col(j) = A.col(passive[j]);
  return Ap.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Mat& A, const Vec& b, int max_iterations) {
  const int n = static_cast<int>(A.cols());
  if (max_iterations <= 0) max_iterations = 5 * n + 20;

  NnlsResult out;
  out.x = Vec::Zero(n);

  const double scale = std::max(1.0, b.norm());
  const double dual_tol = 1e-14 * scale;

  std::vector<char> in_passive(n, 0);
  std::vector<int> passive;

  Vec residual_vec = b;  // b - A*x with x = 0
  Vec w = A.transpose() * residual_vec;

  int iter = 0;
  while (iter < max_iterations) {
    // Most positive dual among active (zero) coordinates; lowest index wins.
    int best = -1;
    double best_w = dual_tol;
    for (int i = 0; i < n; ++i) {
      if (!in_passive[i] && w[i] > best_w) {
        best_w = w[i];
        best = i;
      }
    }
    if (best < 0) {
      out.converged = true;
      break;
    }
    in_passive[best] = 1;
    passive.push_back(best);

    // Inner loop: restore feasibility of the passive subproblem solution.
    while (iter < max_iterations) {
      ++iter;
      Vec z = solve_subproblem(A, b, passive);

      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < passive.size(); ++j) {
        if (z[static_cast<Eigen::Index>(j)] <= 0.0) {
          const double xj = out.x[passive[j]];
          const double step = xj / (xj - z[static_cast<Eigen::Index>(j)]);
          alpha = std::min(alpha, step);
        }
      }
      if (!std::isfinite(alpha)) {  // z > 0 everywhere: accept it
        for (std::size_t j = 0; j < passive.size(); ++j)
          out.x[passive[j]] = z[static_cast<Eigen::Index>(j)];
        break;
      }

      // Partial step to the first coordinate that hits zero, then drop all
      // coordinates that landed there from the passive set.
      for (std::size_t j = 0; j < passive.size(); ++j) {
        const int col = passive[j];
        out.x[col] += alpha * (z[static_cast<Eigen::Index>(j)] - out.x[col]);
      }
      std::vector<int> keep;
      for (int col : passive) {
        if (out.x[col] > dual_tol) {
          keep.push_back(col);
        } else {
          out.x[col] = 0.0;
          in_passive[col] = 0;
        }
      }
      passive = std::move(keep);
      if (passive.empty()) break;
    }

    residual_vec = b - A * out.x;
    w = A.transpose() * residual_vec;
  }

  out.iterations = iter;
  out.residual = (b - A * out.x).norm();
  if (iter >= max_iterations) out.converged = false;
  return out;
}

}  // namespace dirwell
