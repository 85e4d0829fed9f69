#pragma once

#include "dirwell/types.hpp"

namespace dirwell {

struct NnlsResult {
  Vec x;             // componentwise >= 0
  double residual;   // ||A*x - b||_2 at the returned x
  int iterations = 0;
  bool converged = false;
};

/**
 * Nonnegative least squares: minimize ||A*x - b|| subject to x >= 0.
 *
 * Lawson-Hanson active set iteration with a column-pivoted QR for the
 * unconstrained subproblems, which keeps duplicate or nearly dependent
 * columns (repeated cone generators) from blowing up the inner solve.
 * Deterministic: ties in the dual pick the lowest index.
 */
NnlsResult nnls(const Mat& A, const Vec& b, int max_iterations = 0);

}  // namespace dirwell
