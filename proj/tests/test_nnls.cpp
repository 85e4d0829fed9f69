#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dirwell/nnls.hpp"

using dirwell::Mat;
using dirwell::nnls;
using dirwell::Vec;

TEST_CASE("exact nonnegative fit is recovered") {
  Mat A(2, 2);
  A << 1, 0, 0, 1;
  Vec b(2);
  b << 3, 4;
  auto r = nnls(A, b);
  CHECK(r.converged);
  CHECK(r.residual == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.x[0] == doctest::Approx(3.0));
  CHECK(r.x[1] == doctest::Approx(4.0));
}

TEST_CASE("negative component is clamped to the boundary") {
  // b = (1, -1) against the coordinate columns: the best feasible fit
  // zeroes the second coefficient and leaves residual 1.
  Mat A(2, 2);
  A << 1, 0, 0, 1;
  Vec b(2);
  b << 1, -1;
  auto r = nnls(A, b);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == 0.0);
  CHECK(r.residual == doctest::Approx(1.0));
}

TEST_CASE("duplicate columns do not break the active set") {
  Mat A(2, 3);
  A << 1, 1, 0, 0, 0, 1;
  Vec b(2);
  b << 2, 1;
  auto r = nnls(A, b);
  CHECK(r.converged);
  CHECK(r.residual == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r.x.minCoeff() >= 0.0);
  CHECK(r.x[0] + r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("random overdetermined problems: feasibility and optimality slack") {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Mat A(4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) A(i, j) = gauss(rng);
    Vec b(4);
    for (int i = 0; i < 4; ++i) b[i] = gauss(rng);

    auto r = nnls(A, b);
    CHECK(r.converged);
    CHECK(r.x.minCoeff() >= 0.0);

    // KKT stationarity: the gradient of the residual must be nonnegative
    // everywhere and vanish on the support.
    Vec grad = A.transpose() * (A * r.x - b);
    for (int j = 0; j < 3; ++j) {
      if (r.x[j] > 1e-12) {
        CHECK(std::abs(grad[j]) < 1e-8);
      } else {
        CHECK(grad[j] > -1e-8);
      }
    }
  }
}

TEST_CASE("zero right-hand side gives the zero solution") {
  Mat A(3, 2);
  A << 1, 2, 0, 1, 1, 0;
  auto r = nnls(A, Vec::Zero(3));
  CHECK(r.converged);
  CHECK(r.x.isZero(0.0));
  CHECK(r.residual == 0.0);
}
