#pragma once

#include <optional>
#include <vector>

#include "dirwell/expr.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Operator V for variational inequalities, either affine x -> Ax + b or one
// expression per output coordinate.
class VectorField {
 public:
  VectorField() = default;

  static VectorField affine(Mat matrix, Vec offset);
  static VectorField from_exprs(std::vector<Expr> components);

  // Throws Errc::evaluation_error when any component is NaN or infinite.
  Vec eval(const Vec& x) const;

  int dim() const { return dim_; }
  bool is_affine() const { return affine_; }
  const Mat& matrix() const { return matrix_; }
  const Vec& offset() const { return offset_; }
  const std::vector<Expr>& exprs() const { return exprs_; }

 private:
  bool affine_ = false;
  Mat matrix_;
  Vec offset_;
  std::vector<Expr> exprs_;
  int dim_ = 0;
};

}  // namespace dirwell
