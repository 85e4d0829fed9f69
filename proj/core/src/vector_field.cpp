#include "dirwell/vector_field.hpp"

#include <cmath>

#include "dirwell/error.hpp"

namespace dirwell {

VectorField VectorField::affine(Mat matrix, Vec offset) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    fail(Errc::bad_argument, "affine field needs a nonempty square matrix");
  if (offset.size() != matrix.rows())
    fail(Errc::dimension_mismatch, "affine field offset length does not match matrix");
  VectorField v;
  v.affine_ = true;
  v.dim_ = static_cast<int>(matrix.rows());
  v.matrix_ = std::move(matrix);
  v.offset_ = std::move(offset);
  return v;
}

VectorField VectorField::from_exprs(std::vector<Expr> components) {
  if (components.empty()) fail(Errc::bad_argument, "field needs at least one component");
  const int dim = static_cast<int>(components.size());
  for (const Expr& e : components)
    if (e.min_dimension() > dim)
      fail(Errc::dimension_mismatch, "field component uses a coordinate beyond its dimension");
  VectorField v;
  v.dim_ = dim;
  v.exprs_ = std::move(components);
  return v;
}

Vec VectorField::eval(const Vec& x) const {
  if (dim_ == 0) fail(Errc::evaluation_error, "field has no definition");
  if (static_cast<int>(x.size()) != dim_)
    fail(Errc::dimension_mismatch, "point dimension does not match field");
  Vec out(dim_);
  if (affine_) {
    out = matrix_ * x + offset_;
  } else {
    for (int i = 0; i < dim_; ++i) out[i] = exprs_[static_cast<std::size_t>(i)].eval(x);
  }
  for (int i = 0; i < dim_; ++i)
    if (!std::isfinite(out[i])) fail(Errc::evaluation_error, "field value not finite");
  return out;
}

}  // namespace dirwell
