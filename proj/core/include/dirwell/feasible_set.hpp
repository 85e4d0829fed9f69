#pragma once

#include <vector>

#include "dirwell/types.hpp"

namespace dirwell {

// Closed convex feasible region. Membership is exact: plain comparisons, no
// tolerance band, so degenerate boxes (lo == hi on an axis) describe honest
// lower dimensional sets.
class FeasibleSet {
 public:
  enum class Shape { kWholeSpace, kBox, kHalfspaces, kBall };

  FeasibleSet() : shape_(Shape::kWholeSpace), dim_(0) {}

  static FeasibleSet whole_space(int dim);
  static FeasibleSet box(Vec lo, Vec hi);
  // Intersection of a_i . x <= b_i
  static FeasibleSet halfspaces(std::vector<Vec> normals, std::vector<double> offsets);
  static FeasibleSet ball(Vec center, double radius);

  bool contains(const Vec& x) const;
  int dim() const { return dim_; }
  Shape shape() const { return shape_; }

  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  const std::vector<Vec>& normals() const { return normals_; }
  const std::vector<double>& offsets() const { return offsets_; }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Shape shape_;
  int dim_;
  Vec lo_, hi_;
  std::vector<Vec> normals_;
  std::vector<double> offsets_;
  Vec center_;
  double radius_ = 0.0;
};

}  // namespace dirwell
