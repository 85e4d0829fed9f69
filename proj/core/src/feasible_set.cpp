#include "dirwell/feasible_set.hpp"

#include "dirwell/error.hpp"

namespace dirwell {

FeasibleSet FeasibleSet::whole_space(int dim) {
  if (dim <= 0) fail(Errc::bad_argument, "feasible set dimension must be positive");
  FeasibleSet s;
  s.shape_ = Shape::kWholeSpace;
  s.dim_ = dim;
  return s;
}

FeasibleSet FeasibleSet::box(Vec lo, Vec hi) {
  if (lo.size() == 0 || lo.size() != hi.size())
    fail(Errc::bad_argument, "box bounds must be nonempty and of equal length");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) fail(Errc::bad_argument, "box has lo > hi on an axis");
  FeasibleSet s;
  s.shape_ = Shape::kBox;
  s.dim_ = static_cast<int>(lo.size());
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

FeasibleSet FeasibleSet::halfspaces(std::vector<Vec> normals, std::vector<double> offsets) {
  if (normals.empty() || normals.size() != offsets.size())
    fail(Errc::bad_argument, "halfspace lists must be nonempty and of equal length");
  const int dim = static_cast<int>(normals.front().size());
  for (const Vec& a : normals)
    if (static_cast<int>(a.size()) != dim)
      fail(Errc::dimension_mismatch, "halfspace normals have mixed dimensions");
  FeasibleSet s;
  s.shape_ = Shape::kHalfspaces;
  s.dim_ = dim;
  s.normals_ = std::move(normals);
  s.offsets_ = std::move(offsets);
  return s;
}

FeasibleSet FeasibleSet::ball(Vec center, double radius) {
  if (center.size() == 0) fail(Errc::bad_argument, "ball center must be nonempty");
  if (radius < 0.0) fail(Errc::bad_argument, "ball radius must be nonnegative");
  FeasibleSet s;
  s.shape_ = Shape::kBall;
  s.dim_ = static_cast<int>(center.size());
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

bool FeasibleSet::contains(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    fail(Errc::dimension_mismatch, "point dimension does not match feasible set");
  switch (shape_) {
    case Shape::kWholeSpace:
      return true;
    case Shape::kBox:
      for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
      return true;
    case Shape::kHalfspaces:
      for (std::size_t i = 0; i < normals_.size(); ++i)
        if (normals_[i].dot(x) > offsets_[i]) return false;
      return true;
    case Shape::kBall:
      return (x - center_).norm() <= radius_;
  }
  return false;
}

}  // namespace dirwell
