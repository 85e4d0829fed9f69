#include "dirwell/direction_set.hpp"

#include <cmath>

#include "dirwell/error.hpp"
#include "dirwell/nnls.hpp"

namespace dirwell {

namespace {
constexpr double kUnitNormTol = 1e-12;
}

DirectionSet DirectionSet::sphere(int dim) {
  if (dim <= 0) fail(Errc::bad_argument, "direction set dimension must be positive");
  DirectionSet m;
  m.dim = dim;
  m.full_sphere = true;
  return m;
}

DirectionSet DirectionSet::from_generators(std::vector<Vec> gens, double tol) {
  if (gens.empty())
    fail(Errc::bad_argument, "generator list must be nonempty (or use full_sphere)");
  if (tol < 0.0) fail(Errc::bad_argument, "cone tolerance must be nonnegative");
  DirectionSet m;
  m.dim = static_cast<int>(gens.front().size());
  for (const Vec& g : gens) {
    if (static_cast<int>(g.size()) != m.dim)
      fail(Errc::dimension_mismatch, "generators have mixed dimensions");
    if (std::abs(g.norm() - 1.0) > kUnitNormTol)
      fail(Errc::non_unit_generator, "generator norm deviates from 1 by more than 1e-12");
  }
  m.generators = std::move(gens);
  m.tol_cone = tol;
  return m;
}

bool cone_contains(const DirectionSet& M, const Vec& v) {
  if (static_cast<int>(v.size()) != M.dim)
    fail(Errc::dimension_mismatch, "vector dimension does not match direction set");
  const double vnorm = v.norm();
  if (vnorm == 0.0) return true;
  if (M.full_sphere) return true;

  const double threshold = M.tol_cone * (1.0 + vnorm);

  if (M.generators.size() == 1) {
    // One generator: the optimal conic coefficient is the clamped projection,
    // same optimum the general solve would return.
    const double t = std::max(0.0, M.generators[0].dot(v));
    return (v - t * M.generators[0]).norm() <= threshold;
  }

  Mat A(M.dim, static_cast<Eigen::Index>(M.generators.size()));
  for (std::size_t j = 0; j < M.generators.size(); ++j)
    A.col(static_cast<Eigen::Index>(j)) = M.generators[j];
  return nnls(A, v).residual <= threshold;
}

ExtReal minimal_time(const DirectionSet& M, const Vec& y, const Vec& x) {
  if (M.full_sphere) {
    if (static_cast<int>(y.size()) != M.dim || static_cast<int>(x.size()) != M.dim)
      fail(Errc::dimension_mismatch, "point dimension does not match direction set");
    return ExtReal::finite((x - y).norm());
  }
  const Vec d = x - y;
  if (!cone_contains(M, d)) return ExtReal::infinity();
  return ExtReal::finite(d.norm());
}

bool domain_contains(const DirectionSet& M, const Vec& y, const Vec& x) {
  return minimal_time(M, y, x).is_finite();
}

ExtReal minimal_time_to_set(const DirectionSet& M, const Vec& y,
                            const std::vector<Vec>& targets) {
  ExtReal best = ExtReal::infinity();
  for (const Vec& t : targets) {
    const ExtReal v = minimal_time(M, y, t);
    if (v < best) best = v;
  }
  return best;
}

bool enlargement_contains(const DirectionSet& M, const std::vector<Vec>& set,
                          double eps, const Vec& x) {
  if (eps < 0.0) fail(Errc::bad_argument, "enlargement radius must be nonnegative");
  const ExtReal t = minimal_time_to_set(M, x, set);
  return t.is_finite() && t.value() <= eps + M.tol_cone;
}

}  // namespace dirwell
