#include "dirwell/sample_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"

namespace dirwell {

namespace {

constexpr double kRayFloor = 1e-9;  // smallest geometric ray offset

std::vector<Vec> ray_directions(const DirectionSet& dirs) {
  if (!dirs.full_sphere) return dirs.generators;
  std::vector<Vec> axes;
  axes.reserve(2 * static_cast<std::size_t>(dirs.dim));
  for (int j = 0; j < dirs.dim; ++j) {
    Vec e = Vec::Zero(dirs.dim);
    e[j] = 1.0;
    axes.push_back(e);
    axes.push_back(-e);
  }
  return axes;
}

}  // namespace

double box_exit_time(const Vec& from, const Vec& dir, const Vec& lo, const Vec& hi) {
  double t_exit = std::numeric_limits<double>::infinity();
  for (int i = 0; i < from.size(); ++i) {
    const double step = -dir[i];
    if (step > 0.0) {
      t_exit = std::min(t_exit, (hi[i] - from[i]) / step);
    } else if (step < 0.0) {
      t_exit = std::min(t_exit, (lo[i] - from[i]) / step);
    } else if (from[i] < lo[i] || from[i] > hi[i]) {
      return 0.0;
    }
  }
  if (!std::isfinite(t_exit) || t_exit < 0.0) return 0.0;
  return t_exit;
}

SampleCloud sample_directional_region(const Problem& p) {
  const Vec anchor = p.anchor_point();
  const int n = p.dimension;

  std::set<std::vector<double>> seen;
  std::vector<Vec> points;
  auto push_unique = [&](const Vec& x) {
    std::vector<double> key(x.data(), x.data() + x.size());
    if (seen.insert(std::move(key)).second) points.push_back(x);
  };
  auto admit = [&](const Vec& x) {
    if (p.feasible.contains(x) && domain_contains(p.directions, x, anchor)) push_unique(x);
  };

  push_unique(anchor);

  // Regular grid over the sample box, filtered down to the region.
  int m = n == 1 ? p.budget
                 : static_cast<int>(std::floor(std::pow(static_cast<double>(p.budget), 1.0 / n)));
  m = std::max(m, 2);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  Vec g(n);
  bool done = false;
  while (!done) {
    for (int a = 0; a < n; ++a) {
      g[a] = p.box_lo[a] + (p.box_hi[a] - p.box_lo[a]) * idx[static_cast<std::size_t>(a)] / (m - 1);
    }
    admit(g);
    done = true;
    for (int a = 0; a < n; ++a) {
      if (++idx[static_cast<std::size_t>(a)] < m) {
        done = false;
        break;
      }
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }

  // Spend the remaining budget on rays anchor - t*dir, one bundle per
  // direction: a uniform t grid out to the box exit covers the region at
  // scale, a geometric tail resolves the approach to the anchor.
  const std::vector<Vec> rays = ray_directions(p.directions);
  const std::size_t budget = static_cast<std::size_t>(p.budget);
  if (!rays.empty() && points.size() < budget) {
    const std::size_t per = (budget - points.size()) / rays.size();
    for (const Vec& dir : rays) {
      const double t_exit = box_exit_time(anchor, dir, p.box_lo, p.box_hi);
      if (t_exit <= kRayFloor) continue;
      const std::size_t nu = per * 6 / 10;
      const std::size_t ng = per - nu;
      for (std::size_t k = 1; k <= nu && points.size() < budget; ++k) {
        const double t = t_exit * static_cast<double>(k) / static_cast<double>(nu);
        admit(anchor - t * dir);
      }
      if (ng > 0) {
        const double ratio = std::pow(kRayFloor / t_exit, 1.0 / static_cast<double>(ng));
        double t = t_exit;
        for (std::size_t j = 1; j <= ng && points.size() < budget; ++j) {
          t *= ratio;
          admit(anchor - t * dir);
        }
      }
    }
  }

  if (points.empty()) fail(Errc::degenerate_region, "sampling produced no points");

  SampleCloud cloud;
  cloud.points = std::move(points);
  cloud.anchor = anchor;
  cloud.values.reserve(cloud.points.size());
  for (const Vec& x : cloud.points) cloud.values.push_back(p.f.value(x));

  // Spacing: the widest gap between adjacent coordinates, maximized over
  // the axes that vary at all.
  double spacing = 0.0;
  std::vector<double> coords(cloud.points.size());
  for (int a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < cloud.points.size(); ++i) coords[i] = cloud.points[i][a];
    std::sort(coords.begin(), coords.end());
    for (std::size_t i = 1; i < coords.size(); ++i) {
      spacing = std::max(spacing, coords[i] - coords[i - 1]);
    }
  }
  cloud.spacing = spacing > 0.0 ? spacing : kRayFloor;
  return cloud;
}

double diameter(const std::vector<Vec>& points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

double diameter_if(const SampleCloud& cloud, const std::function<bool(std::size_t)>& keep) {
  std::vector<std::size_t> sel;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (keep(i)) sel.push_back(i);
  }
  double best = 0.0;
  for (std::size_t a = 0; a < sel.size(); ++a) {
    for (std::size_t b = a + 1; b < sel.size(); ++b) {
      best = std::max(best, (cloud.points[sel[a]] - cloud.points[sel[b]]).norm());
    }
  }
  return best;
}

InfimumResult cloud_infimum(const SampleCloud& cloud) {
  InfimumResult out;
  out.value = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t i = 0; i < cloud.values.size(); ++i) {
    if (std::isfinite(cloud.values[i]) && cloud.values[i] < out.value) {
      out.value = cloud.values[i];
      out.point = cloud.points[i];
      out.index = i;
      found = true;
    }
  }
  if (!found) fail(Errc::no_finite_value, "every sampled value is +inf");
  return out;
}

}  // namespace dirwell
