#include "dirwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "dirwell/error.hpp"

namespace dirwell {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- independent cone membership, 1-D and 2-D --------------------------
//
// The main path decides membership by nonnegative least squares. Here the
// sign structure (1-D) and the angular hull of the generators (2-D) decide
// it instead, so the two implementations share nothing but the definition.

bool sign_cone_contains(const std::vector<Vec>& gens, double v) {
  if (v == 0.0) return true;
  for (const Vec& g : gens)
    if (v * g[0] > 0.0) return true;
  return false;
}

double circ_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

bool angle_cone_contains(const std::vector<Vec>& gens, const Vec& v, double tol_ang) {
  if (v.norm() == 0.0) return true;
  const double phi = std::atan2(v[1], v[0]);
  std::vector<double> angles;
  angles.reserve(gens.size());
  for (const Vec& g : gens) angles.push_back(std::atan2(g[1], g[0]));
  if (angles.size() == 1) return circ_dist(phi, angles[0]) <= tol_ang;

  std::sort(angles.begin(), angles.end());
  double max_gap = 2.0 * kPi - (angles.back() - angles.front());
  double arc_start = angles.front();
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    const double gap = angles[i + 1] - angles[i];
    if (gap > max_gap) {
      max_gap = gap;
      arc_start = angles[i + 1];
    }
  }
  const double arc_width = 2.0 * kPi - max_gap;
  // Generators spread over more than a half turn generate the whole plane.
  if (arc_width > kPi + 1e-9) return true;

  auto rel = [&](double theta) {
    double r = std::fmod(theta - arc_start, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    return r;
  };
  if (arc_width >= kPi - 1e-9) {
    // Exactly half a turn: a closed half-plane when some generator lies
    // strictly inside the arc, otherwise just the spanning line.
    bool interior = false;
    for (double a : angles) {
      const double r = rel(a);
      if (r > tol_ang && r < arc_width - tol_ang) interior = true;
    }
    if (!interior)
      return circ_dist(phi, arc_start) <= tol_ang ||
             circ_dist(phi, arc_start + arc_width) <= tol_ang;
  }
  const double r = rel(phi);
  return r <= arc_width + tol_ang || r >= 2.0 * kPi - tol_ang;
}

bool oracle_domain_contains(const DirectionSet& M, const Vec& y, const Vec& xbar) {
  if (M.full_sphere) return true;
  const Vec v = xbar - y;
  if (M.dim == 1) return sign_cone_contains(M.generators, v[0]);
  return angle_cone_contains(M.generators, v, 1e-9);
}

// ---- direction enumeration for the travel-time scan --------------------

struct DirectionScan {
  std::vector<Vec> dirs;
  double half_angle = 0.0;  // worst-case angular gap to the nearest sample
};

DirectionScan scan_pairs(const std::vector<Vec>& gens, int res) {
  DirectionScan scan;
  scan.half_angle = kPi / (2.0 * static_cast<double>(res - 1));
  for (std::size_t i = 0; i < gens.size(); ++i) scan.dirs.push_back(gens[i]);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const double d = std::clamp(gens[i].dot(gens[j]), -1.0, 1.0);
      const double omega = std::acos(d);
      // Coincident or antipodal pairs contribute nothing between the
      // endpoints (the latter span a line, covered by the endpoints).
      if (omega < 1e-12 || omega > kPi - 1e-9) continue;
      const double s = std::sin(omega);
      for (int k = 1; k + 1 < res; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(res - 1);
        Vec u = (std::sin((1.0 - t) * omega) / s) * gens[i] +
                (std::sin(t * omega) / s) * gens[j];
        scan.dirs.push_back(u / u.norm());
      }
    }
  }
  return scan;
}

DirectionScan scan_triples(const std::vector<Vec>& gens, int res) {
  DirectionScan scan;
  const int m = std::max(64, static_cast<int>(std::lround(std::sqrt(8.0 * res))));
  double min_norm = 1.0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      for (std::size_t l = j + 1; l < gens.size(); ++l) {
        for (int a = 0; a <= m; ++a) {
          for (int b = 0; a + b <= m; ++b) {
            const int c = m - a - b;
            Vec w = (static_cast<double>(a) * gens[i] + static_cast<double>(b) * gens[j] +
                     static_cast<double>(c) * gens[l]) /
                    static_cast<double>(m);
            const double n = w.norm();
            if (n < 0.05) continue;  // nearly cancelling blend, skip
            min_norm = std::min(min_norm, n);
            scan.dirs.push_back(w / n);
          }
        }
      }
    }
  }
  // Neighboring barycentric samples are 2/m apart before normalization;
  // dividing by the smallest norm bounds the on-sphere gap.
  scan.half_angle = 1.1 * (2.0 / static_cast<double>(m)) / std::max(min_norm, 0.05);
  return scan;
}

// Best travel time along one direction: the t-grid and the vertex of the
// quadratic distance profile decide acceptance, but an accepted ray always
// reports the vertex (the exact per-ray minimizer). Reporting a raw grid
// node would bias the minimum low by up to the scan tolerance whenever a
// node lands inside the acceptance ball short of the vertex.
void scan_direction(const Vec& disp, const Vec& u, double scan_tol, double t_max, int t_res,
                    double* best) {
  const double b = disp.dot(u);
  const double c2 = disp.squaredNorm();
  const double step = t_max / static_cast<double>(t_res);
  const double t_grid = step * std::round(std::clamp(b, 0.0, t_max) / step);
  const double t_vertex = std::max(b, 0.0);
  for (const double t : {t_grid, t_vertex}) {
    const double dist2 = std::max(0.0, c2 - 2.0 * b * t + t * t);
    if (std::sqrt(dist2) <= scan_tol && t_vertex < *best) *best = t_vertex;
  }
}

}  // namespace

ExtReal oracle_minimal_time(const DirectionSet& M, const Vec& y, const Vec& x,
                            const OracleConfig& cfg) {
  if (M.dim > 3) fail(Errc::precondition_violation, "oracle supports dimensions up to 3");
  if (cfg.direction_resolution < 64 || cfg.t_resolution < 64)
    fail(Errc::bad_argument, "oracle resolutions must be at least 64");
  if (y.size() != x.size() || static_cast<int>(y.size()) != M.dim)
    fail(Errc::dimension_mismatch, "oracle point dimensions do not match the direction set");

  const Vec disp = x - y;
  const double dist = disp.norm();
  if (dist == 0.0) return ExtReal::finite(0.0);
  // The sphere contains the displacement direction itself.
  if (M.full_sphere) return ExtReal::finite(dist);

  double t_max = 2.0 * dist + 1.0;
  if (cfg.window_lo.size() > 0 && cfg.window_lo.size() == cfg.window_hi.size())
    t_max = std::max(t_max, 2.0 * (cfg.window_hi - cfg.window_lo).norm());

  double best = kInf;
  const DirectionScan pairs = scan_pairs(M.generators, cfg.direction_resolution);
  const double pair_tol = dist * std::sin(pairs.half_angle) * 1.05 + 1e-12;
  for (const Vec& u : pairs.dirs)
    scan_direction(disp, u, pair_tol, t_max, cfg.t_resolution, &best);

  if (M.dim == 3 && M.generators.size() >= 3) {
    const DirectionScan triples = scan_triples(M.generators, cfg.direction_resolution);
    const double triple_tol = dist * std::sin(triples.half_angle) * 1.05 + 1e-12;
    for (const Vec& u : triples.dirs)
      scan_direction(disp, u, triple_tol, t_max, cfg.t_resolution, &best);
  }

  if (best == kInf) return ExtReal::infinity();
  return ExtReal::finite(std::max(0.0, best));
}

namespace {

// Exact planar diameter: strict convex hull, then all hull pairs. Hull
// sizes stay small for grid-shaped inputs.
double diameter_2d(std::vector<Vec> pts) {
  if (pts.size() < 2) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec& a, const Vec& b) { return a[0] == b[0] && a[1] == b[1]; }),
            pts.end());
  if (pts.size() < 2) return 0.0;
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull(2 * pts.size());
  std::size_t h = 0;
  for (const Vec& p : pts) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0.0) --h;
    hull[h++] = p;
  }
  const std::size_t lower = h + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], *it) <= 0.0) --h;
    hull[h++] = *it;
  }
  hull.resize(h > 0 ? h - 1 : 0);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, (hull[i] - hull[j]).norm());
  return best;
}

std::vector<Vec> fine_grid(const Problem& p, int per_axis) {
  std::vector<Vec> pts;
  if (p.dimension == 1) {
    pts.reserve(static_cast<std::size_t>(per_axis));
    for (int i = 0; i < per_axis; ++i) {
      Vec v(1);
      v[0] = p.box_lo[0] + (p.box_hi[0] - p.box_lo[0]) * static_cast<double>(i) /
                               static_cast<double>(per_axis - 1);
      pts.push_back(v);
    }
  } else {
    pts.reserve(static_cast<std::size_t>(per_axis) * static_cast<std::size_t>(per_axis));
    for (int i = 0; i < per_axis; ++i) {
      for (int j = 0; j < per_axis; ++j) {
        Vec v(2);
        v[0] = p.box_lo[0] + (p.box_hi[0] - p.box_lo[0]) * static_cast<double>(i) /
                                 static_cast<double>(per_axis - 1);
        v[1] = p.box_lo[1] + (p.box_hi[1] - p.box_lo[1]) * static_cast<double>(j) /
                                 static_cast<double>(per_axis - 1);
        pts.push_back(v);
      }
    }
  }
  return pts;
}

double objective_value_or_inf(const Problem& p, const Vec& y) {
  try {
    return p.f.value(y);
  } catch (const Error&) {
    return kInf;
  }
}

}  // namespace

double oracle_level_diameter(const Problem& p, double epsilon) {
  if (p.dimension > 2)
    fail(Errc::precondition_violation, "level-set oracle supports dimensions 1 and 2");
  if (epsilon < 0.0) fail(Errc::bad_argument, "epsilon must be nonnegative");
  const Vec& xbar = p.anchor_point();

  const int main_m = p.dimension == 1
                         ? p.budget
                         : static_cast<int>(std::floor(std::sqrt(static_cast<double>(p.budget))));
  // Ten-fold refinement that keeps every coarse node on the fine grid.
  std::vector<Vec> pts = fine_grid(p, 10 * (main_m - 1) + 1);
  pts.push_back(xbar);

  std::vector<Vec> members;
  std::vector<double> values;
  double inf_value = kInf;
  for (const Vec& y : pts) {
    if (!p.feasible.contains(y)) continue;
    if (!oracle_domain_contains(p.directions, y, xbar)) continue;
    const double fy = objective_value_or_inf(p, y);
    if (fy == kInf) continue;
    members.push_back(y);
    values.push_back(fy);
    inf_value = std::min(inf_value, fy);
  }
  if (members.empty()) return 0.0;

  std::vector<Vec> level;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (leq_tol(values[i], inf_value + epsilon)) level.push_back(members[i]);
  if (level.size() < 2) return 0.0;

  if (p.dimension == 1) {
    double lo = level.front()[0], hi = level.front()[0];
    for (const Vec& v : level) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }
  return diameter_2d(std::move(level));
}

namespace {

struct EkelandScan {
  std::vector<double> ys;  // domain sample, ascending
  std::vector<double> fs;
};

EkelandScan ekeland_domain(const Problem& p, double x0, double extra) {
  EkelandScan scan;
  const int fine = 10 * p.budget;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(fine) + 3);
  for (int i = 0; i < fine; ++i)
    xs.push_back(p.box_lo[0] + (p.box_hi[0] - p.box_lo[0]) * static_cast<double>(i) /
                                   static_cast<double>(fine - 1));
  xs.push_back(p.anchor_point()[0]);
  xs.push_back(x0);
  if (std::isfinite(extra)) xs.push_back(extra);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const double xbar = p.anchor_point()[0];
  Vec y(1);
  for (double v : xs) {
    y[0] = v;
    if (!p.feasible.contains(y)) continue;
    if (p.directions.full_sphere ||
        sign_cone_contains(p.directions.generators, xbar - v)) {
      scan.ys.push_back(v);
      scan.fs.push_back(objective_value_or_inf(p, y));
    }
  }
  return scan;
}

bool ekeland_predicate(const Problem& p, const EkelandScan& scan, double x0, double f0,
                       double sqe, double z, double fz, double slack) {
  const bool full = p.directions.full_sphere;
  const std::vector<Vec>& gens = p.directions.generators;
  // (i) reachability from x0 within sqrt(epsilon)
  if (!(full || sign_cone_contains(gens, z - x0))) return false;
  const double t0 = std::abs(z - x0);
  if (!leq_tol(t0, sqe + slack)) return false;
  // (ii) descent against the travel-time penalty
  if (!leq_tol(fz + sqe * t0, f0 + slack)) return false;
  // (iii) domination over the whole scanned domain
  for (std::size_t i = 0; i < scan.ys.size(); ++i) {
    const double y = scan.ys[i];
    if (!(full || sign_cone_contains(gens, y - z))) continue;
    if (!leq_tol(fz, scan.fs[i] + sqe * std::abs(y - z) + slack)) return false;
  }
  return true;
}

}  // namespace

OracleEkeland oracle_ekeland(const Problem& p, const Vec& x0, double epsilon) {
  if (p.dimension != 1)
    fail(Errc::precondition_violation, "variational oracle supports dimension 1 only");
  if (!(epsilon > 0.0)) fail(Errc::bad_argument, "epsilon must be positive");
  const double x0v = x0[0];
  const EkelandScan scan = ekeland_domain(p, x0v, kInf);
  const double sqe = std::sqrt(epsilon);
  Vec x0vec(1);
  x0vec[0] = x0v;
  const double f0 = objective_value_or_inf(p, x0vec);

  // Candidates in ascending objective order; value ties fall to the left.
  std::vector<std::size_t> order(scan.ys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scan.fs[a] != scan.fs[b] ? scan.fs[a] < scan.fs[b] : scan.ys[a] < scan.ys[b];
  });

  OracleEkeland result;
  for (std::size_t idx : order) {
    const double z = scan.ys[idx];
    const double fz = scan.fs[idx];
    if (fz == kInf) break;
    if (ekeland_predicate(p, scan, x0v, f0, sqe, z, fz, 0.0)) {
      result.found = true;
      result.point = Vec::Constant(1, z);
      result.f_value = fz;
      return result;
    }
  }
  return result;
}

bool oracle_ekeland_confirms(const Problem& p, const Vec& x0, double epsilon,
                             const Vec& candidate, double slack) {
  if (p.dimension != 1)
    fail(Errc::precondition_violation, "variational oracle supports dimension 1 only");
  const double x0v = x0[0];
  const double z = candidate[0];
  const EkelandScan scan = ekeland_domain(p, x0v, z);
  Vec x0vec(1);
  x0vec[0] = x0v;
  const double f0 = objective_value_or_inf(p, x0vec);
  Vec zvec(1);
  zvec[0] = z;
  const double fz = objective_value_or_inf(p, zvec);
  if (fz == kInf) return false;
  return ekeland_predicate(p, scan, x0v, f0, std::sqrt(epsilon), z, fz, slack);
}

}  // namespace dirwell
