#pragma once

#include "dirwell/direction_set.hpp"
#include "dirwell/ext_real.hpp"
#include "dirwell/problem.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Brute-force reference implementations. They share no cone-membership or
// sampling code with the main analysis path: direction membership is decided
// by forward enumeration of the cone (interpolated generator blends) instead
// of least-squares fitting, and level sets are rebuilt on an independent
// fine grid. Slow on purpose, limited to low dimensions.

struct OracleConfig {
  int direction_resolution = 16384;  // samples per generator-pair arc, >= 64
  int t_resolution = 256;            // travel-time grid density, >= 64
  Vec window_lo;                     // scan box; defaults derived per call
  Vec window_hi;
};

// Travel time from y to x by dense scan: enumerate unit directions across
// the cone, scan the travel-time grid along each and keep the best hit
// after snapping to the per-direction quadratic minimum. Dimension <= 3.
ExtReal oracle_minimal_time(const DirectionSet& M, const Vec& y, const Vec& x,
                            const OracleConfig& cfg = {});

// Diameter of {y in D_anchor | f(y) <= inf f + epsilon} on a grid at least
// ten times denser per axis than the problem budget provides. Dimension
// <= 2; the empty set has diameter 0.
double oracle_level_diameter(const Problem& p, double epsilon);

struct OracleEkeland {
  bool found = false;
  Vec point;
  double f_value = 0.0;
};

// Exhaustive 1-D search for a point satisfying all three variational
// conclusions relative to x0 (proximity to x0, descent with travel-time
// penalty, and global domination over the scan grid).
OracleEkeland oracle_ekeland(const Problem& p, const Vec& x0, double epsilon);

// The same three-part predicate evaluated at a given candidate against the
// oracle's own grid; slack widens every comparison (0 = pinned tolerances).
bool oracle_ekeland_confirms(const Problem& p, const Vec& x0, double epsilon,
                             const Vec& candidate, double slack = 0.0);

}  // namespace dirwell
