#pragma once

#include <vector>

#include "dirwell/ext_real.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

/**
 * Direction data for the minimal-time function: either the full unit sphere
 * or the unit-sphere trace of a finitely generated convex cone, represented
 * by its generator list.
 *
 * Membership of a displacement v in the generated cone is decided by
 * nonnegative least squares: v belongs to the cone iff the best conic
 * combination of the generators reproduces it with residual at most
 * tol_cone * (1 + ||v||). The zero vector is always a member.
 */
struct DirectionSet {
  int dim = 0;
  bool full_sphere = false;
  std::vector<Vec> generators;  // unit vectors; empty iff full_sphere
  double tol_cone = 1e-9;       // relative membership tolerance

  static DirectionSet sphere(int dim);
  static DirectionSet from_generators(std::vector<Vec> gens, double tol = 1e-9);
};

bool cone_contains(const DirectionSet& M, const Vec& v);

/**
 * Travel time from y to x: the smallest t >= 0 with x in y + t*M, which is
 * ||x - y|| when the displacement x - y lies in the generated cone and
 * +infinity otherwise (the infimum over an empty set).
 */
ExtReal minimal_time(const DirectionSet& M, const Vec& y, const Vec& x);

// y reaches x in finite time, i.e. y lies in x - cone(M).
bool domain_contains(const DirectionSet& M, const Vec& y, const Vec& x);

// Travel time from y to the nearest reachable member of targets; +infinity
// when targets is empty or none is reachable.
ExtReal minimal_time_to_set(const DirectionSet& M, const Vec& y,
                            const std::vector<Vec>& targets);

// x belongs to the eps-enlargement of the set: travel time from x into the
// set is at most eps (up to the cone tolerance).
bool enlargement_contains(const DirectionSet& M, const std::vector<Vec>& set,
                          double eps, const Vec& x);

}  // namespace dirwell
