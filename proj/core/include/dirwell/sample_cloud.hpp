#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dirwell/problem.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Finite stand-in for the directional region D_anchor: feasible points of
// the sample box that can reach the anchor in finite travel time, plus
// samples along the generator rays through the anchor.
struct SampleCloud {
  std::vector<Vec> points;
  std::vector<double> values;  // objective values aligned with points
  Vec anchor;
  double spacing = 0.0;  // largest per-axis gap between adjacent coordinates
};

// Builds the cloud for a problem: a regular grid over the sample box
// (budget points in one dimension, floor(budget^(1/n)) per axis otherwise)
// filtered by feasibility and reachability, then ray samples anchor - t*m
// for every generator (the coordinate axes when M is the sphere) with t on
// a uniform plus geometric schedule, capped at the budget. The anchor is
// always included and duplicates are dropped exactly.
SampleCloud sample_directional_region(const Problem& p);

// Largest t with from - t*dir still inside the box, 0 when the ray exits
// immediately.
double box_exit_time(const Vec& from, const Vec& dir, const Vec& lo, const Vec& hi);

// Exact max pairwise distance; empty input has diameter 0.
double diameter(const std::vector<Vec>& points);

// Diameter of the subset of cloud points selected by the predicate.
double diameter_if(const SampleCloud& cloud, const std::function<bool(std::size_t)>& keep);

struct InfimumResult {
  double value = 0.0;
  Vec point;
  std::size_t index = 0;
};

// Smallest cached value and the first point attaining it. Throws
// Errc::no_finite_value when every value is +inf.
InfimumResult cloud_infimum(const SampleCloud& cloud);

}  // namespace dirwell
