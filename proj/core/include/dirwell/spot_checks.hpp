#pragma once

#include <cstdint>

#include "dirwell/objective.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/types.hpp"
#include "dirwell/vector_field.hpp"

namespace dirwell {

// Outcome of a randomized hypothesis check. On failure the witness fields
// hold the violating points and blend weight.
struct SpotCheck {
  bool pass = true;
  Vec witness_a;
  Vec witness_b;
  double witness_s = 0.0;
  double violation = 0.0;
};

// Samples random triples (a, b, lambda) in the box and tests the chord
// inequality f(la+(1-l)b) <= l f(a) + (1-l) f(b) + 1e-9. Trials where
// either endpoint value is +inf are vacuous.
SpotCheck convexity_spotcheck(const Objective& o, const Vec& lo, const Vec& hi, int trials = 200,
                              std::uint64_t seed = 1);

// Tests f(sx+(1-s)anchor) <= s f(x) + (1-s) f(anchor) + 1e-9 for random
// cloud points x and s in [0,1].
SpotCheck subhomogeneity_spotcheck(const Objective& o, const Vec& anchor, const SampleCloud& cloud,
                                   int trials = 200, std::uint64_t seed = 1);

// Tests <V(x)-V(y), x-y> >= -1e-9 on random pairs in the box.
SpotCheck monotonicity_spotcheck(const VectorField& v, const Vec& lo, const Vec& hi,
                                 int trials = 200, std::uint64_t seed = 1);

}  // namespace dirwell
