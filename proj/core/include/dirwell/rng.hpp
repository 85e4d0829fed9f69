#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "dirwell/types.hpp"

namespace dirwell {

// Streams are derived from (document seed, purpose label) so that adding a new
// randomized step never perturbs existing ones. Same seed + label -> same
// stream, on any platform.
std::mt19937_64 make_rng(std::uint64_t seed, std::string_view purpose);

double uniform_in(std::mt19937_64& rng, double lo, double hi);
Vec uniform_point(std::mt19937_64& rng, const Vec& lo, const Vec& hi);

}  // namespace dirwell
