#include "dirwell/rng.hpp"

namespace dirwell {

namespace {
// FNV-1a, folded with the seed through splitmix64 for dispersion.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed, std::string_view purpose) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return std::mt19937_64(splitmix64(seed ^ h));
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

Vec uniform_point(std::mt19937_64& rng, const Vec& lo, const Vec& hi) {
  Vec p(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) p[i] = uniform_in(rng, lo[i], hi[i]);
  return p;
}

}  // namespace dirwell
