#pragma once

#include <cstdint>
#include <random>

namespace dockclique {

// std::mt19937_64 output is fully specified by the standard, so seeded streams
// reproduce across platforms. std::uniform_real_distribution is not specified;
// the helpers below are used everywhere instead.

/// Uniform double in [0, 1), 53 bits of entropy.
inline double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rand_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * rand_unit(rng);
}

/// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

/// Derives an independent stream seed from (seed, salt) via the splitmix64
/// finalizer. Used to keep e.g. relaxation and sampling streams decoupled.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dockclique
