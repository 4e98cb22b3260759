#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace qlc {

// All randomness in the library flows through an explicitly seeded generator
// passed by parameter.  mt19937_64 is fully specified by the standard, so a
// fixed seed gives the same stream on every platform.
using Rng = std::mt19937_64;

/// SplitMix64 mixing step.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Derives a stream seed from a master seed.  Fixed splitting rule: the same
/// (master, stream) pair always maps to the same child seed, so trials can be
/// run in any order or in parallel without changing results.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Unbiased draw from [0, bound).  Rejection sampling on the raw 64-bit output
/// keeps results independent of library-specific distribution implementations.
inline std::uint32_t uniform_below(Rng& rng, std::uint32_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % b + 1) % b;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return static_cast<std::uint32_t>(draw % b);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qlc
