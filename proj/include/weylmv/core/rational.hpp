#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace weylmv {

using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

// Deterministic 64-bit generator; seeds for sub-tasks derive via split_seed.
using Rng = std::mt19937_64;

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Small-height random rational, numerator in [-h, h], denominator in [1, den].
inline Q random_q(Rng& rng, long h = 5, long den = 1) {
  return make_q(uniform_int(rng, -h, h), uniform_int(rng, 1, den));
}

}  // namespace weylmv
