#pragma once

#include "minrep/rational.hpp"

#include <cstdint>
#include <random>

namespace minrep {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for (master, stream id).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's distribution implementation.
inline long uniform_int(Rng& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<long>(r % span);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Small nonzero rational p/q with |p| <= pmax, 1 <= q <= qmax.
inline Rational small_rational(Rng& rng, long pmax = 3, long qmax = 3) {
  long p = 0;
  while (p == 0) p = uniform_int(rng, -pmax, pmax);
  Rational r(p, uniform_int(rng, 1, qmax));
  r.canonicalize();
  return r;
}

}  // namespace minrep
