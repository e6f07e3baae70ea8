#pragma once

#include <cmath>
#include <cstdint>

namespace locfim::rng {

// Counter-based generator: every variate is a pure function of
// (key, counter, stream), so trials and photons can be evaluated in any
// order (or concurrently) without changing the sampled values.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Hash of (key, a, b, c); distinct multipliers keep the slots independent.
inline std::uint64_t counter_hash(std::uint64_t key, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(key ^ 0x8cb92ba72f3d8dd7ULL);
  h = splitmix64(h ^ (a * 0xff51afd7ed558ccdULL));
  h = splitmix64(h ^ (b * 0xc4ceb9fe1a85ec53ULL));
  h = splitmix64(h ^ (c * 0x2545f4914f6cdd1dULL));
  return h;
}

// Uniform on (0, 1]: never returns 0, so log() is always safe.
inline double uniform01(std::uint64_t key, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c) {
  const std::uint64_t bits = counter_hash(key, a, b, c) >> 11;  // 53 bits
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box-Muller; consumes streams (c) and (c + 1).
inline double gaussian(std::uint64_t key, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  const double u1 = uniform01(key, a, b, c);
  const double u2 = uniform01(key, a, b, c + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace locfim::rng
