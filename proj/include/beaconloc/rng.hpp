#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace beaconloc {

// All randomness flows through explicitly seeded streams, so every result is
// reproducible from a single master seed. mt19937_64 is fully specified by
// the standard; the draw helpers below avoid std::*_distribution, whose
// output is implementation-defined.
using RngStream = std::mt19937_64;

// SplitMix64 output function.
inline std::uint64_t split_mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent sub-seed from a seed and an index. Sweeps seed
// point i with mix_seed(master_seed, i); trial t within a point runs on a
// stream seeded with mix_seed(point_seed, t).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return split_mix(split_mix(seed) ^ index);
}

// Uniform draw in [0, 1) with 53 random bits.
inline double uniform_unit(RngStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(RngStream& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Zero-mean Gaussian draw via Box-Muller; consumes two stream values per call.
inline double normal_sample(RngStream& rng, double sigma) {
  const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;       // [0, 1)
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace beaconloc
