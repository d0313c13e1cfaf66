#pragma once

#include <cstdint>
#include <random>

namespace mwsn {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Seeded uniform random source. Every simulation run owns exactly one
/// stream; equal seeds produce equal draw sequences, which is what makes
/// whole runs reproducible bit for bit.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(scramble(seed)) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform angle in [0, 2*pi).
  double angle() { return kTwoPi * uniform01(); }

 private:
  // splitmix64. Small sequential seeds diffuse poorly into the mt19937_64
  // state; mixing them first keeps adjacent run streams independent.
  static std::uint64_t scramble(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace mwsn
