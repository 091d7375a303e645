#pragma once

#include <cstdint>

namespace muonkit {

/// SplitMix64 mixing generator (Steele/Lea/Flood; fixed-increment variant by
/// Vigna). Chosen because the full uint64 stream is reproducible from the seed
/// alone with no platform-dependent state, which pins experiment data bit-for-
/// bit across builds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller, cosine branch only. Consumes exactly two
  /// uint64 draws per value so the stream layout is easy to document.
  double next_gaussian();

 private:
  std::uint64_t state_;
};

}  // namespace muonkit
