#include "muonkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace muonkit {

double SplitMix64::next_gaussian() {
  // (next() >> 11) + 1 lands in [1, 2^53], so u1 is in (0, 1] and log(u1)
  // is always finite.
  const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace muonkit
