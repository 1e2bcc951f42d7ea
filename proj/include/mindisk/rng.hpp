#pragma once

#include <cstdint>
#include <random>

namespace mindisk {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Uniform double in [0, 1) built from the top 53 bits of a raw draw, so the
/// stream does not depend on any library's distribution implementation.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

}  // namespace mindisk
