#pragma once

#include <cstdint>
#include <string_view>

#include "rational.hpp"

namespace skv {

// SplitMix64: tiny, seedable, reproducible across platforms.  Checks derive
// their stream from (global seed, check name) so running checks in any order
// or in isolation produces identical samples.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be nonzero.  Modulo bias is irrelevant
  // for the tiny bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline SplitMix64 rng_for(std::uint64_t seed, std::string_view label) {
  return SplitMix64(seed ^ fnv1a(label));
}

// Random scalar with numerator in [-9, 9] and denominator in {1, 2, 3}:
// small heights keep exact arithmetic fast while still exercising every
// reduction path.
inline Rational random_coord(SplitMix64& rng) {
  long num = static_cast<long>(rng.below(19)) - 9;
  long den = static_cast<long>(rng.below(3)) + 1;
  return rat(num, den);
}

}  // namespace skv
