#ifndef FFDET_RNG_HPP
#define FFDET_RNG_HPP

#include <cstdint>

namespace ffdet {

/// SplitMix64: a tiny deterministic generator with a platform-independent
/// sequence, so seeded randomized checks reproduce exactly everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n > 0.  The slight modulo bias is
  /// irrelevant for the desk-scale ranges used here.
  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
  }

  /// Value in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::uint64_t s_;
};

}  // namespace ffdet

#endif  // FFDET_RNG_HPP
