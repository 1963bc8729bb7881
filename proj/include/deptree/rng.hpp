#pragma once

#include <cstdint>
#include <vector>

namespace deptree {

/// Project-wide deterministic generator: SplitMix64 (Steele, Lea & Flood).
/// The algorithm is fixed here and in the README so that seeded runs
/// replicate bit-for-bit on any platform and compiler. Do not swap this for
/// std::mt19937 + std::uniform_int_distribution: the distribution's output
/// is implementation-defined.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw in [0, bound) by rejection. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed of the index-th independent substream of `seed`. Equals the index-th
/// output of SplitMix64(seed), computed in O(1), so sharded runs reproduce
/// the single-worker sequence exactly.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed + index * SplitMix64::kGolden).next();
}

/// In-place Fisher-Yates shuffle driven by SplitMix64.
template <class T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace deptree
