#pragma once

#include <cstdint>
#include <limits>

namespace cryptobench {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator, so it plugs into
/// <random> distributions; also used as a counter-based generator via
/// `SplitMix64::at(seed, index)`.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  constexpr explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  /// Independent stream for item `index` of a seeded family.
  static constexpr SplitMix64 at(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + mix64(index + 0x9e3779b97f4a7c15ULL));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform value in [0, bound) by rejection; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t v;
    do v = (*this)(); while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cryptobench
