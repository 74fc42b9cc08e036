#pragma once

#include <cstdint>

namespace fraglaw {

/// Counter-based 64-bit generator (SplitMix64).  The state advances by a
/// fixed odd constant, so the k-th output is a pure function of (seed, k).
/// Together with derive_subseed this gives bit-reproducible parallel runs:
/// every trial owns an independent stream keyed by its index, and the
/// schedule of threads cannot change any draw.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0,1).  Zero is rejected so the
  /// result is always a valid cut proportion.
  double unit_open() noexcept {
    for (;;) {
      const double u = static_cast<double>((*this)() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  /// Unbiased uniform integer in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t limit = max() - max() % n;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r < limit) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed for the stream of the trial/tree/matrix with the given index.
/// Two finalizer rounds decorrelate (root_seed, index) pairs.
constexpr std::uint64_t derive_subseed(std::uint64_t root_seed, std::uint64_t index) noexcept {
  std::uint64_t z = root_seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  for (int round = 0; round < 2; ++round) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    z += 0x9e3779b97f4a7c15ull;
  }
  return z;
}

}  // namespace fraglaw
