#pragma once

#include <cstdint>
#include <limits>

namespace seed {

// PCG32: 64-bit LCG state, XSH-RR output permutation, 32-bit results.
class Pcg32 {
 public:
  using result_type = std::uint32_t;

  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  /// Seeds with the fixed default increment.
  explicit Pcg32(std::uint64_t seed) noexcept : Pcg32(seed, kIncrement >> 1) {}

  /// Reference-style seeding (pcg32_srandom_r): increment = (stream << 1) | 1.
  Pcg32(std::uint64_t seed, std::uint64_t stream) noexcept : inc_((stream << 1) | 1U) {
    step();
    state_ += seed;
    step();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  friend bool operator==(const Pcg32&, const Pcg32&) = default;

  result_type operator()() noexcept {
    const std::uint64_t old = state_;
    step();
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
    const auto rot = static_cast<std::uint32_t>(old >> 59U);
    return (xorshifted >> rot) | (xorshifted << ((32U - rot) & 31U));
  }

  /// Unbiased integer in [0, bound) by multiply-and-reject. bound == 0 yields 0.
  result_type bounded(result_type bound) noexcept {
    if (bound == 0) return 0;
    std::uint64_t m = static_cast<std::uint64_t>((*this)()) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
      while (low < threshold) {
        m = static_cast<std::uint64_t>((*this)()) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<result_type>(m >> 32U);
  }

 private:
  void step() noexcept { state_ = state_ * kMultiplier + inc_; }

  std::uint64_t state_ = 0;
  std::uint64_t inc_;
};

}  // namespace seed
