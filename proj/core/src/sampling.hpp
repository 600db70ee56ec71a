#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "seed/pcg32.hpp"

namespace seed::detail {

// Partial Fisher-Yates over `members`: slot i swaps with a uniform pick
// from [i, size). Returns the first `take` slots in slot order.
inline std::vector<std::size_t> partial_shuffle(std::vector<std::size_t> members,
                                                std::size_t take, Pcg32& rng) {
  for (std::size_t i = 0; i < take; ++i) {
    const auto remaining = static_cast<std::uint32_t>(members.size() - i);
    const std::size_t j = i + rng.bounded(remaining);
    std::swap(members[i], members[j]);
  }
  members.resize(take);
  return members;
}

}  // namespace seed::detail
