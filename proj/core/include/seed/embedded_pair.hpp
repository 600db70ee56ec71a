#pragma once

#include <string>

#include "seed/vector.hpp"

namespace seed {

using Label = std::string;

// One dataset row: a claim, its evidence and the gold veracity label.
struct EmbeddedPair {
  std::string id;
  Label label;
  EmbeddingVector claim;
  EmbeddingVector evidence;

  friend bool operator==(const EmbeddedPair&, const EmbeddedPair&) = default;
};

}  // namespace seed
