#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "seed/embedded_pair.hpp"

namespace seed {

inline constexpr std::string_view kSupport = "Support";
inline constexpr std::string_view kContradict = "Contradict";
inline constexpr std::string_view kNeutral = "Neutral";
inline constexpr std::string_view kNotSupport = "Not_Support";

inline constexpr std::size_t kBinaryFeverCap = 3333;

/// Validated, immutable collection of embedded claim/evidence pairs.
///
/// Invariants: every embedding has dimension dim(); labels() is sorted and
/// unique; every pair label is one of labels(); pair ids are unique.
/// Record order is kept exactly as given.
class EmbeddedDataset {
 public:
  EmbeddedDataset(std::size_t dim, std::vector<Label> labels, std::vector<EmbeddedPair> pairs);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::span<const EmbeddedPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Positions of the pairs carrying `label`, in dataset order.
  std::vector<std::size_t> indices_of(const Label& label) const;

  /// Keeps only pairs whose label is in `keep`; the label set becomes `keep`.
  EmbeddedDataset restrict_to(std::span<const Label> keep) const;

  friend bool operator==(const EmbeddedDataset&, const EmbeddedDataset&) = default;

 private:
  std::size_t dim_;
  std::vector<Label> labels_;
  std::vector<EmbeddedPair> pairs_;
};

/// Reads the seed-embeddings JSON Lines format: a header object
/// {"format":"seed-embeddings","version":1,"dim":D,"labels":[...]} followed
/// by one {"id","label","claim","evidence"} object per line. Errors name
/// the offending line.
EmbeddedDataset load_embedded_dataset(const std::filesystem::path& path);
EmbeddedDataset parse_embedded_dataset(std::istream& in, std::string_view source_name);

void save_embedded_dataset(const EmbeddedDataset& dataset, const std::filesystem::path& path);
void write_embedded_dataset(const EmbeddedDataset& dataset, std::ostream& out);

/// Two-class Support / Not_Support view of a three-way dataset.
///
/// Support pairs are kept (sampled down to `cap` if there are more).
/// Not_Support is ceil(cap/2) Contradict plus floor(cap/2) Neutral pairs
/// drawn with Pcg32(seed) and relabelled. Output keeps source order.
EmbeddedDataset make_binary_fever(const EmbeddedDataset& dataset, std::uint64_t seed,
                                  std::size_t cap = kBinaryFeverCap);

}  // namespace seed
