#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "seed/embedded_pair.hpp"

namespace seed {

/// counts(i, j) = number of items with gold label i predicted as label j.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<Label> labels);
  ConfusionMatrix(std::vector<Label> labels, std::vector<std::vector<std::uint64_t>> counts);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::uint64_t count(std::size_t gold, std::size_t pred) const;
  std::size_t index_of(const Label& label) const;

  void add(std::size_t gold, std::size_t pred, std::uint64_t n = 1);

  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t trace() const;
  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t column_sum(std::size_t j) const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<std::uint64_t> counts_;  // row-major
  std::uint64_t total_ = 0;
};

ConfusionMatrix confusion(std::span<const Label> golds, std::span<const Label> preds,
                          std::span<const Label> labels);

double accuracy(const ConfusionMatrix& cm);

/// Per-class F1. A class with no true positives, including one that is
/// never predicted or never present, scores 0.
std::map<Label, double> classwise_f1(const ConfusionMatrix& cm);

struct RunMetrics {
  double accuracy = 0.0;
  std::map<Label, double> f1_per_class;

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

RunMetrics evaluate(const ConfusionMatrix& cm);

struct AggregateMetrics {
  RunMetrics mean;
  RunMetrics std;  // sample standard deviation, n - 1 denominator
  std::size_t n_runs = 0;

  friend bool operator==(const AggregateMetrics&, const AggregateMetrics&) = default;
};

/// Mean and sample standard deviation across runs. Each component is
/// reduced over its sorted values, so the result does not depend on the
/// order of `runs`.
AggregateMetrics aggregate(std::span<const RunMetrics> runs);

}  // namespace seed
