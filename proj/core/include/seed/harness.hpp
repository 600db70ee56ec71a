#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "seed/dataset.hpp"
#include "seed/metrics.hpp"

namespace seed {

inline const std::vector<std::size_t> kDefaultShotCounts{2, 4, 6, 8, 10, 20, 30, 40, 50, 100};
inline const std::vector<std::uint64_t> kDefaultSeeds{123, 124, 125, 126, 127,
                                                      128, 129, 130, 131, 132};

struct Split {
  EmbeddedDataset train;
  EmbeddedDataset test;
};

/// Draws exactly n pairs per class for training; everything else is test.
///
/// One Pcg32(seed) stream is shared across classes, which are visited in
/// sorted label order. For each class the member positions (dataset order)
/// go through a partial Fisher-Yates shuffle and the first n slots form the
/// training pairs, in slot order. Test pairs keep dataset order.
Split sample_shots(const EmbeddedDataset& dataset, std::size_t n, std::uint64_t seed);

struct ExperimentConfig {
  std::vector<std::size_t> shot_counts = kDefaultShotCounts;
  std::vector<std::uint64_t> seeds = kDefaultSeeds;
  std::vector<Label> labels;  // empty: use the dataset's label set
  std::filesystem::path dataset_path;
  std::filesystem::path output_path;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws Errc::invalid_config or Errc::insufficient_class_size.
  void validate(const EmbeddedDataset& dataset) const;
};

/// Fit on the sampled shots, predict the rest, score.
RunMetrics run_single(const EmbeddedDataset& dataset, std::size_t n, std::uint64_t seed);

/// Every (n, seed) cell, aggregated across seeds per n. Cells may run on
/// several threads; the result is independent of scheduling.
std::map<std::size_t, AggregateMetrics> run_nshot_experiment(const ExperimentConfig& config,
                                                             const EmbeddedDataset& dataset);

struct ConvergencePoint {
  std::size_t n = 0;
  std::map<Label, double> distance;  // ||rep_n - rep_{n-1}|| per class
  double mean_distance = 0.0;
};

/// Distance between consecutive running-mean representatives for
/// n = 2..max_n. The per-class sample order is a seeded partial
/// Fisher-Yates draw of max_n members, as in sample_shots.
std::vector<ConvergencePoint> convergence_curve(const EmbeddedDataset& dataset,
                                                std::size_t max_n, std::uint64_t seed);

}  // namespace seed
