#include "seed/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "seed/classifier.hpp"
#include "seed/error.hpp"
#include "seed/pcg32.hpp"
#include "sampling.hpp"

namespace seed {
namespace {

void require_class_size(const EmbeddedDataset& dataset, const Label& label,
                        std::size_t have, std::size_t need) {
  if (have < need) {
    throw Error(Errc::insufficient_class_size,
                "class '" + label + "' has " + std::to_string(have) + " pairs, need " +
                    std::to_string(need) + " (dataset of " + std::to_string(dataset.size()) +
                    ")");
  }
}

}  // namespace

Split sample_shots(const EmbeddedDataset& dataset, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::invalid_config, "shot count must be positive");
  Pcg32 rng(seed);
  std::vector<bool> in_train(dataset.size(), false);
  std::vector<EmbeddedPair> train;
  train.reserve(n * dataset.labels().size());

  for (const auto& label : dataset.labels()) {
    auto members = dataset.indices_of(label);
    require_class_size(dataset, label, members.size(), n + 1);
    for (auto i : detail::partial_shuffle(std::move(members), n, rng)) {
      in_train[i] = true;
      train.push_back(dataset.pairs()[i]);
    }
  }

  std::vector<EmbeddedPair> test;
  test.reserve(dataset.size() - train.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (!in_train[i]) test.push_back(dataset.pairs()[i]);
  }
  return {EmbeddedDataset(dataset.dim(), dataset.labels(), std::move(train)),
          EmbeddedDataset(dataset.dim(), dataset.labels(), std::move(test))};
}

void ExperimentConfig::validate(const EmbeddedDataset& dataset) const {
  if (shot_counts.empty()) throw Error(Errc::invalid_config, "no shot counts");
  if (seeds.empty()) throw Error(Errc::invalid_config, "no seeds");
  for (std::size_t i = 0; i < shot_counts.size(); ++i) {
    if (shot_counts[i] == 0) throw Error(Errc::invalid_config, "shot counts must be positive");
    if (i > 0 && shot_counts[i] <= shot_counts[i - 1]) {
      throw Error(Errc::invalid_config, "shot counts must be strictly ascending");
    }
  }
  if (dataset.labels().empty()) throw Error(Errc::invalid_config, "dataset has no labels");
  const std::size_t largest = shot_counts.back();
  if (largest * dataset.labels().size() >= dataset.size()) {
    throw Error(Errc::insufficient_class_size,
                std::to_string(largest) + " shots x " + std::to_string(dataset.labels().size()) +
                    " classes leaves no test pairs in a dataset of " +
                    std::to_string(dataset.size()));
  }
  for (const auto& label : dataset.labels()) {
    require_class_size(dataset, label, dataset.indices_of(label).size(), largest + 1);
  }
}

RunMetrics run_single(const EmbeddedDataset& dataset, std::size_t n, std::uint64_t seed) {
  const auto split = sample_shots(dataset, n, seed);
  const auto model = fit(split.train.pairs());
  const auto predictions = predict_batch(model, split.test.pairs());

  std::vector<Label> golds, preds;
  golds.reserve(predictions.size());
  preds.reserve(predictions.size());
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    golds.push_back(split.test.pairs()[i].label);
    preds.push_back(predictions[i].label);
  }
  return evaluate(confusion(golds, preds, dataset.labels()));
}

std::map<std::size_t, AggregateMetrics> run_nshot_experiment(const ExperimentConfig& config,
                                                             const EmbeddedDataset& dataset) {
  const EmbeddedDataset data = config.labels.empty() ? dataset : dataset.restrict_to(config.labels);
  config.validate(data);

  const std::size_t n_seeds = config.seeds.size();
  const std::size_t n_cells = config.shot_counts.size() * n_seeds;
  std::vector<RunMetrics> cells(n_cells);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t c = next++; c < n_cells; c = next++) {
      try {
        cells[c] = run_single(data, config.shot_counts[c / n_seeds], config.seeds[c % n_seeds]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1U, static_cast<unsigned>(n_cells));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::map<std::size_t, AggregateMetrics> out;
  for (std::size_t s = 0; s < config.shot_counts.size(); ++s) {
    std::span<const RunMetrics> runs(cells.data() + s * n_seeds, n_seeds);
    out.emplace(config.shot_counts[s], aggregate(runs));
  }
  return out;
}

std::vector<ConvergencePoint> convergence_curve(const EmbeddedDataset& dataset,
                                                std::size_t max_n, std::uint64_t seed) {
  if (max_n < 2) throw Error(Errc::invalid_config, "max_n must be >= 2");
  if (dataset.labels().empty()) throw Error(Errc::invalid_config, "dataset has no labels");

  Pcg32 rng(seed);
  std::vector<std::vector<DiffVector>> ordered;
  for (const auto& label : dataset.labels()) {
    auto members = dataset.indices_of(label);
    require_class_size(dataset, label, members.size(), max_n);
    auto& seq = ordered.emplace_back();
    for (auto i : detail::partial_shuffle(std::move(members), max_n, rng)) {
      const auto& p = dataset.pairs()[i];
      seq.push_back(diff_vector(p.claim, p.evidence));
    }
  }

  std::vector<ClassRepresentative> reps;
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    reps.push_back(ClassRepresentative::from_sample(dataset.labels()[c], ordered[c][0]));
  }

  std::vector<ConvergencePoint> curve;
  curve.reserve(max_n - 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    ConvergencePoint point;
    point.n = n;
    double sum = 0.0;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      auto next = fit_incremental(reps[c], ordered[c][n - 1]);
      const double d = euclidean_distance(next.mean(), reps[c].mean());
      point.distance.emplace(reps[c].label(), d);
      sum += d;
      reps[c] = std::move(next);
    }
    point.mean_distance = sum / static_cast<double>(reps.size());
    curve.push_back(std::move(point));
  }
  return curve;
}

}  // namespace seed
