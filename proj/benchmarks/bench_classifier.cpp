#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "seed/classifier.hpp"
#include "seed/dataset.hpp"
#include "seed/harness.hpp"

namespace {

seed::EmbeddedDataset make_dataset(std::size_t per_class, std::size_t dim) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<seed::Label> labels{"Contradict", "Neutral", "Support"};
  std::vector<seed::EmbeddedPair> pairs;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      std::vector<double> claim(dim), evidence(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        claim[k] = gauss(rng);
        evidence[k] = claim[k] + gauss(rng) * (1.0 + static_cast<double>(c));
      }
      pairs.push_back({labels[c] + "-" + std::to_string(i), labels[c],
                       seed::EmbeddingVector(std::move(claim)),
                       seed::EmbeddingVector(std::move(evidence))});
    }
  }
  return seed::EmbeddedDataset(dim, labels, std::move(pairs));
}

void BM_Fit(benchmark::State& state) {
  const auto data = make_dataset(static_cast<std::size_t>(state.range(0)), 768);
  for (auto _ : state) {
    benchmark::DoNotOptimize(seed::fit(data.pairs()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_Fit)->Arg(10)->Arg(100);

void BM_PredictBatch(benchmark::State& state) {
  const auto data = make_dataset(static_cast<std::size_t>(state.range(0)), 768);
  const auto model = seed::fit(data.pairs());
  for (auto _ : state) {
    benchmark::DoNotOptimize(seed::predict_batch(model, data.pairs()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_PredictBatch)->Arg(100)->Arg(1000);

void BM_SampleShots(benchmark::State& state) {
  const auto data = make_dataset(1000, 32);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t s = 123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(seed::sample_shots(data, n, s++));
  }
}
BENCHMARK(BM_SampleShots)->Arg(2)->Arg(100);

void BM_RunSingle(benchmark::State& state) {
  const auto data = make_dataset(1000, 384);
  for (auto _ : state) {
    benchmark::DoNotOptimize(seed::run_single(data, 10, 123));
  }
}
BENCHMARK(BM_RunSingle);

}  // namespace
BENCHMARK_MAIN();
