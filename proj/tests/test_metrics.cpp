#include <doctest.h>

#include <algorithm>
#include <random>

#include "seed/error.hpp"
#include "seed/metrics.hpp"
#include "support/oracles.hpp"

using namespace seed;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected seed::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("confusion examples") {
  const std::vector<Label> labels{"A", "B"};
  const std::vector<Label> golds{"A", "A", "B"}, preds{"A", "B", "B"};
  const auto cm = confusion(golds, preds, labels);
  CHECK(cm == ConfusionMatrix(labels, {{1, 1}, {0, 1}}));
  CHECK(cm.total() == 3);

  const auto diag = confusion(golds, golds, labels);
  CHECK(diag == ConfusionMatrix(labels, {{2, 0}, {0, 1}}));
}

TEST_CASE("confusion errors") {
  const std::vector<Label> labels{"A", "B"};
  const std::vector<Label> two{"A", "B"}, one{"A"}, stranger{"A", "Z"}, none;
  CHECK(code_of([&] { confusion(two, one, labels); }) == Errc::length_mismatch);
  CHECK(code_of([&] { confusion(none, none, labels); }) == Errc::length_mismatch);
  CHECK(code_of([&] { confusion(two, stranger, labels); }) == Errc::unknown_label);
  CHECK(code_of([] { accuracy(ConfusionMatrix({"A"})); }) == Errc::empty_matrix);
  CHECK(code_of([] { classwise_f1(ConfusionMatrix({"A"})); }) == Errc::empty_matrix);
  CHECK(code_of([] { ConfusionMatrix({"A", "A"}); }) == Errc::invariant_violation);
  CHECK(code_of([] { ConfusionMatrix({"A", "B"}, {{1, 2}}); }) == Errc::dimension_mismatch);
}

TEST_CASE("confusion and accuracy match a counting oracle") {
  std::mt19937_64 rng(31);
  const std::vector<Label> labels{"Contradict", "Neutral", "Support"};
  for (int t = 0; t < 20; ++t) {
    std::vector<Label> golds, preds;
    for (int i = 0; i < 500; ++i) {
      golds.push_back(labels[rng() % 3]);
      preds.push_back(labels[rng() % 3]);
    }
    const auto cm = confusion(golds, preds, labels);
    const auto ref = oracle::count_pairs(golds, preds);
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        auto it = ref.cell.find({labels[i], labels[j]});
        CHECK(cm.count(i, j) == (it == ref.cell.end() ? 0U : it->second));
      }
    }
    for (std::size_t i = 0; i < golds.size(); ++i) hits += golds[i] == preds[i];
    CHECK(accuracy(cm) == doctest::Approx(static_cast<double>(hits) / 500.0).epsilon(1e-15));
  }
}

TEST_CASE("accuracy and F1 on hand-computed matrices") {
  const ConfusionMatrix cm({"A", "B"}, {{1, 1}, {0, 1}});
  CHECK(accuracy(cm) == 2.0 / 3.0);
  const auto f1 = classwise_f1(cm);
  CHECK(f1.at("A") == 2.0 / 3.0);
  CHECK(f1.at("B") == 2.0 / 3.0);

  const ConfusionMatrix perfect({"A", "B", "C"}, {{4, 0, 0}, {0, 2, 0}, {0, 0, 9}});
  CHECK(accuracy(perfect) == 1.0);
  for (const auto& [l, v] : classwise_f1(perfect)) CHECK(v == 1.0);
}

TEST_CASE("F1 zero-division convention") {
  // C is never gold and never predicted; B is gold but never predicted.
  const ConfusionMatrix cm({"A", "B", "C"}, {{3, 0, 0}, {2, 0, 0}, {0, 0, 0}});
  const auto f1 = classwise_f1(cm);
  // A: P = 3/5, R = 1 -> 2*0.6/1.6 = 0.75
  CHECK(f1.at("A") == 0.75);
  CHECK(f1.at("B") == 0.0);
  CHECK(f1.at("C") == 0.0);
  CHECK(oracle::f1_from_counts(3, 2, 0) == doctest::Approx(0.75));
  CHECK(oracle::f1_from_counts(0, 0, 2) == 0.0);
  CHECK(oracle::f1_from_counts(0, 0, 0) == 0.0);
}

TEST_CASE("F1 matches the precision/recall oracle on random matrices") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 2 + rng() % 3;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(k));
    for (auto& row : counts) {
      for (auto& c : row) c = (rng() % 4 == 0) ? 0 : rng() % 3334;
    }
    counts[0][0] += 1;
    const ConfusionMatrix cm(labels, counts);
    const auto f1 = classwise_f1(cm);
    for (std::size_t i = 0; i < k; ++i) {
      double fp = 0, fn = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) {
          fp += static_cast<double>(counts[j][i]);
          fn += static_cast<double>(counts[i][j]);
        }
      }
      const double expected = oracle::f1_from_counts(static_cast<double>(counts[i][i]), fp, fn);
      CHECK(f1.at(labels[i]) == doctest::Approx(expected).epsilon(1e-12));
      CHECK(f1.at(labels[i]) >= 0.0);
      CHECK(f1.at(labels[i]) <= 1.0);
    }
  }
}

TEST_CASE("binary accuracy equals (TP + TN) / total") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t tp = rng() % 100, fn = rng() % 100, fp = rng() % 100, tn = 1 + rng() % 100;
    const ConfusionMatrix cm({"pos", "neg"}, {{tp, fn}, {fp, tn}});
    CHECK(accuracy(cm) == static_cast<double>(tp + tn) / static_cast<double>(tp + fn + fp + tn));
  }
}

TEST_CASE("F1 is equivariant under relabelling") {
  const ConfusionMatrix cm({"A", "B", "C"}, {{5, 1, 2}, {0, 3, 4}, {1, 1, 6}});
  // A->Z, B->X, C->Y; reorder labels to stay consistent with the rows.
  const ConfusionMatrix renamed({"Z", "X", "Y"}, {{5, 1, 2}, {0, 3, 4}, {1, 1, 6}});
  const auto f1 = classwise_f1(cm);
  const auto g1 = classwise_f1(renamed);
  CHECK(f1.at("A") == g1.at("Z"));
  CHECK(f1.at("B") == g1.at("X"));
  CHECK(f1.at("C") == g1.at("Y"));
}

TEST_CASE("aggregate") {
  SUBCASE("single run") {
    const RunMetrics r{0.42, {{"A", 0.3}, {"B", 0.5}}};
    const std::vector<RunMetrics> runs{r};
    const auto agg = aggregate(runs);
    CHECK(agg.mean == r);
    CHECK(agg.std.accuracy == 0.0);
    CHECK(agg.std.f1_per_class.at("A") == 0.0);
    CHECK(agg.n_runs == 1);
  }
  SUBCASE("two-point formula") {
    const std::vector<RunMetrics> runs{{0.5, {{"A", 0.5}}}, {0.7, {{"A", 0.7}}}};
    const auto agg = aggregate(runs);
    CHECK(agg.mean.accuracy == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(agg.std.accuracy == doctest::Approx(0.1414214).epsilon(1e-6));
  }
  SUBCASE("errors") {
    CHECK(code_of([] { aggregate(std::span<const RunMetrics>{}); }) == Errc::empty_runs);
    const std::vector<RunMetrics> runs{{0.5, {{"A", 0.5}}}, {0.7, {{"B", 0.7}}}};
    CHECK(code_of([&] { aggregate(runs); }) == Errc::label_set_mismatch);
  }
  SUBCASE("matches the two-pass oracle and ignores run order") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      std::vector<RunMetrics> runs;
      for (int i = 0; i < 10; ++i) runs.push_back({u(rng), {{"A", u(rng)}, {"B", u(rng)}}});
      const auto agg = aggregate(runs);
      std::vector<double> acc, fa;
      for (const auto& r : runs) {
        acc.push_back(r.accuracy);
        fa.push_back(r.f1_per_class.at("A"));
      }
      const auto [am, as] = oracle::two_pass_mean_std(acc);
      const auto [fm, fs] = oracle::two_pass_mean_std(fa);
      CHECK(std::abs(agg.mean.accuracy - am) <= 1e-12);
      CHECK(std::abs(agg.std.accuracy - as) <= 1e-12);
      CHECK(std::abs(agg.mean.f1_per_class.at("A") - fm) <= 1e-12);
      CHECK(std::abs(agg.std.f1_per_class.at("A") - fs) <= 1e-12);
      CHECK(agg.std.accuracy >= 0.0);

      std::shuffle(runs.begin(), runs.end(), rng);
      CHECK(aggregate(runs) == agg);
    }
  }
}
