#include "seed/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seed/error.hpp"

namespace seed {

ConfusionMatrix::ConfusionMatrix(std::vector<Label> labels)
    : labels_(std::move(labels)), counts_(labels_.size() * labels_.size(), 0) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(Errc::invariant_violation, "duplicate label '" + labels_[i] + "'");
      }
    }
  }
}

ConfusionMatrix::ConfusionMatrix(std::vector<Label> labels,
                                 std::vector<std::vector<std::uint64_t>> counts)
    : ConfusionMatrix(std::move(labels)) {
  if (counts.size() != size()) {
    throw Error(Errc::dimension_mismatch, "confusion matrix must be square over its labels");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (counts[i].size() != size()) {
      throw Error(Errc::dimension_mismatch, "confusion matrix must be square over its labels");
    }
    for (std::size_t j = 0; j < size(); ++j) add(i, j, counts[i][j]);
  }
}

std::uint64_t ConfusionMatrix::count(std::size_t gold, std::size_t pred) const {
  return counts_.at(gold * size() + pred);
}

std::size_t ConfusionMatrix::index_of(const Label& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::unknown_label, "label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

void ConfusionMatrix::add(std::size_t gold, std::size_t pred, std::uint64_t n) {
  counts_.at(gold * size() + pred) += n;
  total_ += n;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < size(); ++i) t += count(i, i);
  return t;
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t i) const {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < size(); ++j) s += count(i, j);
  return s;
}

std::uint64_t ConfusionMatrix::column_sum(std::size_t j) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += count(i, j);
  return s;
}

ConfusionMatrix confusion(std::span<const Label> golds, std::span<const Label> preds,
                          std::span<const Label> labels) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::length_mismatch, std::to_string(golds.size()) + " golds vs " +
                                           std::to_string(preds.size()) + " predictions");
  }
  if (golds.empty()) throw Error(Errc::length_mismatch, "nothing to evaluate");
  ConfusionMatrix cm(std::vector<Label>(labels.begin(), labels.end()));
  for (std::size_t i = 0; i < golds.size(); ++i) {
    cm.add(cm.index_of(golds[i]), cm.index_of(preds[i]));
  }
  return cm;
}

double accuracy(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw Error(Errc::empty_matrix, "accuracy of an empty matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
}

std::map<Label, double> classwise_f1(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw Error(Errc::empty_matrix, "F1 of an empty matrix");
  std::map<Label, double> out;
  for (std::size_t i = 0; i < cm.size(); ++i) {
    const std::uint64_t tp = cm.count(i, i);
    const std::uint64_t row = cm.row_sum(i);
    const std::uint64_t col = cm.column_sum(i);
    double f1 = 0.0;
    if (tp > 0) {
      // 2PR/(P+R) with P = tp/col and R = tp/row, as one integer ratio.
      f1 = static_cast<double>(2 * tp) / static_cast<double>(row + col);
    }
    out.emplace(cm.labels()[i], f1);
  }
  return out;
}

RunMetrics evaluate(const ConfusionMatrix& cm) { return {accuracy(cm), classwise_f1(cm)}; }

namespace {

struct MeanStd {
  double mean;
  double std;
};

MeanStd reduce(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

AggregateMetrics aggregate(std::span<const RunMetrics> runs) {
  if (runs.empty()) throw Error(Errc::empty_runs, "no runs to aggregate");
  const auto& first = runs.front().f1_per_class;
  for (const auto& r : runs) {
    const bool same = r.f1_per_class.size() == first.size() &&
                      std::equal(r.f1_per_class.begin(), r.f1_per_class.end(), first.begin(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) throw Error(Errc::label_set_mismatch, "runs disagree on the label set");
  }

  AggregateMetrics out;
  out.n_runs = runs.size();
  std::vector<double> values;
  values.reserve(runs.size());

  for (const auto& r : runs) values.push_back(r.accuracy);
  auto acc = reduce(values);
  out.mean.accuracy = acc.mean;
  out.std.accuracy = acc.std;

  for (const auto& [label, unused] : first) {
    values.clear();
    for (const auto& r : runs) values.push_back(r.f1_per_class.at(label));
    auto f = reduce(values);
    out.mean.f1_per_class.emplace(label, f.mean);
    out.std.f1_per_class.emplace(label, f.std);
  }
  return out;
}

}  // namespace seed
