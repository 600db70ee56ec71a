#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "seed/embedded_pair.hpp"
#include "seed/vector.hpp"

namespace seed {

/// Running mean of the difference vectors seen for one class.
class ClassRepresentative {
 public:
  ClassRepresentative(Label label, std::vector<double> mean, std::size_t count);

  static ClassRepresentative from_sample(Label label, const DiffVector& sample);

  const Label& label() const noexcept { return label_; }
  std::span<const double> mean() const noexcept { return mean_; }
  std::size_t count() const noexcept { return count_; }
  std::size_t dim() const noexcept { return mean_.size(); }

  friend bool operator==(const ClassRepresentative&, const ClassRepresentative&) = default;

 private:
  Label label_;
  std::vector<double> mean_;
  std::size_t count_;
};

/// Absorbs one more sample: mean' = mean + (sample - mean) / (count + 1).
ClassRepresentative fit_incremental(const ClassRepresentative& rep, const DiffVector& sample);

/// Immutable set of class representatives, sorted by label (byte order).
/// Shared read-only use from several threads is safe.
class ClassifierModel {
 public:
  explicit ClassifierModel(std::vector<ClassRepresentative> representatives);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return representatives_.size(); }
  std::span<const ClassRepresentative> representatives() const noexcept {
    return representatives_;
  }
  const ClassRepresentative* find(const Label& label) const;

  friend bool operator==(const ClassifierModel&, const ClassifierModel&) = default;

 private:
  std::size_t dim_;
  std::vector<ClassRepresentative> representatives_;
};

struct LabeledDiff {
  Label label;
  DiffVector diff;
};

ClassifierModel fit(std::span<const LabeledDiff> samples);

/// Convenience overload: computes the difference vector of every pair first.
ClassifierModel fit(std::span<const EmbeddedPair> pairs);

struct Prediction {
  Label label;
  std::map<Label, double> distances;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Nearest representative by Euclidean distance. On exact ties the
/// lexicographically smallest label wins.
Prediction predict(const ClassifierModel& model, const DiffVector& query);
Prediction predict(const ClassifierModel& model, const EmbeddingVector& claim,
                   const EmbeddingVector& evidence);

std::vector<Prediction> predict_batch(const ClassifierModel& model,
                                      std::span<const EmbeddedPair> pairs);

}  // namespace seed
