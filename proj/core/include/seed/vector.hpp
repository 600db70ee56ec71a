#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace seed {

/// Dense sentence embedding. Construction rejects empty input and any
/// NaN or infinite component.
class EmbeddingVector {
 public:
  explicit EmbeddingVector(std::vector<double> values);
  explicit EmbeddingVector(std::span<const float> values);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

/// Component-wise |evidence - claim|. Always finite and non-negative.
class DiffVector {
 public:
  explicit DiffVector(std::vector<double> values);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  friend bool operator==(const DiffVector&, const DiffVector&) = default;

 private:
  std::vector<double> values_;
};

DiffVector diff_vector(const EmbeddingVector& claim, const EmbeddingVector& evidence);

/// sqrt(sum_k (a[k] - b[k])^2), accumulated in index order.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

}  // namespace seed
