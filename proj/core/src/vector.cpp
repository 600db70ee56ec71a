#include "seed/vector.hpp"

#include <cmath>
#include <string>

#include "seed/error.hpp"

namespace seed {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  if (values.empty()) {
    throw Error(Errc::invariant_violation, std::string(what) + " must have dim >= 1");
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw Error(Errc::non_finite_input,
                  std::string(what) + " component " + std::to_string(k) + " is not finite");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(Errc::dimension_mismatch,
                "dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

EmbeddingVector::EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "embedding");
}

EmbeddingVector::EmbeddingVector(std::span<const float> values)
    : EmbeddingVector(std::vector<double>(values.begin(), values.end())) {}

DiffVector::DiffVector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "difference vector");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0.0) {
      throw Error(Errc::invariant_violation,
                  "difference vector component " + std::to_string(k) + " is negative");
    }
  }
}

DiffVector diff_vector(const EmbeddingVector& claim, const EmbeddingVector& evidence) {
  require_same_dim(claim.dim(), evidence.dim());
  std::vector<double> out(claim.dim());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::fabs(evidence[k] - claim[k]);
  }
  return DiffVector(std::move(out));
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace seed
