#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "seed/dataset.hpp"

namespace seed::fixtures {

inline std::vector<double> uniform_vec(std::mt19937_64& rng, std::size_t dim, double lo,
                                       double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(dim);
  for (auto& x : v) x = u(rng);
  return v;
}

/// Three classes whose difference vectors sit within `noise` (per component)
/// of centres that are `spacing` apart along distinct axes. With the defaults
/// the intra-class diameter is <= 0.1 * sqrt(8) ~ 0.28 and the centre
/// separation is 20 * sqrt(2) ~ 28, a factor of about 100.
inline EmbeddedDataset separable(std::size_t per_class, std::uint64_t seed = 1,
                                 std::size_t dim = 8, double spacing = 20.0,
                                 double noise = 0.1) {
  std::mt19937_64 rng(seed);
  const std::vector<Label> labels{"Contradict", "Neutral", "Support"};
  std::vector<EmbeddedPair> pairs;
  for (std::size_t i = 0; i < per_class; ++i) {
    for (std::size_t c = 0; c < labels.size(); ++c) {
      auto claim = uniform_vec(rng, dim, -1.0, 1.0);
      auto offset = uniform_vec(rng, dim, 0.0, noise);
      offset[c] += spacing;
      std::vector<double> evidence(dim);
      // Alternate sign so the claim/evidence order varies; |e - c| is unchanged.
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t k = 0; k < dim; ++k) evidence[k] = claim[k] + sign * offset[k];
      pairs.push_back({labels[c] + "-" + std::to_string(i), labels[c],
                       EmbeddingVector(std::move(claim)), EmbeddingVector(std::move(evidence))});
    }
  }
  return EmbeddedDataset(dim, labels, std::move(pairs));
}

/// Every pair shares the same claim and evidence; labels drawn uniformly.
inline EmbeddedDataset null_model(std::size_t size, std::size_t n_labels, std::uint64_t seed,
                                  std::size_t dim = 4) {
  std::mt19937_64 rng(seed);
  std::vector<Label> labels;
  for (std::size_t c = 0; c < n_labels; ++c) labels.push_back("L" + std::to_string(c));
  std::uniform_int_distribution<std::size_t> pick(0, n_labels - 1);
  const auto claim = uniform_vec(rng, dim, -1.0, 1.0);
  const auto evidence = uniform_vec(rng, dim, -1.0, 1.0);
  std::vector<EmbeddedPair> pairs;
  for (std::size_t i = 0; i < size; ++i) {
    pairs.push_back({"p" + std::to_string(i), labels[pick(rng)], EmbeddingVector(claim),
                     EmbeddingVector(evidence)});
  }
  return EmbeddedDataset(dim, labels, std::move(pairs));
}

/// Difference vectors drawn inside an L2 ball of `radius` around a
/// per-class centre (claim = 0, evidence = difference).
inline EmbeddedDataset bounded_ball(std::size_t per_class, double radius, std::uint64_t seed,
                                    std::size_t dim = 6) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<Label> labels{"A", "B", "C"};
  std::vector<EmbeddedPair> pairs;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    std::vector<double> centre(dim, radius * 2.0);
    centre[c] += 5.0;
    for (std::size_t i = 0; i < per_class; ++i) {
      std::vector<double> dir(dim);
      double norm = 0.0;
      for (auto& x : dir) {
        x = gauss(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      const double r = radius * std::pow(u(rng), 1.0 / static_cast<double>(dim));
      std::vector<double> evidence(dim);
      for (std::size_t k = 0; k < dim; ++k) evidence[k] = centre[k] + r * dir[k] / norm;
      pairs.push_back({labels[c] + std::to_string(i), labels[c],
                       EmbeddingVector(std::vector<double>(dim, 0.0)),
                       EmbeddingVector(std::move(evidence))});
    }
  }
  return EmbeddedDataset(dim, labels, std::move(pairs));
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("seed-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace seed::fixtures
