#include "seed/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seed/error.hpp"

namespace seed {
namespace {

void require_dim(std::size_t expected, std::size_t got, const std::string& what) {
  if (expected != got) {
    throw Error(Errc::dimension_mismatch, what + " has dim " + std::to_string(got) +
                                              ", expected " + std::to_string(expected));
  }
}

}  // namespace

ClassRepresentative::ClassRepresentative(Label label, std::vector<double> mean, std::size_t count)
    : label_(std::move(label)), mean_(std::move(mean)), count_(count) {
  if (count_ == 0) {
    throw Error(Errc::invariant_violation, "representative '" + label_ + "' has count 0");
  }
  if (mean_.empty()) {
    throw Error(Errc::invariant_violation, "representative '" + label_ + "' has dim 0");
  }
  for (std::size_t k = 0; k < mean_.size(); ++k) {
    if (!std::isfinite(mean_[k])) {
      throw Error(Errc::non_finite_input, "representative '" + label_ + "' component " +
                                              std::to_string(k) + " is not finite");
    }
    if (mean_[k] < 0.0) {
      throw Error(Errc::invariant_violation, "representative '" + label_ + "' component " +
                                                 std::to_string(k) + " is negative");
    }
  }
}

ClassRepresentative ClassRepresentative::from_sample(Label label, const DiffVector& sample) {
  const auto v = sample.values();
  return ClassRepresentative(std::move(label), std::vector<double>(v.begin(), v.end()), 1);
}

ClassRepresentative fit_incremental(const ClassRepresentative& rep, const DiffVector& sample) {
  require_dim(rep.dim(), sample.dim(), "sample");
  const std::size_t count = rep.count() + 1;
  const auto n = static_cast<double>(count);
  std::vector<double> mean(rep.mean().begin(), rep.mean().end());
  for (std::size_t k = 0; k < mean.size(); ++k) {
    mean[k] += (sample[k] - mean[k]) / n;
  }
  return ClassRepresentative(rep.label(), std::move(mean), count);
}

ClassifierModel::ClassifierModel(std::vector<ClassRepresentative> representatives)
    : dim_(0), representatives_(std::move(representatives)) {
  if (representatives_.empty()) {
    throw Error(Errc::empty_model, "model needs at least one class");
  }
  dim_ = representatives_.front().dim();
  for (std::size_t i = 0; i < representatives_.size(); ++i) {
    const auto& rep = representatives_[i];
    require_dim(dim_, rep.dim(), "representative '" + rep.label() + "'");
    if (i > 0) {
      const auto& prev = representatives_[i - 1].label();
      if (prev == rep.label()) {
        throw Error(Errc::invariant_violation, "duplicate class label '" + rep.label() + "'");
      }
      if (!(prev < rep.label())) {
        throw Error(Errc::invariant_violation,
                    "classes not sorted: '" + prev + "' before '" + rep.label() + "'");
      }
    }
  }
}

const ClassRepresentative* ClassifierModel::find(const Label& label) const {
  auto it = std::lower_bound(
      representatives_.begin(), representatives_.end(), label,
      [](const ClassRepresentative& rep, const Label& l) { return rep.label() < l; });
  if (it == representatives_.end() || it->label() != label) return nullptr;
  return &*it;
}

ClassifierModel fit(std::span<const LabeledDiff> samples) {
  if (samples.empty()) {
    throw Error(Errc::empty_training_set, "no training samples");
  }
  struct Accumulator {
    std::vector<double> sum;
    std::size_t count = 0;
  };
  const std::size_t dim = samples.front().diff.dim();
  std::map<Label, Accumulator> by_label;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    require_dim(dim, s.diff.dim(), "sample " + std::to_string(i));
    auto& acc = by_label[s.label];
    if (acc.sum.empty()) acc.sum.assign(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) acc.sum[k] += s.diff[k];
    ++acc.count;
  }

  std::vector<ClassRepresentative> reps;
  reps.reserve(by_label.size());
  for (auto& [label, acc] : by_label) {
    const auto n = static_cast<double>(acc.count);
    for (double& v : acc.sum) v /= n;
    reps.emplace_back(label, std::move(acc.sum), acc.count);
  }
  return ClassifierModel(std::move(reps));
}

ClassifierModel fit(std::span<const EmbeddedPair> pairs) {
  std::vector<LabeledDiff> samples;
  samples.reserve(pairs.size());
  for (const auto& p : pairs) {
    samples.push_back({p.label, diff_vector(p.claim, p.evidence)});
  }
  return fit(std::span<const LabeledDiff>(samples));
}

Prediction predict(const ClassifierModel& model, const DiffVector& query) {
  require_dim(model.dim(), query.dim(), "query");
  Prediction out;
  double best = 0.0;
  const ClassRepresentative* winner = nullptr;
  // Representatives are label-sorted, so strict < keeps the smallest label on ties.
  for (const auto& rep : model.representatives()) {
    const double d = euclidean_distance(query.values(), rep.mean());
    out.distances.emplace_hint(out.distances.end(), rep.label(), d);
    if (winner == nullptr || d < best) {
      best = d;
      winner = &rep;
    }
  }
  out.label = winner->label();
  return out;
}

Prediction predict(const ClassifierModel& model, const EmbeddingVector& claim,
                   const EmbeddingVector& evidence) {
  require_dim(model.dim(), claim.dim(), "claim");
  require_dim(model.dim(), evidence.dim(), "evidence");
  return predict(model, diff_vector(claim, evidence));
}

std::vector<Prediction> predict_batch(const ClassifierModel& model,
                                      std::span<const EmbeddedPair> pairs) {
  std::vector<Prediction> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(predict(model, p.claim, p.evidence));
  return out;
}

}  // namespace seed
