#include "seed/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "seed/error.hpp"
#include "seed/pcg32.hpp"
#include "sampling.hpp"

namespace seed {

using nlohmann::json;

EmbeddedDataset::EmbeddedDataset(std::size_t dim, std::vector<Label> labels,
                                 std::vector<EmbeddedPair> pairs)
    : dim_(dim), labels_(std::move(labels)), pairs_(std::move(pairs)) {
  if (dim_ == 0) throw Error(Errc::invariant_violation, "dataset dim must be >= 1");
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw Error(Errc::invariant_violation, "duplicate label in label set");
  }
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (p.claim.dim() != dim_ || p.evidence.dim() != dim_) {
      throw Error(Errc::dimension_mismatch, "pair '" + p.id + "' does not have dim " +
                                                std::to_string(dim_));
    }
    if (!std::binary_search(labels_.begin(), labels_.end(), p.label)) {
      throw Error(Errc::unknown_label, "pair '" + p.id + "' has label '" + p.label + "'");
    }
    if (!ids.insert(p.id).second) {
      throw Error(Errc::duplicate_id, "id '" + p.id + "' appears twice");
    }
  }
}

std::vector<std::size_t> EmbeddedDataset::indices_of(const Label& label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].label == label) out.push_back(i);
  }
  return out;
}

EmbeddedDataset EmbeddedDataset::restrict_to(std::span<const Label> keep) const {
  std::vector<Label> labels(keep.begin(), keep.end());
  for (const auto& l : labels) {
    if (!std::binary_search(labels_.begin(), labels_.end(), l)) {
      throw Error(Errc::missing_class, "dataset has no class '" + l + "'");
    }
  }
  std::vector<EmbeddedPair> pairs;
  for (const auto& p : pairs_) {
    if (std::find(labels.begin(), labels.end(), p.label) != labels.end()) pairs.push_back(p);
  }
  return EmbeddedDataset(dim_, std::move(labels), std::move(pairs));
}

namespace {

[[noreturn]] void fail_at(Errc code, std::string_view source, std::size_t line,
                          const std::string& what) {
  throw Error(code, std::string(source) + ": line " + std::to_string(line) + ": " + what);
}

std::vector<double> read_vector(const json& j, const char* key, std::size_t dim,
                                std::string_view source, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    fail_at(Errc::parse_error, source, line, std::string("'") + key + "' must be an array");
  }
  std::vector<double> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number()) {
      fail_at(Errc::parse_error, source, line, std::string("'") + key + "' holds a non-number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      fail_at(Errc::non_finite_input, source, line, std::string("'") + key + "' is not finite");
    }
    out.push_back(x);
  }
  if (out.size() != dim) {
    fail_at(Errc::dimension_mismatch, source, line,
            std::string("'") + key + "' has " + std::to_string(out.size()) +
                " components, header declares dim " + std::to_string(dim));
  }
  return out;
}

std::string read_string(const json& j, const char* key, std::string_view source,
                        std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    fail_at(Errc::parse_error, source, line, std::string("'") + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

EmbeddedDataset parse_embedded_dataset(std::istream& in, std::string_view source_name) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t dim = 0;
  std::vector<Label> labels;
  std::vector<EmbeddedPair> pairs;
  std::unordered_set<std::string> ids;

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;

    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail_at(Errc::parse_error, source_name, line_no, e.what());
    }
    if (!j.is_object()) fail_at(Errc::parse_error, source_name, line_no, "expected an object");

    if (!have_header) {
      if (j.value("format", std::string{}) != "seed-embeddings") {
        fail_at(Errc::parse_error, source_name, line_no,
                "header must declare \"format\":\"seed-embeddings\"");
      }
      const auto version = j.find("version");
      if (version == j.end() || !version->is_number_integer() || version->get<long>() != 1) {
        fail_at(Errc::parse_error, source_name, line_no, "unsupported version");
      }
      const auto d = j.find("dim");
      if (d == j.end() || !d->is_number_integer() || d->get<long long>() < 1) {
        fail_at(Errc::parse_error, source_name, line_no, "'dim' must be a positive integer");
      }
      dim = d->get<std::size_t>();
      const auto ls = j.find("labels");
      if (ls == j.end() || !ls->is_array() || ls->empty()) {
        fail_at(Errc::parse_error, source_name, line_no, "'labels' must be a non-empty array");
      }
      for (const auto& l : *ls) {
        if (!l.is_string()) fail_at(Errc::parse_error, source_name, line_no, "label not a string");
        labels.push_back(l.get<std::string>());
      }
      std::set<Label> unique(labels.begin(), labels.end());
      if (unique.size() != labels.size()) {
        fail_at(Errc::parse_error, source_name, line_no, "duplicate entry in 'labels'");
      }
      have_header = true;
      continue;
    }

    auto id = read_string(j, "id", source_name, line_no);
    auto label = read_string(j, "label", source_name, line_no);
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      fail_at(Errc::unknown_label, source_name, line_no,
              "label '" + label + "' is not declared in the header");
    }
    if (!ids.insert(id).second) {
      fail_at(Errc::duplicate_id, source_name, line_no, "id '" + id + "' appears twice");
    }
    auto claim = read_vector(j, "claim", dim, source_name, line_no);
    auto evidence = read_vector(j, "evidence", dim, source_name, line_no);
    pairs.push_back({std::move(id), std::move(label), EmbeddingVector(std::move(claim)),
                     EmbeddingVector(std::move(evidence))});
  }
  if (!have_header) throw Error(Errc::parse_error, std::string(source_name) + ": missing header");
  return EmbeddedDataset(dim, std::move(labels), std::move(pairs));
}

EmbeddedDataset load_embedded_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_embedded_dataset(in, path.string());
}

void write_embedded_dataset(const EmbeddedDataset& dataset, std::ostream& out) {
  json header = {{"format", "seed-embeddings"},
                 {"version", 1},
                 {"dim", dataset.dim()},
                 {"labels", dataset.labels()}};
  out << header.dump() << '\n';
  for (const auto& p : dataset.pairs()) {
    json rec = {{"id", p.id},
                {"label", p.label},
                {"claim", std::vector<double>(p.claim.values().begin(), p.claim.values().end())},
                {"evidence",
                 std::vector<double>(p.evidence.values().begin(), p.evidence.values().end())}};
    out << rec.dump() << '\n';
  }
}

void save_embedded_dataset(const EmbeddedDataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  write_embedded_dataset(dataset, out);
  out.flush();
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

EmbeddedDataset make_binary_fever(const EmbeddedDataset& dataset, std::uint64_t seed,
                                  std::size_t cap) {
  const Label support(kSupport), contradict(kContradict), neutral(kNeutral);
  for (const auto& l : {support, contradict, neutral}) {
    if (!std::binary_search(dataset.labels().begin(), dataset.labels().end(), l)) {
      throw Error(Errc::missing_class, "binary FEVER needs class '" + l + "'");
    }
  }
  const std::size_t want_contradict = (cap + 1) / 2;
  const std::size_t want_neutral = cap / 2;

  auto support_idx = dataset.indices_of(support);
  auto contradict_idx = dataset.indices_of(contradict);
  auto neutral_idx = dataset.indices_of(neutral);
  if (contradict_idx.size() < want_contradict || neutral_idx.size() < want_neutral) {
    throw Error(Errc::insufficient_class_size,
                "need " + std::to_string(want_contradict) + " Contradict and " +
                    std::to_string(want_neutral) + " Neutral pairs, have " +
                    std::to_string(contradict_idx.size()) + " and " +
                    std::to_string(neutral_idx.size()));
  }

  Pcg32 rng(seed);
  if (support_idx.size() > cap) {
    support_idx = detail::partial_shuffle(std::move(support_idx), cap, rng);
  }
  contradict_idx = detail::partial_shuffle(std::move(contradict_idx), want_contradict, rng);
  neutral_idx = detail::partial_shuffle(std::move(neutral_idx), want_neutral, rng);

  std::vector<bool> keep(dataset.size(), false);
  std::vector<bool> relabel(dataset.size(), false);
  for (auto i : support_idx) keep[i] = true;
  for (auto i : contradict_idx) keep[i] = relabel[i] = true;
  for (auto i : neutral_idx) keep[i] = relabel[i] = true;

  std::vector<EmbeddedPair> pairs;
  pairs.reserve(support_idx.size() + cap);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (!keep[i]) continue;
    auto p = dataset.pairs()[i];
    if (relabel[i]) p.label = Label(kNotSupport);
    pairs.push_back(std::move(p));
  }
  return EmbeddedDataset(dataset.dim(), {Label(kNotSupport), support}, std::move(pairs));
}

}  // namespace seed
