#include "seed/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "seed/error.hpp"

namespace seed {

using nlohmann::json;

std::string model_to_json(const ClassifierModel& model) {
  json classes = json::array();
  for (const auto& rep : model.representatives()) {
    classes.push_back({{"label", rep.label()},
                       {"count", rep.count()},
                       {"mean", std::vector<double>(rep.mean().begin(), rep.mean().end())}});
  }
  json doc = {{"dim", model.dim()}, {"classes", std::move(classes)}};
  return doc.dump(2) + "\n";
}

ClassifierModel model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  try {
    const auto dim = doc.at("dim").get<std::size_t>();
    std::vector<ClassRepresentative> reps;
    for (const auto& c : doc.at("classes")) {
      auto mean = c.at("mean").get<std::vector<double>>();
      if (mean.size() != dim) {
        throw Error(Errc::dimension_mismatch, "class '" + c.at("label").get<std::string>() +
                                                  "' mean has " + std::to_string(mean.size()) +
                                                  " components, expected " + std::to_string(dim));
      }
      const auto count = c.at("count").get<long long>();
      if (count < 1) throw Error(Errc::invariant_violation, "class count must be >= 1");
      reps.emplace_back(c.at("label").get<std::string>(), std::move(mean),
                        static_cast<std::size_t>(count));
    }
    return ClassifierModel(std::move(reps));
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

void save_model(const ClassifierModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out << model_to_json(model);
  out.flush();
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

ClassifierModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace seed
