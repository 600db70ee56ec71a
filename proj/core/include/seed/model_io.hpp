#pragma once

#include <filesystem>
#include <string>

#include "seed/classifier.hpp"

namespace seed {

// {"dim": D, "classes": [{"label": str, "count": n, "mean": [...]}, ...]}
// Classes appear in label order; doubles keep round-trip precision.
std::string model_to_json(const ClassifierModel& model);
ClassifierModel model_from_json(const std::string& text);

void save_model(const ClassifierModel& model, const std::filesystem::path& path);
ClassifierModel load_model(const std::filesystem::path& path);

}  // namespace seed
