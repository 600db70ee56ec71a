#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "seed/harness.hpp"
#include "seed/metrics.hpp"

namespace seed {

struct ExperimentResults {
  std::string dataset;
  std::string setting;
  std::map<std::size_t, AggregateMetrics> by_shots;
};

struct ResultRow {
  std::string dataset;
  std::string setting;
  std::size_t n_shots = 0;
  std::string metric;  // "accuracy" or "f1"
  std::string label;   // empty for accuracy
  double mean = 0.0;
  double std = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline constexpr const char* kResultsHeader = "dataset,setting,n_shots,metric,class,mean,std";
inline constexpr const char* kConvergenceHeader = "n,class,distance";
inline constexpr const char* kConvergenceMeanLabel = "__mean__";

/// Rows sorted by (n_shots, metric, class).
std::vector<ResultRow> to_rows(const ExperimentResults& results);

void write_results_csv(const ExperimentResults& results, std::ostream& out);
void emit_report(const ExperimentResults& results, const std::filesystem::path& path);
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

void write_convergence_csv(const std::vector<ConvergencePoint>& curve, std::ostream& out);
void emit_convergence(const std::vector<ConvergencePoint>& curve,
                      const std::filesystem::path& path);

/// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_field(const std::string& value);

}  // namespace seed
