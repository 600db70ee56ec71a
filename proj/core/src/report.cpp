#include "seed/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <tuple>

#include "seed/error.hpp"

namespace seed {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string round_trip(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

}  // namespace

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::vector<ResultRow> to_rows(const ExperimentResults& results) {
  std::vector<ResultRow> rows;
  for (const auto& [n, agg] : results.by_shots) {
    rows.push_back({results.dataset, results.setting, n, "accuracy", "", agg.mean.accuracy,
                    agg.std.accuracy});
    for (const auto& [label, mean] : agg.mean.f1_per_class) {
      rows.push_back(
          {results.dataset, results.setting, n, "f1", label, mean, agg.std.f1_per_class.at(label)});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.n_shots, a.metric, a.label) < std::tie(b.n_shots, b.metric, b.label);
  });
  return rows;
}

void write_results_csv(const ExperimentResults& results, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const auto& r : to_rows(results)) {
    out << csv_field(r.dataset) << ',' << csv_field(r.setting) << ',' << r.n_shots << ','
        << r.metric << ',' << csv_field(r.label) << ',' << fixed6(r.mean) << ',' << fixed6(r.std)
        << '\n';
  }
}

void emit_report(const ExperimentResults& results, const std::filesystem::path& path) {
  if (results.by_shots.empty()) throw Error(Errc::invalid_config, "no results to report");
  auto out = open_for_write(path);
  write_results_csv(results, out);
  finish(out, path);
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw Error(Errc::parse_error, path.string() + ": line 1: unexpected header");
  }
  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) {
      throw Error(Errc::parse_error,
                  path.string() + ": line " + std::to_string(line_no) + ": expected 7 fields");
    }
    try {
      rows.push_back({f[0], f[1], std::stoul(f[2]), f[3], f[4], std::stod(f[5]), std::stod(f[6])});
    } catch (const std::logic_error&) {
      throw Error(Errc::parse_error,
                  path.string() + ": line " + std::to_string(line_no) + ": bad number");
    }
  }
  return rows;
}

void write_convergence_csv(const std::vector<ConvergencePoint>& curve, std::ostream& out) {
  out << kConvergenceHeader << '\n';
  for (const auto& point : curve) {
    for (const auto& [label, d] : point.distance) {
      out << point.n << ',' << csv_field(label) << ',' << round_trip(d) << '\n';
    }
    out << point.n << ',' << kConvergenceMeanLabel << ',' << round_trip(point.mean_distance)
        << '\n';
  }
}

void emit_convergence(const std::vector<ConvergencePoint>& curve,
                      const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_convergence_csv(curve, out);
  finish(out, path);
}

}  // namespace seed
