#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seed/classifier.hpp"
#include "seed/dataset.hpp"
#include "seed/error.hpp"
#include "seed/harness.hpp"
#include "seed/model_io.hpp"
#include "seed/report.hpp"

namespace seed::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 123;

struct FitArgs {
  std::string data, out;
  std::optional<std::size_t> shots;
  std::uint64_t seed = kDefaultSeed;
};

struct PredictArgs {
  std::string model, data, out;
};

struct ExperimentArgs {
  std::string data, out;
  std::vector<std::size_t> shots = kDefaultShotCounts;
  std::vector<std::uint64_t> seeds = kDefaultSeeds;
  std::optional<std::uint64_t> binary_seed;
};

struct BinarizeArgs {
  std::string data, out;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> cap;
};

struct ConvergenceArgs {
  std::string data, out;
  std::size_t max_n = 100;
  std::uint64_t seed = kDefaultSeed;
};

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

std::string round_trip(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Not_Support is sized to match Support, capped at the usual 3333.
std::size_t default_binary_cap(const EmbeddedDataset& dataset) {
  return std::min(kBinaryFeverCap, dataset.indices_of(Label(kSupport)).size());
}

std::string setting_name(std::size_t n_labels, bool binarized) {
  if (binarized || n_labels == 2) return "binary";
  if (n_labels == 3) return "three-way";
  return std::to_string(n_labels) + "-way";
}

int cmd_fit(const FitArgs& args, std::ostream& out) {
  const auto dataset = load_embedded_dataset(args.data);
  const auto model = args.shots ? fit(sample_shots(dataset, *args.shots, args.seed).train.pairs())
                                : fit(dataset.pairs());
  save_model(model, args.out);
  for (const auto& rep : model.representatives()) {
    out << rep.label() << '\t' << rep.count() << '\n';
  }
  return 0;
}

int cmd_predict(const PredictArgs& args) {
  const auto model = load_model(args.model);
  const auto dataset = load_embedded_dataset(args.data);
  const auto predictions = predict_batch(model, dataset.pairs());

  std::ofstream csv(args.out, std::ios::binary);
  if (!csv) throw Error(Errc::io_error, "cannot write " + args.out);
  csv << "id,gold,pred";
  for (const auto& rep : model.representatives()) csv << ',' << csv_field(rep.label());
  csv << '\n';
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto& pair = dataset.pairs()[i];
    csv << csv_field(pair.id) << ',' << csv_field(pair.label) << ','
        << csv_field(predictions[i].label);
    for (const auto& [label, d] : predictions[i].distances) csv << ',' << round_trip(d);
    csv << '\n';
  }
  csv.flush();
  if (!csv) throw Error(Errc::io_error, "write failed for " + args.out);
  return 0;
}

int cmd_experiment(const ExperimentArgs& args) {
  auto dataset = load_embedded_dataset(args.data);
  if (args.binary_seed) {
    dataset = make_binary_fever(dataset, *args.binary_seed, default_binary_cap(dataset));
  }

  ExperimentConfig config;
  config.shot_counts = args.shots;
  config.seeds = args.seeds;
  config.dataset_path = args.data;
  config.output_path = args.out;

  ExperimentResults results;
  results.dataset = std::filesystem::path(args.data).stem().string();
  results.setting = setting_name(dataset.labels().size(), args.binary_seed.has_value());
  results.by_shots = run_nshot_experiment(config, dataset);
  emit_report(results, config.output_path);
  return 0;
}

int cmd_binarize(const BinarizeArgs& args) {
  const auto dataset = load_embedded_dataset(args.data);
  const std::size_t cap = args.cap.value_or(default_binary_cap(dataset));
  save_embedded_dataset(make_binary_fever(dataset, args.seed, cap), args.out);
  return 0;
}

int cmd_convergence(const ConvergenceArgs& args) {
  const auto dataset = load_embedded_dataset(args.data);
  emit_convergence(convergence_curve(dataset, args.max_n, args.seed), args.out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Few-shot claim veracity classification from sentence-embedding differences"};
  app.require_subcommand(1);

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Fit class representatives and write a model JSON");
  fit_cmd->add_option("--data", fit_args.data, "Embedding dataset (JSON Lines)")->required();
  fit_cmd->add_option("--out", fit_args.out, "Model output path")->required();
  fit_cmd->add_option("--shots", fit_args.shots, "Fit on n sampled pairs per class only");
  fit_cmd->add_option("--seed", fit_args.seed, "Sampling seed used with --shots")
      ->capture_default_str();

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "Label pairs with a fitted model");
  predict_cmd->add_option("--model", predict_args.model, "Model JSON")->required();
  predict_cmd->add_option("--data", predict_args.data, "Embedding dataset (JSON Lines)")
      ->required();
  predict_cmd->add_option("--out", predict_args.out, "Predictions CSV")->required();

  ExperimentArgs exp_args;
  auto* exp_cmd =
      app.add_subcommand("experiment", "Run the n-shot sweep over shot counts and seeds");
  exp_cmd->add_option("--data", exp_args.data, "Embedding dataset (JSON Lines)")->required();
  exp_cmd->add_option("--shots", exp_args.shots, "Comma-separated shot counts per class")
      ->delimiter(',')
      ->default_str(join(kDefaultShotCounts));
  exp_cmd->add_option("--seeds", exp_args.seeds, "Comma-separated sampling seeds")
      ->delimiter(',')
      ->default_str(join(kDefaultSeeds));
  exp_cmd->add_option("--out", exp_args.out, "Results CSV")->required();
  exp_cmd->add_option("--binary-seed", exp_args.binary_seed,
                      "Collapse Contradict+Neutral into Not_Support with this seed first");

  BinarizeArgs bin_args;
  auto* bin_cmd =
      app.add_subcommand("binarize", "Write the Support / Not_Support variant of a dataset");
  bin_cmd->add_option("--data", bin_args.data, "Three-way embedding dataset")->required();
  bin_cmd->add_option("--out", bin_args.out, "Binary dataset output path")->required();
  bin_cmd->add_option("--seed", bin_args.seed, "Sampling seed")->capture_default_str();
  bin_cmd->add_option("--cap", bin_args.cap,
                      "Pairs per binary class (default: min(3333, Support count))");

  ConvergenceArgs conv_args;
  auto* conv_cmd = app.add_subcommand(
      "convergence", "Distance between consecutive n-shot representatives, n = 2..max-n");
  conv_cmd->add_option("--data", conv_args.data, "Embedding dataset (JSON Lines)")->required();
  conv_cmd->add_option("--max-n", conv_args.max_n, "Largest shot count")->capture_default_str();
  conv_cmd->add_option("--seed", conv_args.seed, "Sample-order seed")->capture_default_str();
  conv_cmd->add_option("--out", conv_args.out, "Convergence CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*fit_cmd) return cmd_fit(fit_args, out);
    if (*predict_cmd) return cmd_predict(predict_args);
    if (*exp_cmd) return cmd_experiment(exp_args);
    if (*bin_cmd) return cmd_binarize(bin_args);
    if (*conv_cmd) return cmd_convergence(conv_args);
  } catch (const Error& e) {
    err << "seed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "seed: unexpected failure: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace seed::cli
