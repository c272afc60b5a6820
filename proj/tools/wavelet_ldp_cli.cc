// Copyright 2026 The Wavelet LDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: estimate, bench, jsweep, gen-data and bound.
//
// Exit codes: 0 success, 1 invalid input, 2 I/O failure, 3 internal error.

#include <charconv>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wavelet_ldp/bench.h"
#include "wavelet_ldp/datagen.h"
#include "wavelet_ldp/estimator.h"

namespace wavelet_ldp {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
      return kExitInvalid;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kPermissionDenied:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

int Report(const absl::Status& status) {
  if (!status.ok()) std::cerr << "error: " << status.message() << "\n";
  return ExitCode(status);
}

absl::Status Output(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return absl::OkStatus();
  }
  return WriteFile(path, contents);
}

struct EstimateArgs {
  std::string path;
  double epsilon = 0.0;
  std::optional<int> j;
  uint64_t seed = 0;
  bool no_postprocess = false;
  int threads = 1;
};

absl::Status RunEstimate(const EstimateArgs& args) {
  absl::StatusOr<PrivacyBudget> budget = PrivacyBudget::Create(args.epsilon);
  if (!budget.ok()) return budget.status();
  IngestOptions bounds;
  bounds.min = 0.0;
  bounds.max = 1.0;
  bounds.reject_outside = true;
  absl::StatusOr<Dataset> data = Ingest(args.path, bounds);
  if (!data.ok()) return data.status();
  EstimatorConfig config{*budget};
  config.max_level = args.j;
  config.seed = args.seed;
  config.postprocess = !args.no_postprocess;
  config.threads = args.threads;
  absl::StatusOr<PiecewisePdf> pdf = Estimate(data->values, config);
  if (!pdf.ok()) return pdf.status();
  std::string out;
  char buffer[64];
  for (double h : pdf->heights()) {
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), h);
    out.append(buffer, end);
    out += '\n';
  }
  std::cout << out;
  return absl::OkStatus();
}

struct BenchArgs {
  std::string config;
  std::string out;
  std::string long_out;
  std::optional<int> threads;
};

absl::StatusOr<ExperimentSpec> LoadSpec(const BenchArgs& args) {
  absl::StatusOr<ExperimentSpec> spec = LoadExperimentSpec(args.config);
  if (spec.ok() && args.threads) spec->threads = *args.threads;
  return spec;
}

absl::Status RunBench(const BenchArgs& args) {
  absl::StatusOr<ExperimentSpec> spec = LoadSpec(args);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<std::vector<ResultRow>> rows = Run(*spec);
  if (!rows.ok()) return rows.status();
  if (!args.long_out.empty()) {
    absl::Status status = WriteFile(args.long_out, FormatLongCsv(*rows));
    if (!status.ok()) return status;
  }
  return Output(args.out, FormatCsv(*rows));
}

absl::Status RunJSweep(const BenchArgs& args) {
  absl::StatusOr<ExperimentSpec> spec = LoadSpec(args);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<std::vector<JSweepRow>> rows = JSweep(*spec);
  if (!rows.ok()) return rows.status();
  return Output(args.out, FormatJSweepCsv(*rows));
}

struct GenArgs {
  std::string kind;
  int64_t n = 0;
  double h = 1.0 / 16;
  int a = 5;
  int b = 2;
  uint64_t seed = 0;
  std::string out;
};

absl::Status RunGenData(const GenArgs& args) {
  DatasetSpec spec;
  spec.kind = args.kind == "beta" ? DatasetSpec::Kind::kBeta
                                  : DatasetSpec::Kind::kSquareWave;
  spec.n = args.n;
  spec.h = args.h;
  spec.beta_a = args.a;
  spec.beta_b = args.b;
  spec.seed = args.seed;
  absl::StatusOr<Dataset> data = LoadDataset(spec);
  if (!data.ok()) return data.status();
  return WriteDataset(*data, args.out);
}

struct BoundArgs {
  int64_t n = 0;
  double epsilon = 0.0;
  std::optional<int> j;
};

absl::Status RunBound(const BoundArgs& args) {
  absl::StatusOr<PrivacyBudget> budget = PrivacyBudget::Create(args.epsilon);
  if (!budget.ok()) return budget.status();
  if (args.n < 1) return absl::InvalidArgumentError("--n must be >= 1");
  const int j = args.j.value_or(SelectJ(args.n));
  absl::StatusOr<double> bound = ComputeBound(args.n, j, *budget);
  if (!bound.ok()) return bound.status();
  absl::StatusOr<AllocationPlan> plan = Allocate(args.n, j, *budget);
  if (!plan.ok()) return plan.status();
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), *bound);
  std::cout << "J=" << j << "\nbound=" << std::string_view(buffer, end)
            << "\nallocation=";
  for (size_t i = 0; i < plan->counts.size(); ++i) {
    std::cout << (i ? "," : "") << plan->counts[i];
  }
  std::cout << "\n";
  return absl::OkStatus();
}

int Main(int argc, char** argv) {
  CLI::App app{"Wavelet-expansion distribution estimation under local "
               "differential privacy"};
  app.require_subcommand(1);

  EstimateArgs estimate;
  CLI::App* estimate_cmd = app.add_subcommand(
      "estimate", "Estimate a pdf from values in [0, 1], one per line; "
                  "prints 2^(J+1) bin heights");
  estimate_cmd->add_option("file", estimate.path, "Input file")->required();
  estimate_cmd->add_option("--epsilon", estimate.epsilon, "Privacy budget")
      ->required();
  estimate_cmd->add_option("--J", estimate.j, "Finest level (default auto)");
  estimate_cmd->add_option("--seed", estimate.seed, "Random seed");
  estimate_cmd->add_flag("--no-postprocess", estimate.no_postprocess,
                         "Skip clipping to a valid pdf");
  estimate_cmd->add_option("--threads", estimate.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run a comparison experiment");
  BenchArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("jsweep", "Sweep J against the theoretical bound");
  for (auto [cmd, args] : {std::pair{bench_cmd, &bench}, {sweep_cmd, &sweep}}) {
    cmd->add_option("--config", args->config, "Experiment config file")
        ->required();
    cmd->add_option("--out", args->out, "CSV output path (default stdout)");
    cmd->add_option("--threads", args->threads, "Override config threads")
        ->check(CLI::PositiveNumber);
  }
  bench_cmd->add_option("--long-out", bench.long_out,
                        "Per-trial CSV for plotting");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen-data", "Write synthetic data");
  // --h is the strip width, so help is long-form only here.
  gen_cmd->set_help_flag("--help", "Print this help message and exit");
  gen_cmd->add_option("kind", gen.kind, "beta or squarewave")
      ->required()
      ->check(CLI::IsMember({"beta", "squarewave"}));
  gen_cmd->add_option("--n", gen.n, "Sample count")->required();
  gen_cmd->add_option("--h", gen.h, "Square-wave strip width");
  gen_cmd->add_option("--a", gen.a, "Beta shape a");
  gen_cmd->add_option("--b", gen.b, "Beta shape b");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  BoundArgs bound;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "Print the Wasserstein error bound");
  bound_cmd->add_option("--n", bound.n, "Sample count")->required();
  bound_cmd->add_option("--epsilon", bound.epsilon, "Privacy budget")
      ->required();
  bound_cmd->add_option("--J", bound.j, "Finest level (default auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (estimate_cmd->parsed()) return Report(RunEstimate(estimate));
  if (bench_cmd->parsed()) return Report(RunBench(bench));
  if (sweep_cmd->parsed()) return Report(RunJSweep(sweep));
  if (gen_cmd->parsed()) return Report(RunGenData(gen));
  if (bound_cmd->parsed()) return Report(RunBound(bound));
  return kExitInternal;
}

}  // namespace
}  // namespace wavelet_ldp

int main(int argc, char** argv) {
  try {
    return wavelet_ldp::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return wavelet_ldp::kExitInternal;
  }
}
