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

#include "wavelet_ldp/bench.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "wavelet_ldp/baselines.h"
#include "wavelet_ldp/estimator.h"
#include "wavelet_ldp/metrics.h"
#include "wavelet_ldp/status_macros.h"

namespace wavelet_ldp {
namespace {

absl::string_view Sv(std::string_view s) { return {s.data(), s.size()}; }

std::string FormatDouble(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

absl::StatusOr<double> ParseDouble(std::string_view key,
                                   std::string_view text) {
  double value = 0.0;
  if (!absl::SimpleAtod(absl::string_view(text.data(), text.size()), &value)) {
    return absl::InvalidArgumentError(
        absl::StrCat(Sv(key), ": '", Sv(text), "' is not a number"));
  }
  return value;
}

template <typename Int>
absl::StatusOr<Int> ParseInt(std::string_view key, std::string_view text) {
  Int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(Sv(key), ": '", Sv(text), "' is not an integer"));
  }
  return value;
}

absl::StatusOr<bool> ParseBool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  return absl::InvalidArgumentError(
      absl::StrCat(Sv(key), ": '", Sv(text), "' is not a boolean"));
}

absl::StatusOr<std::string_view> Single(const CLI::ConfigItem& item) {
  if (item.inputs.size() != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat(item.name, " expects a single value"));
  }
  return std::string_view(item.inputs[0]);
}

absl::Status ParseJ(std::string_view text, ExperimentSpec& spec) {
  if (text == "auto") {
    spec.fixed_j.reset();
    return absl::OkStatus();
  }
  const size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    ASSIGN_OR_RETURN(spec.fixed_j, ParseInt<int>("j", text));
    return absl::OkStatus();
  }
  ASSIGN_OR_RETURN(spec.sweep_min_j, ParseInt<int>("j", text.substr(0, dots)));
  ASSIGN_OR_RETURN(spec.sweep_max_j, ParseInt<int>("j", text.substr(dots + 2)));
  spec.fixed_j.reset();
  return absl::OkStatus();
}

absl::Status ApplyItem(const CLI::ConfigItem& item, ExperimentSpec& spec) {
  const std::string& key = item.name;
  DatasetSpec& data = spec.dataset;
  if (key == "methods") {
    spec.methods.clear();
    for (const std::string& name : item.inputs) {
      ASSIGN_OR_RETURN(MethodSpec method, MethodSpec::Parse(name));
      spec.methods.push_back(method);
    }
    return absl::OkStatus();
  }
  if (key == "metrics") {
    spec.metrics.clear();
    for (const std::string& name : item.inputs) {
      ASSIGN_OR_RETURN(MetricSpec metric, MetricSpec::Parse(name));
      spec.metrics.push_back(metric);
    }
    return absl::OkStatus();
  }
  if (key == "epsilons") {
    spec.epsilons.clear();
    for (const std::string& text : item.inputs) {
      ASSIGN_OR_RETURN(double eps, ParseDouble(key, text));
      spec.epsilons.push_back(eps);
    }
    return absl::OkStatus();
  }
  ASSIGN_OR_RETURN(const std::string_view value, Single(item));
  if (key == "dataset") {
    if (value == "beta") {
      data.kind = DatasetSpec::Kind::kBeta;
    } else if (value == "squarewave") {
      data.kind = DatasetSpec::Kind::kSquareWave;
    } else if (value == "file") {
      data.kind = DatasetSpec::Kind::kFile;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("dataset: unknown kind '", Sv(value), "'"));
    }
  } else if (key == "n") {
    ASSIGN_OR_RETURN(data.n, ParseInt<int64_t>(key, value));
  } else if (key == "beta_a") {
    ASSIGN_OR_RETURN(data.beta_a, ParseInt<int>(key, value));
  } else if (key == "beta_b") {
    ASSIGN_OR_RETURN(data.beta_b, ParseInt<int>(key, value));
  } else if (key == "h") {
    ASSIGN_OR_RETURN(data.h, ParseDouble(key, value));
  } else if (key == "path") {
    data.path = std::string(value);
  } else if (key == "min") {
    ASSIGN_OR_RETURN(data.ingest.min, ParseDouble(key, value));
  } else if (key == "max") {
    ASSIGN_OR_RETURN(data.ingest.max, ParseDouble(key, value));
  } else if (key == "below") {
    ASSIGN_OR_RETURN(data.ingest.below, ParseDouble(key, value));
  } else if (key == "data_seed") {
    ASSIGN_OR_RETURN(data.seed, ParseInt<uint64_t>(key, value));
  } else if (key == "repetitions") {
    ASSIGN_OR_RETURN(spec.repetitions, ParseInt<int>(key, value));
  } else if (key == "seed") {
    ASSIGN_OR_RETURN(spec.seed, ParseInt<uint64_t>(key, value));
  } else if (key == "grid") {
    ASSIGN_OR_RETURN(spec.grid_size, ParseInt<int>(key, value));
  } else if (key == "j") {
    RETURN_IF_ERROR(ParseJ(value, spec));
  } else if (key == "range_trials") {
    ASSIGN_OR_RETURN(spec.range_trials, ParseInt<int>(key, value));
  } else if (key == "threads") {
    ASSIGN_OR_RETURN(spec.threads, ParseInt<int>(key, value));
  } else if (key == "timing") {
    ASSIGN_OR_RETURN(spec.timing, ParseBool(key, value));
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown key '", key, "'"));
  }
  return absl::OkStatus();
}

// Runs fn(0..count) on up to `threads` workers. Returns the error of the
// lowest failing index, so the outcome does not depend on scheduling.
absl::Status ParallelFor(size_t count, int threads,
                         const std::function<absl::Status(size_t)>& fn) {
  std::vector<absl::Status> status(count);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) status[i] = fn(i);
  };
  const int workers = static_cast<int>(
      std::clamp<size_t>(static_cast<size_t>(std::max(threads, 1)), 1,
                         std::max<size_t>(count, 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  for (absl::Status& s : status) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

std::pair<double, double> MeanAndSd(const std::vector<double>& values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / static_cast<double>(values.size() - 1))};
}

struct Truth {
  std::string name;
  int64_t n = 0;
  std::vector<double> values;
  EmpiricalCdf empirical;
  StepCdf knots;
};

absl::StatusOr<Truth> LoadTruth(const ExperimentSpec& spec) {
  ASSIGN_OR_RETURN(Dataset data, LoadDataset(spec.dataset));
  ASSIGN_OR_RETURN(EmpiricalCdf empirical, EmpiricalCdf::Create(data.values));
  StepCdf knots = empirical.Knots(spec.grid_size);
  const auto n = static_cast<int64_t>(data.values.size());
  return Truth{DatasetName(spec.dataset), n, std::move(data.values),
               std::move(empirical), std::move(knots)};
}

absl::StatusOr<StepCdf> EstimateCdf(const Truth& truth,
                                    const MethodSpec& method,
                                    PrivacyBudget epsilon, uint64_t seed,
                                    std::optional<int> max_level,
                                    int grid_size) {
  if (method.kind == MethodSpec::Kind::kWavelet) {
    EstimatorConfig config{epsilon};
    config.max_level = max_level;
    config.seed = seed;
    ASSIGN_OR_RETURN(const PiecewisePdf pdf, Estimate(truth.values, config));
    return CdfOf(pdf, grid_size);
  }
  Rng rng = MakeStream(seed, {0});
  ASSIGN_OR_RETURN(const FrequencyVector freq,
                   EstimateBinned(truth.values, method.bins, epsilon, rng));
  return BinnedCdf(freq, grid_size);
}

absl::StatusOr<double> Evaluate(const MetricSpec& metric, const StepCdf& est,
                                const Truth& truth, uint64_t seed,
                                int range_trials) {
  switch (metric.kind) {
    case MetricSpec::Kind::kWasserstein:
      return Wasserstein(est, truth.knots);
    case MetricSpec::Kind::kKs:
      return Ks(est, truth.knots);
    case MetricSpec::Kind::kRangeQueryMae:
    case MetricSpec::Kind::kRangeQueryMax: {
      Rng rng = MakeStream(seed, {1});
      ASSIGN_OR_RETURN(const RangeQueryError error,
                       RangeQuery(est, truth.empirical, metric.alpha,
                                  range_trials, rng));
      return metric.kind == MetricSpec::Kind::kRangeQueryMae ? error.mean
                                                              : error.max;
    }
  }
  return absl::InternalError("unhandled metric");
}

}  // namespace

std::string MethodSpec::Name() const {
  return kind == Kind::kWavelet ? "wavelet" : absl::StrCat("binning-", bins);
}

absl::StatusOr<MethodSpec> MethodSpec::Parse(std::string_view name) {
  if (name == "wavelet") return MethodSpec{};
  if (absl::StartsWith(absl::string_view(name.data(), name.size()),
                       "binning-")) {
    ASSIGN_OR_RETURN(const int64_t bins,
                     ParseInt<int64_t>("methods", name.substr(8)));
    if (bins < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("methods: '", Sv(name), "' needs at least 2 bins"));
    }
    return MethodSpec{Kind::kBinning, bins};
  }
  return absl::InvalidArgumentError(
      absl::StrCat("methods: unknown method '", Sv(name), "'"));
}

std::string MetricSpec::Name() const {
  switch (kind) {
    case Kind::kWasserstein:
      return "wasserstein";
    case Kind::kKs:
      return "ks";
    case Kind::kRangeQueryMae:
      return absl::StrCat("rq-mae(", FormatDouble(alpha), ")");
    case Kind::kRangeQueryMax:
      return absl::StrCat("rq-max(", FormatDouble(alpha), ")");
  }
  return "";
}

absl::StatusOr<MetricSpec> MetricSpec::Parse(std::string_view name) {
  if (name == "wasserstein") return MetricSpec{Kind::kWasserstein};
  if (name == "ks") return MetricSpec{Kind::kKs};
  for (const auto& [prefix, kind] :
       {std::pair{std::string_view("rq-mae("), Kind::kRangeQueryMae},
        std::pair{std::string_view("rq-max("), Kind::kRangeQueryMax}}) {
    if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix &&
        name.back() == ')') {
      const std::string_view inner =
          name.substr(prefix.size(), name.size() - prefix.size() - 1);
      ASSIGN_OR_RETURN(const double alpha, ParseDouble("metrics", inner));
      if (!(alpha > 0.0 && alpha < 1.0)) {
        return absl::InvalidArgumentError(
            absl::StrCat("metrics: alpha in '", Sv(name), "' outside (0, 1)"));
      }
      return MetricSpec{kind, alpha};
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("metrics: unknown metric '", Sv(name), "'"));
}

absl::Status ExperimentSpec::Validate() const {
  if (repetitions < 1) {
    return absl::InvalidArgumentError("repetitions must be >= 1");
  }
  if (epsilons.empty()) return absl::InvalidArgumentError("no epsilons");
  for (double eps : epsilons) RETURN_IF_ERROR(PrivacyBudget::Create(eps).status());
  if (methods.empty()) return absl::InvalidArgumentError("no methods");
  if (metrics.empty()) return absl::InvalidArgumentError("no metrics");
  if (grid_size < 1) return absl::InvalidArgumentError("grid must be >= 1");
  if (range_trials < 1) {
    return absl::InvalidArgumentError("range_trials must be >= 1");
  }
  if (threads < 1) return absl::InvalidArgumentError("threads must be >= 1");
  if (dataset.n < 1) return absl::InvalidArgumentError("n must be >= 1");
  const auto bad_level = [](int j) { return j < 0 || j > kMaxLevel; };
  if (fixed_j && bad_level(*fixed_j)) {
    return absl::InvalidArgumentError(
        absl::StrCat("j = ", *fixed_j, " outside [0, ", kMaxLevel, "]"));
  }
  if (bad_level(sweep_min_j) || bad_level(sweep_max_j) ||
      sweep_min_j > sweep_max_j) {
    return absl::InvalidArgumentError(absl::StrCat(
        "j range ", sweep_min_j, "..", sweep_max_j, " invalid"));
  }
  if (dataset.kind == DatasetSpec::Kind::kFile && dataset.path.empty()) {
    return absl::InvalidArgumentError("dataset = file needs a path");
  }
  return absl::OkStatus();
}

absl::StatusOr<ExperimentSpec> ParseExperimentSpec(std::istream& in) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    return absl::InvalidArgumentError(absl::StrCat("config: ", e.what()));
  }
  ExperimentSpec spec;
  for (const CLI::ConfigItem& item : items) {
    if (!item.parents.empty() && item.parents != std::vector<std::string>{"default"}) {
      return absl::InvalidArgumentError(absl::StrCat(
          "config: sections are not supported ('", item.parents[0], "')"));
    }
    if (item.name == "++" || item.name == "--") continue;
    RETURN_IF_ERROR(ApplyItem(item, spec));
  }
  RETURN_IF_ERROR(spec.Validate());
  return spec;
}

absl::StatusOr<ExperimentSpec> LoadExperimentSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  absl::StatusOr<ExperimentSpec> spec = ParseExperimentSpec(in);
  if (!spec.ok()) {
    return absl::Status(spec.status().code(),
                        absl::StrCat(path, ": ", spec.status().message()));
  }
  return spec;
}

uint64_t TrialSeed(uint64_t master, std::string_view method, double epsilon,
                   int trial) {
  const auto eps_bits = std::bit_cast<uint64_t>(epsilon);
  std::vector<uint32_t> words = {static_cast<uint32_t>(master),
                                 static_cast<uint32_t>(master >> 32),
                                 static_cast<uint32_t>(method.size())};
  for (char c : method) words.push_back(static_cast<unsigned char>(c));
  words.push_back(static_cast<uint32_t>(eps_bits));
  words.push_back(static_cast<uint32_t>(eps_bits >> 32));
  words.push_back(static_cast<uint32_t>(trial));
  std::seed_seq seq(words.begin(), words.end());
  uint32_t out[2];
  seq.generate(out, out + 2);
  return (uint64_t{out[1]} << 32) | out[0];
}

std::string DatasetName(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetSpec::Kind::kBeta:
      return absl::StrCat("beta-", spec.beta_a, "-", spec.beta_b, "-n",
                          spec.n);
    case DatasetSpec::Kind::kSquareWave:
      return absl::StrCat("squarewave-", FormatDouble(spec.h), "-n", spec.n);
    case DatasetSpec::Kind::kFile:
      return spec.path;
  }
  return "";
}

absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec) {
  Rng rng = MakeStream(spec.seed, {});
  switch (spec.kind) {
    case DatasetSpec::Kind::kBeta:
      return GenerateBeta(spec.n, spec.beta_a, spec.beta_b, rng);
    case DatasetSpec::Kind::kSquareWave:
      return GenerateSquareWave(spec.n, spec.h, rng);
    case DatasetSpec::Kind::kFile:
      return Ingest(spec.path, spec.ingest);
  }
  return absl::InternalError("unhandled dataset kind");
}

absl::StatusOr<std::vector<ResultRow>> Run(const ExperimentSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  ASSIGN_OR_RETURN(const Truth truth, LoadTruth(spec));

  const size_t num_eps = spec.epsilons.size();
  const size_t reps = static_cast<size_t>(spec.repetitions);
  const size_t num_metrics = spec.metrics.size();
  const size_t tasks = spec.methods.size() * num_eps * reps;
  // values[task * num_metrics + metric]
  std::vector<double> values(tasks * num_metrics);
  std::vector<double> ms(tasks);

  RETURN_IF_ERROR(ParallelFor(tasks, spec.threads, [&](size_t task) {
    const size_t trial = task % reps;
    const size_t e = (task / reps) % num_eps;
    const MethodSpec& method = spec.methods[task / reps / num_eps];
    const double eps = spec.epsilons[e];
    const std::string name = method.Name();
    const uint64_t seed =
        TrialSeed(spec.seed, name, eps, static_cast<int>(trial));
    const auto start = std::chrono::steady_clock::now();
    auto run = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(
          const StepCdf est,
          EstimateCdf(truth, method, *PrivacyBudget::Create(eps), seed,
                      spec.fixed_j, spec.grid_size));
      for (size_t m = 0; m < num_metrics; ++m) {
        ASSIGN_OR_RETURN(values[task * num_metrics + m],
                         Evaluate(spec.metrics[m], est, truth, seed,
                                  spec.range_trials));
      }
      return absl::OkStatus();
    };
    const absl::Status status = run();
    ms[task] = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    if (!status.ok()) {
      return absl::Status(status.code(),
                          absl::StrCat(name, " eps=", FormatDouble(eps),
                                       " trial ", trial, ": ",
                                       status.message()));
    }
    return absl::OkStatus();
  }));

  std::vector<ResultRow> rows;
  for (size_t method = 0; method < spec.methods.size(); ++method) {
    for (size_t e = 0; e < num_eps; ++e) {
      const size_t first = (method * num_eps + e) * reps;
      double total_ms = 0.0;
      for (size_t t = 0; t < reps; ++t) total_ms += ms[first + t];
      for (size_t m = 0; m < num_metrics; ++m) {
        ResultRow row;
        row.dataset = truth.name;
        row.method = spec.methods[method].Name();
        row.epsilon = spec.epsilons[e];
        row.metric = spec.metrics[m].Name();
        for (size_t t = 0; t < reps; ++t) {
          row.values.push_back(values[(first + t) * num_metrics + m]);
        }
        std::tie(row.mean, row.sd) = MeanAndSd(row.values);
        row.repetitions = spec.repetitions;
        row.seed = spec.seed;
        row.ms = spec.timing ? std::round(total_ms) : 0.0;
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return std::tie(a.dataset, a.method, a.epsilon,
                                     a.metric) <
                            std::tie(b.dataset, b.method, b.epsilon, b.metric);
                   });
  return rows;
}

absl::StatusOr<std::vector<JSweepRow>> JSweep(const ExperimentSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  ASSIGN_OR_RETURN(const Truth truth, LoadTruth(spec));
  const size_t levels =
      static_cast<size_t>(spec.sweep_max_j - spec.sweep_min_j + 1);
  const size_t reps = static_cast<size_t>(spec.repetitions);
  const size_t tasks = spec.epsilons.size() * levels * reps;
  std::vector<double> values(tasks);

  const MethodSpec wavelet;
  RETURN_IF_ERROR(ParallelFor(tasks, spec.threads, [&](size_t task) {
    const size_t trial = task % reps;
    const int j = spec.sweep_min_j + static_cast<int>((task / reps) % levels);
    const double eps = spec.epsilons[task / reps / levels];
    const uint64_t seed = TrialSeed(spec.seed, absl::StrCat("wavelet-J", j),
                                    eps, static_cast<int>(trial));
    absl::StatusOr<StepCdf> est =
        EstimateCdf(truth, wavelet, *PrivacyBudget::Create(eps), seed, j,
                    spec.grid_size);
    if (!est.ok()) {
      return absl::Status(est.status().code(),
                          absl::StrCat("J=", j, " eps=", FormatDouble(eps),
                                       " trial ", trial, ": ",
                                       est.status().message()));
    }
    ASSIGN_OR_RETURN(values[task], Wasserstein(*est, truth.knots));
    return absl::OkStatus();
  }));

  std::vector<JSweepRow> rows;
  for (size_t e = 0; e < spec.epsilons.size(); ++e) {
    for (size_t l = 0; l < levels; ++l) {
      const size_t first = (e * levels + l) * reps;
      const std::vector<double> trial_values(values.begin() + first,
                                             values.begin() + first + reps);
      JSweepRow row;
      row.dataset = truth.name;
      row.epsilon = spec.epsilons[e];
      row.j = spec.sweep_min_j + static_cast<int>(l);
      std::tie(row.mean, row.sd) = MeanAndSd(trial_values);
      ASSIGN_OR_RETURN(row.bound,
                       ComputeBound(truth.n, row.j,
                                    *PrivacyBudget::Create(row.epsilon)));
      row.repetitions = spec.repetitions;
      row.seed = spec.seed;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string FormatCsv(const std::vector<ResultRow>& rows) {
  std::string out = "dataset,method,epsilon,metric,mean,sd,reps,seed,ms\n";
  for (const ResultRow& r : rows) {
    absl::StrAppend(&out, CsvField(r.dataset), ",", CsvField(r.method), ",",
                    FormatDouble(r.epsilon), ",", CsvField(r.metric), ",",
                    FormatDouble(r.mean), ",", FormatDouble(r.sd), ",",
                    r.repetitions, ",", r.seed, ",", FormatDouble(r.ms), "\n");
  }
  return out;
}

std::string FormatLongCsv(const std::vector<ResultRow>& rows) {
  std::string out = "dataset,method,epsilon,metric,trial,value\n";
  for (const ResultRow& r : rows) {
    for (size_t t = 0; t < r.values.size(); ++t) {
      absl::StrAppend(&out, CsvField(r.dataset), ",", CsvField(r.method), ",",
                      FormatDouble(r.epsilon), ",", CsvField(r.metric), ",", t,
                      ",", FormatDouble(r.values[t]), "\n");
    }
  }
  return out;
}

std::string FormatJSweepCsv(const std::vector<JSweepRow>& rows) {
  std::string out = "dataset,epsilon,J,empirical,sd,bound,reps,seed\n";
  for (const JSweepRow& r : rows) {
    absl::StrAppend(&out, CsvField(r.dataset), ",", FormatDouble(r.epsilon),
                    ",", r.j, ",", FormatDouble(r.mean), ",",
                    FormatDouble(r.sd), ",", FormatDouble(r.bound), ",",
                    r.repetitions, ",", r.seed, "\n");
  }
  return out;
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

}  // namespace wavelet_ldp
