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

// Seeded, repeated experiments comparing the wavelet estimator against binned
// frequency-oracle baselines, plus the J sweep and CSV emission.

#ifndef WAVELET_LDP_BENCH_H_
#define WAVELET_LDP_BENCH_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "wavelet_ldp/datagen.h"

namespace wavelet_ldp {

struct DatasetSpec {
  enum class Kind { kBeta, kSquareWave, kFile };

  Kind kind = Kind::kBeta;
  int64_t n = 100000;
  int beta_a = 5;
  int beta_b = 2;
  double h = 1.0 / 16;
  std::string path;
  IngestOptions ingest;
  uint64_t seed = 1;
};

struct MethodSpec {
  enum class Kind { kWavelet, kBinning };

  Kind kind = Kind::kWavelet;
  // Bin count for kBinning.
  int64_t bins = 0;

  // "wavelet" or "binning-<d>".
  std::string Name() const;
  static absl::StatusOr<MethodSpec> Parse(std::string_view name);
};

struct MetricSpec {
  enum class Kind { kWasserstein, kKs, kRangeQueryMae, kRangeQueryMax };

  Kind kind = Kind::kWasserstein;
  // Interval length for the range-query metrics.
  double alpha = 0.0;

  // "wasserstein", "ks", "rq-mae(<alpha>)" or "rq-max(<alpha>)".
  std::string Name() const;
  static absl::StatusOr<MetricSpec> Parse(std::string_view name);
};

struct ExperimentSpec {
  DatasetSpec dataset;
  std::vector<MethodSpec> methods = {MethodSpec{}};
  std::vector<double> epsilons;
  int repetitions = 100;
  std::vector<MetricSpec> metrics = {MetricSpec{}};
  uint64_t seed = 0;
  int grid_size = 256;
  // Wavelet level: unset means SelectJ(n). The sweep range is used by JSweep.
  std::optional<int> fixed_j;
  int sweep_min_j = 1;
  int sweep_max_j = 10;
  // Random intervals per trial for the range-query metrics.
  int range_trials = 1000;
  int threads = 1;
  // When false the ms column is written as 0, making the CSV a pure function
  // of the spec.
  bool timing = true;

  absl::Status Validate() const;
};

// Flat TOML/INI key-value text, one field per key. Example:
//
//   dataset = "beta"
//   n = 100000
//   methods = ["wavelet", "binning-8"]
//   epsilons = [0.5, 1, 2]
//   metrics = ["wasserstein", "rq-mae(0.2)"]
//   j = "auto"        # or 6, or "1..10"
absl::StatusOr<ExperimentSpec> ParseExperimentSpec(std::istream& in);
absl::StatusOr<ExperimentSpec> LoadExperimentSpec(const std::string& path);

struct ResultRow {
  std::string dataset;
  std::string method;
  double epsilon = 0.0;
  std::string metric;
  double mean = 0.0;
  double sd = 0.0;
  int repetitions = 0;
  uint64_t seed = 0;
  double ms = 0.0;
  // Per-trial values, in trial order.
  std::vector<double> values;
};

struct JSweepRow {
  std::string dataset;
  double epsilon = 0.0;
  int j = 0;
  double mean = 0.0;
  double sd = 0.0;
  double bound = 0.0;
  int repetitions = 0;
  uint64_t seed = 0;
};

// Seed for one trial, stable under adding or removing other methods.
uint64_t TrialSeed(uint64_t master, std::string_view method, double epsilon,
                   int trial);

absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec);
std::string DatasetName(const DatasetSpec& spec);

// Rows sorted by (dataset, method, epsilon, metric).
absl::StatusOr<std::vector<ResultRow>> Run(const ExperimentSpec& spec);

// Wavelet only; one row per (epsilon, J) over the sweep range, plus the
// theoretical bound.
absl::StatusOr<std::vector<JSweepRow>> JSweep(const ExperimentSpec& spec);

// Header `dataset,method,epsilon,metric,mean,sd,reps,seed,ms`.
std::string FormatCsv(const std::vector<ResultRow>& rows);
// One line per trial: `dataset,method,epsilon,metric,trial,value`.
std::string FormatLongCsv(const std::vector<ResultRow>& rows);
// Header `dataset,epsilon,J,empirical,sd,bound,reps,seed`.
std::string FormatJSweepCsv(const std::vector<JSweepRow>& rows);

absl::Status WriteFile(const std::string& path, std::string_view contents);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_BENCH_H_
