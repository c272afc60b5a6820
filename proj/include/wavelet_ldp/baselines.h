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

// Categorical frequency oracles (kRR, OUE) over equal-width bins of [0, 1],
// Norm-Sub calibration, and the interpolated cdf of a binned estimate.

#ifndef WAVELET_LDP_BASELINES_H_
#define WAVELET_LDP_BASELINES_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "wavelet_ldp/haar.h"
#include "wavelet_ldp/mechanism.h"

namespace wavelet_ldp {

struct FrequencyVector {
  std::vector<double> values;

  int64_t d() const { return static_cast<int64_t>(values.size()); }
};

enum class FrequencyOracle { kKrr, kOue };

std::string_view FrequencyOracleName(FrequencyOracle oracle);

// kRR if d < 3 e^eps + 2, OUE otherwise.
FrequencyOracle ChooseOracle(int64_t d, PrivacyBudget epsilon);

// Bin index floor(x d), with x = 1 in the last bin.
int64_t BinOf(double x, int64_t d);

// Reports the true category with probability e^eps / (e^eps + d - 1) and each
// other category with probability 1 / (e^eps + d - 1).
class KrrOracle {
 public:
  static absl::StatusOr<KrrOracle> Create(int64_t d, PrivacyBudget epsilon);

  int64_t d() const { return d_; }
  double p() const { return p_; }
  double q() const { return q_; }

  int64_t Perturb(int64_t category, Rng& rng) const;
  // (f_j - q) / (p - q) with f_j the fraction of reports equal to j.
  absl::StatusOr<FrequencyVector> Estimate(
      std::span<const int64_t> reports) const;

 private:
  KrrOracle(int64_t d, double p, double q) : d_(d), p_(p), q_(q) {}

  int64_t d_;
  double p_;
  double q_;
};

// One bit per category: the true bit is set with probability 1/2, every other
// bit with probability 1 / (e^eps + 1).
class OueOracle {
 public:
  static absl::StatusOr<OueOracle> Create(int64_t d, PrivacyBudget epsilon);

  int64_t d() const { return d_; }
  double p() const { return 0.5; }
  double q() const { return q_; }

  std::vector<uint8_t> Perturb(int64_t category, Rng& rng) const;
  // Adds one report's bits to per-category counts without materializing it.
  void PerturbInto(int64_t category, Rng& rng,
                   std::span<int64_t> counts) const;
  absl::StatusOr<FrequencyVector> Estimate(
      std::span<const std::vector<uint8_t>> reports) const;
  absl::StatusOr<FrequencyVector> EstimateFromCounts(
      std::span<const int64_t> counts, int64_t n) const;

 private:
  OueOracle(int64_t d, double q) : d_(d), q_(q) {}

  int64_t d_;
  double q_;
};

// Projects onto the probability simplex by repeatedly zeroing negative
// entries and shifting the positive ones by a common amount until they sum
// to 1. An input with no positive entry maps to the uniform vector.
FrequencyVector NormSub(const FrequencyVector& raw);

// Cdf through (k/d, sum_{i<k} mu_i), linearly interpolated and sampled on a
// grid of size G.
absl::StatusOr<StepCdf> BinnedCdf(const FrequencyVector& freq, int grid_size);

// Bins the samples into d bins, randomizes each with the chosen oracle,
// estimates and calibrates.
absl::StatusOr<FrequencyVector> EstimateBinned(std::span<const double> samples,
                                               int64_t d, PrivacyBudget epsilon,
                                               Rng& rng);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_BASELINES_H_
