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

// Grid-evaluated distances between cdfs and the range-query error.

#ifndef WAVELET_LDP_METRICS_H_
#define WAVELET_LDP_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "wavelet_ldp/haar.h"
#include "wavelet_ldp/mechanism.h"

namespace wavelet_ldp {

inline constexpr int kDefaultGridSize = 256;

// F(x) = (1/n) #{i : X_i <= x}, backed by a sorted copy of the samples.
class EmpiricalCdf {
 public:
  static absl::StatusOr<EmpiricalCdf> Create(std::span<const double> samples);

  size_t size() const { return sorted_.size(); }
  double At(double x) const;
  // (1/n) #{i : a <= X_i <= b}.
  double Mass(double a, double b) const;
  StepCdf Knots(int grid_size) const;

 private:
  explicit EmpiricalCdf(std::vector<double> sorted)
      : sorted_(std::move(sorted)) {}

  std::vector<double> sorted_;
};

// (1/M) sum_{k=1..M} |est(k/M) - emp(k/M)|.
absl::StatusOr<double> Wasserstein(const StepCdf& est, const StepCdf& emp);

// max over grid points of |est - emp|.
absl::StatusOr<double> Ks(const StepCdf& est, const StepCdf& emp);

struct RangeQueryError {
  double mean = 0.0;
  double max = 0.0;
};

// For `trials` intervals [a, a + alpha] with a ~ U[0, 1 - alpha], compares
// est(b) - est(a) against the exact fraction of samples in [a, b].
absl::StatusOr<RangeQueryError> RangeQuery(const StepCdf& est,
                                           const EmpiricalCdf& truth,
                                           double alpha, int trials, Rng& rng);

// Mean absolute range-query error.
absl::StatusOr<double> RangeQueryMae(const StepCdf& est,
                                     const EmpiricalCdf& truth, double alpha,
                                     int trials, Rng& rng);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_METRICS_H_
