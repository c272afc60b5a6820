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

#include "wavelet_ldp/metrics.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wavelet_ldp/status_macros.h"

namespace wavelet_ldp {
namespace {

absl::Status CheckSameGrid(const StepCdf& a, const StepCdf& b) {
  if (a.grid_size() != b.grid_size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid mismatch: ", a.grid_size(), " vs ", b.grid_size()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<EmpiricalCdf> EmpiricalCdf::Create(
    std::span<const double> samples) {
  if (samples.empty()) return absl::InvalidArgumentError("no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  for (double x : sorted) {
    if (std::isnan(x)) return absl::InvalidArgumentError("NaN sample");
  }
  std::sort(sorted.begin(), sorted.end());
  return EmpiricalCdf(std::move(sorted));
}

double EmpiricalCdf::At(double x) const {
  const auto le = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(le - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalCdf::Mass(double a, double b) const {
  if (b < a) return 0.0;
  const auto lo = std::lower_bound(sorted_.begin(), sorted_.end(), a);
  const auto hi = std::upper_bound(lo, sorted_.end(), b);
  return static_cast<double>(hi - lo) / static_cast<double>(sorted_.size());
}

StepCdf EmpiricalCdf::Knots(int grid_size) const {
  std::vector<double> knots(static_cast<size_t>(grid_size) + 1);
  for (int i = 0; i <= grid_size; ++i) {
    knots[static_cast<size_t>(i)] =
        At(static_cast<double>(i) / static_cast<double>(grid_size));
  }
  return *StepCdf::FromKnots(std::move(knots));
}

absl::StatusOr<double> Wasserstein(const StepCdf& est, const StepCdf& emp) {
  RETURN_IF_ERROR(CheckSameGrid(est, emp));
  const auto a = est.knots();
  const auto b = emp.knots();
  double total = 0.0;
  for (size_t k = 1; k < a.size(); ++k) total += std::abs(a[k] - b[k]);
  return total / static_cast<double>(est.grid_size());
}

absl::StatusOr<double> Ks(const StepCdf& est, const StepCdf& emp) {
  RETURN_IF_ERROR(CheckSameGrid(est, emp));
  const auto a = est.knots();
  const auto b = emp.knots();
  double worst = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

absl::StatusOr<RangeQueryError> RangeQuery(const StepCdf& est,
                                           const EmpiricalCdf& truth,
                                           double alpha, int trials,
                                           Rng& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha = ", alpha, " outside (0, 1)"));
  }
  if (trials < 1) {
    return absl::InvalidArgumentError("range query needs at least one trial");
  }
  std::uniform_real_distribution<double> start(0.0, 1.0 - alpha);
  RangeQueryError out;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double a = start(rng);
    const double b = a + alpha;
    const double error = std::abs(est.At(b) - est.At(a) - truth.Mass(a, b));
    total += error;
    out.max = std::max(out.max, error);
  }
  out.mean = total / trials;
  return out;
}

absl::StatusOr<double> RangeQueryMae(const StepCdf& est,
                                     const EmpiricalCdf& truth, double alpha,
                                     int trials, Rng& rng) {
  ASSIGN_OR_RETURN(const RangeQueryError error,
                   RangeQuery(est, truth, alpha, trials, rng));
  return error.mean;
}

}  // namespace wavelet_ldp
