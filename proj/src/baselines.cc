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

#include "wavelet_ldp/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wavelet_ldp/status_macros.h"

namespace wavelet_ldp {
namespace {

absl::Status CheckCategories(int64_t d) {
  if (d < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("a frequency oracle needs d >= 2, got ", d));
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view FrequencyOracleName(FrequencyOracle oracle) {
  return oracle == FrequencyOracle::kKrr ? "krr" : "oue";
}

FrequencyOracle ChooseOracle(int64_t d, PrivacyBudget epsilon) {
  return static_cast<double>(d) < 3.0 * std::exp(epsilon.epsilon()) + 2.0
             ? FrequencyOracle::kKrr
             : FrequencyOracle::kOue;
}

int64_t BinOf(double x, int64_t d) {
  const auto bin = static_cast<int64_t>(std::floor(x * static_cast<double>(d)));
  return std::clamp<int64_t>(bin, 0, d - 1);
}

absl::StatusOr<KrrOracle> KrrOracle::Create(int64_t d, PrivacyBudget epsilon) {
  RETURN_IF_ERROR(CheckCategories(d));
  // p = e^eps / (e^eps + d - 1), written to stay finite for large eps.
  const double decay = std::exp(-epsilon.epsilon());
  const double p = 1.0 / (1.0 + static_cast<double>(d - 1) * decay);
  return KrrOracle(d, p, p * decay);
}

int64_t KrrOracle::Perturb(int64_t category, Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < p_) return category;
  std::uniform_int_distribution<int64_t> other(0, d_ - 2);
  const int64_t r = other(rng);
  return r < category ? r : r + 1;
}

absl::StatusOr<FrequencyVector> KrrOracle::Estimate(
    std::span<const int64_t> reports) const {
  if (reports.empty()) return absl::InvalidArgumentError("no reports");
  std::vector<int64_t> counts(static_cast<size_t>(d_), 0);
  for (int64_t r : reports) {
    if (r < 0 || r >= d_) {
      return absl::InvalidArgumentError(absl::StrCat("bad kRR report ", r));
    }
    ++counts[static_cast<size_t>(r)];
  }
  const auto n = static_cast<double>(reports.size());
  FrequencyVector out;
  out.values.resize(counts.size());
  for (size_t j = 0; j < counts.size(); ++j) {
    out.values[j] = (static_cast<double>(counts[j]) / n - q_) / (p_ - q_);
  }
  return out;
}

absl::StatusOr<OueOracle> OueOracle::Create(int64_t d, PrivacyBudget epsilon) {
  RETURN_IF_ERROR(CheckCategories(d));
  return OueOracle(d, 1.0 / (std::exp(epsilon.epsilon()) + 1.0));
}

void OueOracle::PerturbInto(int64_t category, Rng& rng,
                            std::span<int64_t> counts) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int64_t j = 0; j < d_; ++j) {
    const double threshold = j == category ? 0.5 : q_;
    if (unit(rng) < threshold) ++counts[static_cast<size_t>(j)];
  }
}

std::vector<uint8_t> OueOracle::Perturb(int64_t category, Rng& rng) const {
  std::vector<int64_t> bits(static_cast<size_t>(d_), 0);
  PerturbInto(category, rng, bits);
  return std::vector<uint8_t>(bits.begin(), bits.end());
}

absl::StatusOr<FrequencyVector> OueOracle::Estimate(
    std::span<const std::vector<uint8_t>> reports) const {
  std::vector<int64_t> counts(static_cast<size_t>(d_), 0);
  for (const auto& report : reports) {
    if (static_cast<int64_t>(report.size()) != d_) {
      return absl::InvalidArgumentError("OUE report has the wrong length");
    }
    for (size_t j = 0; j < report.size(); ++j) counts[j] += report[j] ? 1 : 0;
  }
  return EstimateFromCounts(counts, static_cast<int64_t>(reports.size()));
}

absl::StatusOr<FrequencyVector> OueOracle::EstimateFromCounts(
    std::span<const int64_t> counts, int64_t n) const {
  if (n <= 0) return absl::InvalidArgumentError("no reports");
  if (static_cast<int64_t>(counts.size()) != d_) {
    return absl::InvalidArgumentError("count vector has the wrong length");
  }
  FrequencyVector out;
  out.values.resize(counts.size());
  for (size_t j = 0; j < counts.size(); ++j) {
    out.values[j] =
        (static_cast<double>(counts[j]) / static_cast<double>(n) - q_) /
        (0.5 - q_);
  }
  return out;
}

FrequencyVector NormSub(const FrequencyVector& raw) {
  FrequencyVector out = raw;
  auto& v = out.values;
  if (v.empty()) return out;
  while (true) {
    double positive_sum = 0.0;
    int64_t positive = 0;
    for (double& x : v) {
      if (x <= 0.0) {
        x = 0.0;
      } else {
        positive_sum += x;
        ++positive;
      }
    }
    if (positive == 0) {
      std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(v.size()));
      return out;
    }
    const double shift = (positive_sum - 1.0) / static_cast<double>(positive);
    bool went_negative = false;
    for (double& x : v) {
      if (x > 0.0) {
        x -= shift;
        went_negative |= x < 0.0;
      }
    }
    if (!went_negative) return out;
  }
}

absl::StatusOr<StepCdf> BinnedCdf(const FrequencyVector& freq, int grid_size) {
  if (freq.values.empty()) {
    return absl::InvalidArgumentError("empty frequency vector");
  }
  if (grid_size < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid size ", grid_size, " must be >= 1"));
  }
  // A binned estimate is a piecewise-constant density, whose cdf is exactly
  // the linear interpolation through the bin edges.
  std::vector<double> heights(freq.values.size());
  const auto d = static_cast<double>(freq.values.size());
  for (size_t j = 0; j < heights.size(); ++j) heights[j] = freq.values[j] * d;
  ASSIGN_OR_RETURN(const PiecewisePdf pdf,
                   PiecewisePdf::FromHeights(std::move(heights)));
  return CdfOf(pdf, grid_size);
}

absl::StatusOr<FrequencyVector> EstimateBinned(std::span<const double> samples,
                                               int64_t d, PrivacyBudget epsilon,
                                               Rng& rng) {
  if (samples.empty()) return absl::InvalidArgumentError("no samples");
  FrequencyVector raw;
  if (ChooseOracle(d, epsilon) == FrequencyOracle::kKrr) {
    ASSIGN_OR_RETURN(const KrrOracle oracle, KrrOracle::Create(d, epsilon));
    std::vector<int64_t> reports;
    reports.reserve(samples.size());
    for (double x : samples) reports.push_back(oracle.Perturb(BinOf(x, d), rng));
    ASSIGN_OR_RETURN(raw, oracle.Estimate(reports));
  } else {
    ASSIGN_OR_RETURN(const OueOracle oracle, OueOracle::Create(d, epsilon));
    std::vector<int64_t> counts(static_cast<size_t>(d), 0);
    for (double x : samples) oracle.PerturbInto(BinOf(x, d), rng, counts);
    ASSIGN_OR_RETURN(
        raw, oracle.EstimateFromCounts(counts,
                                       static_cast<int64_t>(samples.size())));
  }
  return NormSub(raw);
}

}  // namespace wavelet_ldp
