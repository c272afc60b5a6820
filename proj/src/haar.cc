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

#include "wavelet_ldp/haar.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace wavelet_ldp {

absl::StatusOr<HaarIndex> HaarIndex::Create(int level, int64_t shift) {
  if (level < 0 || level > kMaxLevel) {
    return absl::InvalidArgumentError(
        absl::StrCat("level ", level, " outside [0, ", kMaxLevel, "]"));
  }
  if (shift < 0 || shift >= (int64_t{1} << level)) {
    return absl::InvalidArgumentError(
        absl::StrCat("shift ", shift, " outside [0, 2^", level, ")"));
  }
  return HaarIndex{level, shift};
}

int64_t DyadicCell(double x, int level) {
  const int64_t cells = int64_t{1} << level;
  // Scaling by a power of two is exact, so the floor is exact as well.
  const auto cell = static_cast<int64_t>(std::ldexp(x, level));
  return std::min(cell, cells - 1);
}

double HaarScale(int level) { return std::exp2(0.5 * level); }

absl::StatusOr<double> EvalPsi(HaarIndex index, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    return absl::OutOfRangeError(absl::StrCat("x = ", x, " outside [0, 1]"));
  }
  if (DyadicCell(x, index.level) != index.shift) return 0.0;
  const bool left_half = DyadicCell(x, index.level + 1) == 2 * index.shift;
  const double scale = HaarScale(index.level);
  return left_half ? scale : -scale;
}

CoefficientTree::CoefficientTree(int max_level)
    : max_level_(max_level),
      coefficients_((size_t{1} << (max_level + 1)) - 1, 0.0) {}

absl::StatusOr<PiecewisePdf> PiecewisePdf::FromHeights(
    std::vector<double> heights) {
  if (heights.empty()) {
    return absl::InvalidArgumentError("pdf needs at least one bin");
  }
  for (double h : heights) {
    if (!std::isfinite(h)) {
      return absl::InvalidArgumentError("pdf heights must be finite");
    }
  }
  return PiecewisePdf(std::move(heights));
}

double PiecewisePdf::Density(double x) const {
  const auto bins = static_cast<int64_t>(heights_.size());
  const auto bin = std::clamp<int64_t>(
      static_cast<int64_t>(std::floor(x * static_cast<double>(bins))), 0,
      bins - 1);
  return heights_[static_cast<size_t>(bin)];
}

double PiecewisePdf::Integral() const {
  return std::accumulate(heights_.begin(), heights_.end(), 0.0) /
         static_cast<double>(heights_.size());
}

double PiecewisePdf::MinHeight() const {
  return *std::min_element(heights_.begin(), heights_.end());
}

absl::StatusOr<StepCdf> StepCdf::FromKnots(std::vector<double> knots) {
  if (knots.size() < 2) {
    return absl::InvalidArgumentError("a cdf grid needs at least two knots");
  }
  for (double k : knots) {
    if (!std::isfinite(k)) {
      return absl::InvalidArgumentError("cdf knots must be finite");
    }
  }
  return StepCdf(std::move(knots));
}

double StepCdf::At(double x) const {
  const int grid = grid_size();
  const double t = std::clamp(x, 0.0, 1.0) * grid;
  const int cell = std::min(static_cast<int>(t), grid - 1);
  const double frac = t - cell;
  return knots_[cell] + frac * (knots_[cell + 1] - knots_[cell]);
}

bool StepCdf::IsMonotone() const {
  return std::is_sorted(knots_.begin(), knots_.end());
}

absl::StatusOr<CoefficientTree> ExactCoefficients(
    std::span<const double> samples, int max_level) {
  if (samples.empty()) {
    return absl::InvalidArgumentError("no samples");
  }
  if (max_level < 0 || max_level > kMaxLevel) {
    return absl::InvalidArgumentError(
        absl::StrCat("max level ", max_level, " outside [0, ", kMaxLevel, "]"));
  }
  // Counting per finest half-cell keeps every coefficient an exact integer
  // difference scaled once, so no summation error accumulates with n.
  const int finest = max_level + 1;
  std::vector<int64_t> counts(size_t{1} << finest, 0);
  for (size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    if (!(x >= 0.0 && x <= 1.0)) {
      return absl::OutOfRangeError(
          absl::StrCat("sample ", i, " = ", x, " outside [0, 1]"));
    }
    ++counts[static_cast<size_t>(DyadicCell(x, finest))];
  }
  const auto n = static_cast<double>(samples.size());
  CoefficientTree tree(max_level);
  // Walk from the finest level up, merging pairs of half-cell counts.
  std::vector<int64_t> cells = std::move(counts);
  for (int j = max_level; j >= 0; --j) {
    const size_t width = size_t{1} << j;
    std::vector<int64_t> merged(width);
    auto level = tree.level(j);
    const double scale = HaarScale(j) / n;
    for (size_t k = 0; k < width; ++k) {
      const int64_t left = cells[2 * k];
      const int64_t right = cells[2 * k + 1];
      level[k] = scale * static_cast<double>(left - right);
      merged[k] = left + right;
    }
    cells = std::move(merged);
  }
  return tree;
}

PiecewisePdf ReconstructPdf(const CoefficientTree& tree) {
  std::vector<double> heights{1.0};
  for (int j = 0; j <= tree.max_level(); ++j) {
    const double scale = HaarScale(j);
    const auto coefficients = tree.level(j);
    std::vector<double> refined(2 * heights.size());
    for (size_t k = 0; k < heights.size(); ++k) {
      const double step = coefficients[k] * scale;
      refined[2 * k] = heights[k] + step;
      refined[2 * k + 1] = heights[k] - step;
    }
    heights = std::move(refined);
  }
  return *PiecewisePdf::FromHeights(std::move(heights));
}

absl::StatusOr<StepCdf> CdfOf(const PiecewisePdf& pdf, int grid_size) {
  if (grid_size < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid size ", grid_size, " must be >= 1"));
  }
  const auto heights = pdf.heights();
  const auto bins = static_cast<int64_t>(heights.size());
  const double width = 1.0 / static_cast<double>(bins);
  std::vector<double> prefix(heights.size() + 1, 0.0);
  for (size_t b = 0; b < heights.size(); ++b) {
    prefix[b + 1] = prefix[b] + heights[b] * width;
  }
  std::vector<double> knots(static_cast<size_t>(grid_size) + 1);
  for (int64_t i = 0; i <= grid_size; ++i) {
    // i/G = (full + frac) bins, computed in integers to stay exact.
    const int64_t scaled = i * bins;
    const int64_t full = scaled / grid_size;
    const int64_t rest = scaled % grid_size;
    double value = prefix[static_cast<size_t>(full)];
    if (rest != 0) {
      value += static_cast<double>(rest) / grid_size *
               heights[static_cast<size_t>(full)] * width;
    }
    knots[static_cast<size_t>(i)] = value;
  }
  return *StepCdf::FromKnots(std::move(knots));
}

}  // namespace wavelet_ldp
