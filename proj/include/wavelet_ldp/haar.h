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

// Haar wavelet machinery on [0, 1].
//
// Intervals are half-open on the right, except that x = 1 belongs to the last
// interval of every level. Under this convention psi_jk is a total function
// on [0, 1] and every point lies in exactly one dyadic cell per level.

#ifndef WAVELET_LDP_HAAR_H_
#define WAVELET_LDP_HAAR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace wavelet_ldp {

// Largest expansion level accepted anywhere in the library. Level J implies
// 2^(J+1) bins, so this bounds memory.
inline constexpr int kMaxLevel = 20;

// Identifies psi_jk(x) = 2^(j/2) psi(2^j x - k).
struct HaarIndex {
  int level = 0;
  int64_t shift = 0;

  static absl::StatusOr<HaarIndex> Create(int level, int64_t shift);

  friend bool operator==(const HaarIndex&, const HaarIndex&) = default;
};

// Index of the dyadic cell of width 2^-level containing x, with x = 1 mapped
// into the last cell. x must lie in [0, 1].
int64_t DyadicCell(double x, int level);

// 2^(level/2).
double HaarScale(int level);

// Evaluates psi_jk at x. Fails if x is outside [0, 1] (or NaN).
absl::StatusOr<double> EvalPsi(HaarIndex index, double x);

// Coefficients a_jk for every 0 <= j <= J, 0 <= k < 2^j, stored level by
// level (heap order: level j starts at offset 2^j - 1).
class CoefficientTree {
 public:
  explicit CoefficientTree(int max_level);

  int max_level() const { return max_level_; }
  size_t size() const { return coefficients_.size(); }

  double& at(int level, int64_t shift) {
    return coefficients_[Offset(level) + static_cast<size_t>(shift)];
  }
  double at(int level, int64_t shift) const {
    return coefficients_[Offset(level) + static_cast<size_t>(shift)];
  }
  double& at(HaarIndex index) { return at(index.level, index.shift); }
  double at(HaarIndex index) const { return at(index.level, index.shift); }

  std::span<double> level(int j) {
    return {coefficients_.data() + Offset(j), size_t{1} << j};
  }
  std::span<const double> level(int j) const {
    return {coefficients_.data() + Offset(j), size_t{1} << j};
  }

  std::span<const double> values() const { return coefficients_; }

  friend bool operator==(const CoefficientTree&,
                         const CoefficientTree&) = default;

 private:
  static size_t Offset(int level) { return (size_t{1} << level) - 1; }

  int max_level_;
  std::vector<double> coefficients_;
};

// Density on [0, 1] that is constant on each of heights().size() equal-width
// bins. Heights are densities, so a normalized pdf has mean height 1.
class PiecewisePdf {
 public:
  // Fails on an empty vector or non-finite entries. Negative heights are
  // allowed here (a raw reconstruction can dip below zero).
  static absl::StatusOr<PiecewisePdf> FromHeights(std::vector<double> heights);

  std::span<const double> heights() const { return heights_; }
  size_t num_bins() const { return heights_.size(); }

  // Density at x in [0, 1] under the endpoint convention.
  double Density(double x) const;
  double Integral() const;
  double MinHeight() const;

 private:
  explicit PiecewisePdf(std::vector<double> heights)
      : heights_(std::move(heights)) {}

  std::vector<double> heights_;
};

// A cdf sampled at i/G for i = 0..G and linearly interpolated in between.
class StepCdf {
 public:
  static absl::StatusOr<StepCdf> FromKnots(std::vector<double> knots);

  int grid_size() const { return static_cast<int>(knots_.size()) - 1; }
  std::span<const double> knots() const { return knots_; }

  // Linear interpolation between knots; x is clamped to [0, 1].
  double At(double x) const;
  bool IsMonotone() const;

 private:
  explicit StepCdf(std::vector<double> knots) : knots_(std::move(knots)) {}

  std::vector<double> knots_;
};

// a*_jk = (1/n) sum_i psi_jk(X_i) for every j <= max_level.
absl::StatusOr<CoefficientTree> ExactCoefficients(
    std::span<const double> samples, int max_level);

// f_J = 1 + sum a_jk psi_jk, returned as 2^(J+1) bin heights.
PiecewisePdf ReconstructPdf(const CoefficientTree& tree);

// Exact integral of the pdf at i/G, i = 0..G.
absl::StatusOr<StepCdf> CdfOf(const PiecewisePdf& pdf, int grid_size);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_HAAR_H_
