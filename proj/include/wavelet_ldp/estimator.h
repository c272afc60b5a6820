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

// End-to-end wavelet estimator: level selection, user allocation across
// levels, per-level randomization and aggregation, and post-processing to a
// valid pdf. Also computes the non-asymptotic Wasserstein error bound.

#ifndef WAVELET_LDP_ESTIMATOR_H_
#define WAVELET_LDP_ESTIMATOR_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "wavelet_ldp/haar.h"
#include "wavelet_ldp/mechanism.h"

namespace wavelet_ldp {

// Users per level, n_0..n_J.
struct AllocationPlan {
  std::vector<int64_t> counts;

  int max_level() const { return static_cast<int>(counts.size()) - 1; }
  int64_t total() const;
};

enum class PerturbationMode {
  kFast,
  // Rejection sampler; slow, for cross-checking.
  kReference,
  // No randomization and no splitting: every level sees every user. Test
  // hook that must reproduce ExactCoefficients.
  kNonPrivate,
};

struct EstimatorConfig {
  PrivacyBudget epsilon;
  // Defaults to SelectJ(n).
  std::optional<int> max_level = std::nullopt;
  uint64_t seed = 0;
  bool postprocess = true;
  PerturbationMode perturbation = PerturbationMode::kFast;
  // Worker threads for the per-user randomization. Output does not depend on
  // this value.
  int threads = 1;
};

struct EstimateResult {
  AllocationPlan plan;
  CoefficientTree raw;
  CoefficientTree coefficients;
  PiecewisePdf pdf;
};

// ceil(log2(n) / 2), i.e. the smallest J with 4^J >= n. Returns 0 for n <= 1.
int SelectJ(int64_t n);

// V_j = 2^j min_m VarianceObjective(2^j, m, eps).
double LevelVarianceFactor(int level, PrivacyBudget epsilon);

// n_j proportional to 2^-j sqrt(V_j), floored; the remainder goes to level 0
// and empty levels borrow one user from the largest level.
absl::StatusOr<AllocationPlan> Allocate(int64_t n, int max_level,
                                        PrivacyBudget epsilon);

// 2^-(J+1) + sqrt(sum_j 2^-(2j+2) V_j / n_j) under the Allocate plan.
absl::StatusOr<double> ComputeBound(int64_t n, int max_level,
                                    PrivacyBudget epsilon);

// Clips level by level, starting from the constant density 1, so that each
// a_jk satisfies |a_jk| <= 2^(-j/2) f_{j-1} on the support of psi_jk. The
// reconstructed pdf is then non-negative and still integrates to 1.
CoefficientTree Postprocess(const CoefficientTree& tree);

absl::StatusOr<EstimateResult> EstimateDistribution(
    std::span<const double> samples, const EstimatorConfig& config);

absl::StatusOr<PiecewisePdf> Estimate(std::span<const double> samples,
                                      const EstimatorConfig& config);

// Independent generator stream for (seed, tags...), built with
// std::seed_seq so the derivation is fixed by the standard.
Rng MakeStream(uint64_t seed, std::initializer_list<uint32_t> tags);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_ESTIMATOR_H_
