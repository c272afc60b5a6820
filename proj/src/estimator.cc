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

#include "wavelet_ldp/estimator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wavelet_ldp/status_macros.h"

namespace wavelet_ldp {
namespace {

// Users per generator stream. Streams are keyed by (seed, level, chunk), so
// the output is the same for any thread count.
constexpr int64_t kChunkSize = 4096;

constexpr uint32_t kShuffleTag = 0xffffffffu;

absl::Status ValidateSamples(std::span<const double> samples) {
  if (samples.empty()) return absl::InvalidArgumentError("no samples");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i] >= 0.0 && samples[i] <= 1.0)) {
      return absl::OutOfRangeError(
          absl::StrCat("sample ", i, " = ", samples[i], " outside [0, 1]"));
    }
  }
  return absl::OkStatus();
}

void NonPrivateLevel(std::span<const double> samples, int level,
                     std::span<double> out) {
  LevelAccumulator acc(int64_t{1} << level);
  for (double x : samples) {
    const EncodedReport v = *Encode(x, level);
    acc.Add(v.position, v.sign);
  }
  const double scale = HaarScale(level) / static_cast<double>(samples.size());
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = scale * static_cast<double>(acc.sums()[k]);
  }
}

// Randomizes users[0..n) at one level and returns their summed reports.
LevelAccumulator PrivateLevel(std::span<const double> samples,
                              std::span<const int64_t> users,
                              const MechanismParams& params,
                              const EstimatorConfig& config) {
  const int level = params.level();
  const auto n = static_cast<int64_t>(users.size());
  const int64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  const int workers = static_cast<int>(
      std::clamp<int64_t>(config.threads, 1, std::max<int64_t>(chunks, 1)));

  auto run = [&](int worker, LevelAccumulator& acc) {
    for (int64_t c = worker; c < chunks; c += workers) {
      // Per chunk, so cached sign bits never cross stream boundaries.
      FastPerturber fast(params);
      Rng rng = MakeStream(config.seed, {static_cast<uint32_t>(level),
                                         static_cast<uint32_t>(c)});
      const int64_t end = std::min(n, (c + 1) * kChunkSize);
      for (int64_t u = c * kChunkSize; u < end; ++u) {
        const double x = samples[static_cast<size_t>(users[u])];
        const EncodedReport v = *Encode(x, level);
        if (config.perturbation == PerturbationMode::kReference) {
          acc.Add(PerturbReference(v, params, rng));
        } else {
          fast.Perturb(v, rng,
                       [&acc](int64_t pos, int sign) { acc.Add(pos, sign); });
          acc.CountReport();
        }
      }
    }
  };

  std::vector<LevelAccumulator> partial(static_cast<size_t>(workers),
                                        LevelAccumulator(params.d));
  if (workers == 1) {
    run(0, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(run, w, std::ref(partial[static_cast<size_t>(w)]));
    }
    for (std::thread& t : pool) t.join();
  }
  for (size_t w = 1; w < partial.size(); ++w) partial[0].Merge(partial[w]);
  return std::move(partial[0]);
}

}  // namespace

int64_t AllocationPlan::total() const {
  return std::accumulate(counts.begin(), counts.end(), int64_t{0});
}

Rng MakeStream(uint64_t seed, std::initializer_list<uint32_t> tags) {
  std::vector<uint32_t> words = {static_cast<uint32_t>(seed),
                                 static_cast<uint32_t>(seed >> 32)};
  words.insert(words.end(), tags.begin(), tags.end());
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

int SelectJ(int64_t n) {
  int j = 0;
  // 4^j >= n  <=>  j >= log2(n) / 2.
  while (j < 62 / 2 && (int64_t{1} << (2 * j)) < n) ++j;
  return j;
}

double LevelVarianceFactor(int level, PrivacyBudget epsilon) {
  const int64_t d = int64_t{1} << level;
  const MechanismParams params =
      *DeriveParams(d, OptimalM(d, epsilon), epsilon);
  return static_cast<double>(d) * VarianceObjective(params);
}

absl::StatusOr<AllocationPlan> Allocate(int64_t n, int max_level,
                                        PrivacyBudget epsilon) {
  if (max_level < 0 || max_level > kMaxLevel) {
    return absl::InvalidArgumentError(
        absl::StrCat("J = ", max_level, " outside [0, ", kMaxLevel, "]"));
  }
  if (n < max_level + 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "n = ", n, " users cannot cover ", max_level + 1, " levels"));
  }
  std::vector<double> weights(static_cast<size_t>(max_level) + 1);
  for (int j = 0; j <= max_level; ++j) {
    weights[j] =
        std::exp2(-j) * std::sqrt(LevelVarianceFactor(j, epsilon));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  AllocationPlan plan;
  plan.counts.resize(weights.size());
  for (size_t j = 0; j < weights.size(); ++j) {
    plan.counts[j] = static_cast<int64_t>(
        std::floor(weights[j] / total * static_cast<double>(n)));
  }
  plan.counts[0] += n - plan.total();
  for (int64_t& count : plan.counts) {
    if (count > 0) continue;
    auto largest = std::max_element(plan.counts.begin(), plan.counts.end());
    --*largest;
    count = 1;
  }
  return plan;
}

absl::StatusOr<double> ComputeBound(int64_t n, int max_level,
                                    PrivacyBudget epsilon) {
  ASSIGN_OR_RETURN(const AllocationPlan plan, Allocate(n, max_level, epsilon));
  double variance = 0.0;
  for (int j = 0; j <= max_level; ++j) {
    variance += std::exp2(-(2 * j + 2)) * LevelVarianceFactor(j, epsilon) /
                static_cast<double>(plan.counts[j]);
  }
  return std::exp2(-(max_level + 1)) + std::sqrt(variance);
}

CoefficientTree Postprocess(const CoefficientTree& tree) {
  CoefficientTree out = tree;
  std::vector<double> heights{1.0};
  for (int j = 0; j <= tree.max_level(); ++j) {
    const double scale = HaarScale(j);
    auto level = out.level(j);
    std::vector<double> refined(2 * heights.size());
    for (size_t k = 0; k < heights.size(); ++k) {
      // f_{j-1} is constant on the support of psi_jk. The refinement below
      // repeats ReconstructPdf's arithmetic exactly, so shrinking the limit
      // until limit * scale <= f_{j-1} keeps every height >= 0 there too.
      double limit = std::max(heights[k], 0.0) / scale;
      while (limit * scale > heights[k] && limit > 0.0) {
        limit = std::nextafter(limit, 0.0);
      }
      level[k] = std::clamp(level[k], -limit, limit);
      const double step = level[k] * scale;
      refined[2 * k] = heights[k] + step;
      refined[2 * k + 1] = heights[k] - step;
    }
    heights = std::move(refined);
  }
  return out;
}

absl::StatusOr<EstimateResult> EstimateDistribution(
    std::span<const double> samples, const EstimatorConfig& config) {
  RETURN_IF_ERROR(ValidateSamples(samples));
  const auto n = static_cast<int64_t>(samples.size());
  const int max_level = config.max_level.value_or(SelectJ(n));
  if (max_level < 0 || max_level > kMaxLevel) {
    return absl::InvalidArgumentError(
        absl::StrCat("J = ", max_level, " outside [0, ", kMaxLevel, "]"));
  }

  CoefficientTree raw(max_level);
  AllocationPlan plan;
  if (config.perturbation == PerturbationMode::kNonPrivate) {
    plan.counts.assign(static_cast<size_t>(max_level) + 1, n);
    for (int j = 0; j <= max_level; ++j) {
      NonPrivateLevel(samples, j, raw.level(j));
    }
  } else {
    ASSIGN_OR_RETURN(plan, Allocate(n, max_level, config.epsilon));
    std::vector<int64_t> users(static_cast<size_t>(n));
    std::iota(users.begin(), users.end(), int64_t{0});
    Rng shuffle_rng = MakeStream(config.seed, {kShuffleTag});
    std::shuffle(users.begin(), users.end(), shuffle_rng);

    int64_t offset = 0;
    for (int j = 0; j <= max_level; ++j) {
      const int64_t d = int64_t{1} << j;
      ASSIGN_OR_RETURN(
          const MechanismParams params,
          DeriveParams(d, OptimalM(d, config.epsilon), config.epsilon));
      const std::span<const int64_t> level_users(
          users.data() + offset, static_cast<size_t>(plan.counts[j]));
      offset += plan.counts[j];
      const LevelAccumulator acc =
          PrivateLevel(samples, level_users, params, config);
      ASSIGN_OR_RETURN(const std::vector<double> coefficients,
                       acc.Coefficients(params));
      std::copy(coefficients.begin(), coefficients.end(),
                raw.level(j).begin());
    }
  }

  CoefficientTree final_tree = config.postprocess ? Postprocess(raw) : raw;
  PiecewisePdf pdf = ReconstructPdf(final_tree);
  return EstimateResult{std::move(plan), std::move(raw), std::move(final_tree),
                        std::move(pdf)};
}

absl::StatusOr<PiecewisePdf> Estimate(std::span<const double> samples,
                                      const EstimatorConfig& config) {
  ASSIGN_OR_RETURN(EstimateResult result,
                   EstimateDistribution(samples, config));
  return std::move(result.pdf);
}

}  // namespace wavelet_ldp
