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

// Signed subset-selection randomizer for one wavelet level.
//
// A user's sample is encoded at level j as a 1-sparse vector v in
// {-1, 0, 1}^d with d = 2^j. The randomizer outputs an m-sparse vector
// y in {-1, 0, 1}^d with probability e^eps / Omega when <y, v> = 1 and
// 1 / Omega otherwise, which is eps-LDP by construction.

#ifndef WAVELET_LDP_MECHANISM_H_
#define WAVELET_LDP_MECHANISM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace wavelet_ldp {

// Every sampling routine takes one of these explicitly; equal seeds give
// bit-identical output.
using Rng = std::mt19937_64;

class PrivacyBudget {
 public:
  // Fails unless epsilon is positive and finite.
  static absl::StatusOr<PrivacyBudget> Create(double epsilon);

  double epsilon() const { return epsilon_; }

 private:
  explicit PrivacyBudget(double epsilon) : epsilon_(epsilon) {}

  double epsilon_;
};

struct EncodedReport {
  int level = 0;
  int64_t position = 0;
  int sign = 1;

  friend bool operator==(const EncodedReport&, const EncodedReport&) = default;
};

struct SignedEntry {
  int64_t position = 0;
  int sign = 1;

  friend auto operator<=>(const SignedEntry&, const SignedEntry&) = default;
};

// m nonzero (position, sign) pairs with distinct positions, sorted by
// position.
struct PerturbedReport {
  int level = 0;
  std::vector<SignedEntry> support;

  // Text form "j:pos+,pos-,...".
  std::string ToString() const;
  static absl::StatusOr<PerturbedReport> Parse(std::string_view text);

  friend bool operator==(const PerturbedReport&,
                         const PerturbedReport&) = default;
};

struct MechanismParams {
  int64_t d = 1;
  int64_t m = 1;
  double epsilon = 1.0;
  // P(Y(k) = 1 | v(k) = 1).
  double p = 0.5;
  // P(Y(k) = 1 | v(k) = 0).
  double q = 0.0;
  double log_omega = 0.0;

  int level() const;
};

// Computes p, q and log(Omega) through ratio identities that never form a
// binomial coefficient, so any d up to 2^kMaxLevel is safe.
absl::StatusOr<MechanismParams> DeriveParams(int64_t d, int64_t m,
                                             PrivacyBudget epsilon);

// The bracketed term minimized by the optimal m:
//   (1 + e^-eps) / (p (1 - e^-eps)^2) + q (d - 1) / (p^2 (1 - e^-eps)^2).
double VarianceObjective(const MechanismParams& params);

// argmin over m in [1, d] of VarianceObjective; ties go to the smaller m.
int64_t OptimalM(int64_t d, PrivacyBudget epsilon);

// Fails if x is outside [0, 1].
absl::StatusOr<EncodedReport> Encode(double x, int level);

// Probability of output y given input v. Fails if y is not a valid m-sparse
// output at v's level.
absl::StatusOr<double> OutputProbability(const MechanismParams& params,
                                         const EncodedReport& v,
                                         const PerturbedReport& y);

// Rejection sampler over the exact pmf: propose y uniformly from the output
// space and accept with probability 1 if <y, v> = 1, else e^-eps. Expected
// O(d e^eps) time. Used as the oracle for the fast sampler.
PerturbedReport PerturbReference(const EncodedReport& v,
                                 const MechanismParams& params, Rng& rng);

// O(m) sampler with reusable scratch. Draws the special coordinate
// (v.sign w.p. p, -v.sign w.p. p e^-eps, 0 otherwise), then fills the
// remaining m - 1 (or m) nonzeros at uniformly chosen other positions with
// independent uniform signs.
class FastPerturber {
 public:
  explicit FastPerturber(const MechanismParams& params);

  // Calls emit(position, sign) once per nonzero coordinate, special
  // coordinate first, the rest in selection order.
  template <typename Emit>
  void Perturb(const EncodedReport& v, Rng& rng, Emit&& emit);

  const MechanismParams& params() const { return params_; }

 private:
  int NextSign(Rng& rng);

  MechanismParams params_;
  double keep_threshold_;
  double flip_threshold_;
  std::vector<int64_t> others_;
  std::vector<int64_t> swaps_;
  uint64_t sign_bits_ = 0;
  int sign_bits_left_ = 0;
};

PerturbedReport PerturbFast(const EncodedReport& v,
                            const MechanismParams& params, Rng& rng);

// Exhaustive max over inputs v, v' and outputs y of pmf(y|v) / pmf(y|v').
// Fails if the enumeration would exceed ~10^7 pmf evaluations.
absl::StatusOr<double> LdpRatioAudit(const MechanismParams& params);

// Running per-coordinate sums of Y_i(k) for one level.
class LevelAccumulator {
 public:
  explicit LevelAccumulator(int64_t d) : sums_(static_cast<size_t>(d), 0) {}

  void Add(int64_t position, int sign) {
    sums_[static_cast<size_t>(position)] += sign;
  }
  void Add(const PerturbedReport& report);
  void Merge(const LevelAccumulator& other);
  void CountReport() { ++reports_; }

  int64_t reports() const { return reports_; }
  std::span<const int64_t> sums() const { return sums_; }

  // a_jk = 2^(j/2) / (n_j p (1 - e^-eps)) sum_i Y_i(k).
  absl::StatusOr<std::vector<double>> Coefficients(
      const MechanismParams& params) const;

 private:
  std::vector<int64_t> sums_;
  int64_t reports_ = 0;
};

// Unbiased a_jk for k = 0..2^j - 1 from one level's reports.
absl::StatusOr<std::vector<double>> AggregateLevel(
    std::span<const PerturbedReport> reports, const MechanismParams& params,
    int64_t n_j);

struct LevelVariance {
  // Sum over k of Var[a_jk | S_j]. An off-support coordinate is +1 or -1
  // with probability q each, so it contributes 2q per user.
  double conditional = 0.0;
  // The same closed form with the off-support term counted as q.
  double conditional_single_q = 0.0;
  // 2^j * VarianceObjective / n_j, the per-level term used for allocation
  // and for the error bound.
  double bound = 0.0;
};

LevelVariance ComputeLevelVariance(const MechanismParams& params, int64_t n_j);

// ---------------------------------------------------------------------------
// Implementation details.

template <typename Emit>
void FastPerturber::Perturb(const EncodedReport& v, Rng& rng, Emit&& emit) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  int64_t picks = params_.m - 1;
  if (u < keep_threshold_) {
    emit(v.position, v.sign);
  } else if (u < flip_threshold_ || params_.m == params_.d) {
    emit(v.position, -v.sign);
  } else {
    picks = params_.m;
  }
  const auto pool = static_cast<int64_t>(others_.size());
  if (picks == pool) {
    for (int64_t i = 0; i < pool; ++i) {
      const int64_t pos = i < v.position ? i : i + 1;
      emit(pos, NextSign(rng));
    }
    return;
  }
  // Partial Fisher-Yates over the other d - 1 coordinates, undone afterwards
  // so the scratch array stays the identity.
  for (int64_t t = 0; t < picks; ++t) {
    std::uniform_int_distribution<int64_t> pick(t, pool - 1);
    const int64_t r = pick(rng);
    std::swap(others_[t], others_[r]);
    swaps_[t] = r;
    const int64_t i = others_[t];
    emit(i < v.position ? i : i + 1, NextSign(rng));
  }
  for (int64_t t = picks - 1; t >= 0; --t) {
    std::swap(others_[t], others_[swaps_[t]]);
  }
}

inline int FastPerturber::NextSign(Rng& rng) {
  if (sign_bits_left_ == 0) {
    sign_bits_ = rng();
    sign_bits_left_ = 64;
  }
  const int sign = (sign_bits_ & 1) ? 1 : -1;
  sign_bits_ >>= 1;
  --sign_bits_left_;
  return sign;
}

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_MECHANISM_H_
