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

#include "wavelet_ldp/mechanism.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "wavelet_ldp/haar.h"

namespace wavelet_ldp {
namespace {

struct Probabilities {
  double p;
  double q;
};

// With A = C(d-1, m-1) 2^(m-1) the normalizer is
//   Omega = A (e^eps + 1 + 2 (d - m) / m),
// since C(d-1, m) 2^m / A = 2 (d - m) / m. Likewise q / (p e^-eps) reduces to
// (m-1)(e^eps+1) / (2(d-1)) + (d-m)/(d-1) for m >= 2, and to 1 for m = 1.
Probabilities ComputeProbabilities(int64_t d, int64_t m, double epsilon) {
  const double ratio =
      2.0 * static_cast<double>(d - m) / static_cast<double>(m);
  const double decay = std::exp(-epsilon);
  const double p = 1.0 / (1.0 + (1.0 + ratio) * decay);
  double q = p * decay;
  if (m >= 2) {
    const double others = static_cast<double>(d - 1);
    q = p * (static_cast<double>(m - 1) * (1.0 + decay) / (2.0 * others) +
             decay * static_cast<double>(d - m) / others);
  }
  return {p, q};
}

double LogBinomial(int64_t n, int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

absl::Status ValidateReport(const MechanismParams& params,
                            const PerturbedReport& y) {
  if (y.level != params.level()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "report level ", y.level, " does not match d = ", params.d));
  }
  if (static_cast<int64_t>(y.support.size()) != params.m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "report has ", y.support.size(), " nonzeros, expected m = ", params.m));
  }
  for (size_t i = 0; i < y.support.size(); ++i) {
    const SignedEntry& e = y.support[i];
    if (e.position < 0 || e.position >= params.d ||
        (e.sign != 1 && e.sign != -1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid report entry ", e.position, "/", e.sign));
    }
    if (i > 0 && y.support[i - 1].position >= e.position) {
      return absl::InvalidArgumentError(
          "report positions must be distinct and sorted");
    }
  }
  return absl::OkStatus();
}

int InnerProduct(const EncodedReport& v, const PerturbedReport& y) {
  for (const SignedEntry& e : y.support) {
    if (e.position == v.position) return e.sign * v.sign;
  }
  return 0;
}

}  // namespace

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  return PrivacyBudget(epsilon);
}

std::string PerturbedReport::ToString() const {
  std::string out = absl::StrCat(level, ":");
  for (size_t i = 0; i < support.size(); ++i) {
    if (i > 0) out += ',';
    absl::StrAppend(&out, support[i].position, support[i].sign > 0 ? "+" : "-");
  }
  return out;
}

absl::StatusOr<PerturbedReport> PerturbedReport::Parse(
    std::string_view std_text) {
  // The installed absl has its own string_view type.
  const absl::string_view text(std_text.data(), std_text.size());
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("report '", text, "' has no level separator"));
  }
  PerturbedReport report;
  const absl::string_view level = text.substr(0, colon);
  auto [end, ec] =
      std::from_chars(level.data(), level.data() + level.size(), report.level);
  if (ec != std::errc() || end != level.data() + level.size() ||
      report.level < 0 || report.level > kMaxLevel) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad report level '", level, "'"));
  }
  const int64_t d = int64_t{1} << report.level;
  for (absl::string_view item : absl::StrSplit(text.substr(colon + 1), ',')) {
    if (item.size() < 2 || (item.back() != '+' && item.back() != '-')) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad report entry '", item, "'"));
    }
    SignedEntry entry;
    entry.sign = item.back() == '+' ? 1 : -1;
    const absl::string_view digits = item.substr(0, item.size() - 1);
    auto [pend, pec] = std::from_chars(
        digits.data(), digits.data() + digits.size(), entry.position);
    if (pec != std::errc() || pend != digits.data() + digits.size() ||
        entry.position < 0 || entry.position >= d) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad report position '", digits, "'"));
    }
    report.support.push_back(entry);
  }
  std::sort(report.support.begin(), report.support.end());
  for (size_t i = 1; i < report.support.size(); ++i) {
    if (report.support[i].position == report.support[i - 1].position) {
      return absl::InvalidArgumentError("duplicate report position");
    }
  }
  return report;
}

int MechanismParams::level() const { return std::countr_zero(
    static_cast<uint64_t>(d)); }

absl::StatusOr<MechanismParams> DeriveParams(int64_t d, int64_t m,
                                             PrivacyBudget epsilon) {
  if (d < 1 || d > (int64_t{1} << kMaxLevel) ||
      !std::has_single_bit(static_cast<uint64_t>(d))) {
    return absl::InvalidArgumentError(
        absl::StrCat("d = ", d, " must be a power of two <= 2^", kMaxLevel));
  }
  if (m < 1 || m > d) {
    return absl::InvalidArgumentError(
        absl::StrCat("m = ", m, " outside [1, ", d, "]"));
  }
  const double eps = epsilon.epsilon();
  const Probabilities probs = ComputeProbabilities(d, m, eps);
  const double ratio =
      2.0 * static_cast<double>(d - m) / static_cast<double>(m);
  const double log_a =
      LogBinomial(d - 1, m - 1) + static_cast<double>(m - 1) * std::log(2.0);
  MechanismParams params;
  params.d = d;
  params.m = m;
  params.epsilon = eps;
  params.p = probs.p;
  params.q = probs.q;
  params.log_omega = log_a + eps + std::log1p((1.0 + ratio) * std::exp(-eps));
  return params;
}

double VarianceObjective(const MechanismParams& params) {
  const double decay = std::exp(-params.epsilon);
  const double gap = (1.0 - decay) * (1.0 - decay);
  return (1.0 + decay) / (params.p * gap) +
         params.q * static_cast<double>(params.d - 1) /
             (params.p * params.p * gap);
}

int64_t OptimalM(int64_t d, PrivacyBudget epsilon) {
  const double eps = epsilon.epsilon();
  const double decay = std::exp(-eps);
  const double gap = (1.0 - decay) * (1.0 - decay);
  int64_t best_m = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int64_t m = 1; m <= d; ++m) {
    const Probabilities probs = ComputeProbabilities(d, m, eps);
    const double value =
        (1.0 + decay) / (probs.p * gap) +
        probs.q * static_cast<double>(d - 1) / (probs.p * probs.p * gap);
    if (value < best) {
      best = value;
      best_m = m;
    }
  }
  return best_m;
}

absl::StatusOr<EncodedReport> Encode(double x, int level) {
  if (!(x >= 0.0 && x <= 1.0)) {
    return absl::OutOfRangeError(absl::StrCat("x = ", x, " outside [0, 1]"));
  }
  if (level < 0 || level > kMaxLevel) {
    return absl::InvalidArgumentError(absl::StrCat("bad level ", level));
  }
  EncodedReport report;
  report.level = level;
  report.position = DyadicCell(x, level);
  report.sign = DyadicCell(x, level + 1) == 2 * report.position ? 1 : -1;
  return report;
}

absl::StatusOr<double> OutputProbability(const MechanismParams& params,
                                         const EncodedReport& v,
                                         const PerturbedReport& y) {
  if (v.level != params.level() || v.position < 0 || v.position >= params.d) {
    return absl::InvalidArgumentError("encoded input does not match params");
  }
  if (absl::Status s = ValidateReport(params, y); !s.ok()) return s;
  const double log_mass = InnerProduct(v, y) == 1
                              ? params.epsilon - params.log_omega
                              : -params.log_omega;
  return std::exp(log_mass);
}

PerturbedReport PerturbReference(const EncodedReport& v,
                                 const MechanismParams& params, Rng& rng) {
  std::vector<int64_t> positions(static_cast<size_t>(params.d));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  const double reject_accept = std::exp(-params.epsilon);
  PerturbedReport y;
  y.level = params.level();
  while (true) {
    std::iota(positions.begin(), positions.end(), int64_t{0});
    y.support.clear();
    for (int64_t t = 0; t < params.m; ++t) {
      std::uniform_int_distribution<int64_t> pick(t, params.d - 1);
      std::swap(positions[t], positions[pick(rng)]);
      y.support.push_back({positions[t], coin(rng) ? 1 : -1});
    }
    if (InnerProduct(v, y) == 1 || unit(rng) < reject_accept) break;
  }
  std::sort(y.support.begin(), y.support.end());
  return y;
}

FastPerturber::FastPerturber(const MechanismParams& params)
    : params_(params),
      keep_threshold_(params.p),
      flip_threshold_(params.p * (1.0 + std::exp(-params.epsilon))),
      others_(static_cast<size_t>(params.d - 1)),
      swaps_(static_cast<size_t>(params.m)) {
  std::iota(others_.begin(), others_.end(), int64_t{0});
}

PerturbedReport PerturbFast(const EncodedReport& v,
                            const MechanismParams& params, Rng& rng) {
  FastPerturber perturber(params);
  PerturbedReport y;
  y.level = params.level();
  y.support.reserve(static_cast<size_t>(params.m));
  perturber.Perturb(v, rng, [&](int64_t position, int sign) {
    y.support.push_back({position, sign});
  });
  std::sort(y.support.begin(), y.support.end());
  return y;
}

absl::StatusOr<double> LdpRatioAudit(const MechanismParams& params) {
  const double outputs = std::exp(LogBinomial(params.d, params.m)) *
                         std::exp2(static_cast<double>(params.m));
  const double inputs = 2.0 * static_cast<double>(params.d);
  if (outputs * inputs > 1e7) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "audit of d = ", params.d, ", m = ", params.m, " is too large"));
  }
  std::vector<EncodedReport> all_inputs;
  for (int64_t k = 0; k < params.d; ++k) {
    all_inputs.push_back({params.level(), k, 1});
    all_inputs.push_back({params.level(), k, -1});
  }
  // Enumerate m-subsets in lexicographic order, then every sign pattern.
  std::vector<int64_t> subset(static_cast<size_t>(params.m));
  std::iota(subset.begin(), subset.end(), int64_t{0});
  double worst = 1.0;
  PerturbedReport y;
  y.level = params.level();
  while (true) {
    for (uint64_t signs = 0; signs < (uint64_t{1} << params.m); ++signs) {
      y.support.clear();
      for (int64_t t = 0; t < params.m; ++t) {
        y.support.push_back({subset[t], (signs >> t) & 1 ? 1 : -1});
      }
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (const EncodedReport& v : all_inputs) {
        auto mass = OutputProbability(params, v, y);
        if (!mass.ok()) return mass.status();
        lo = std::min(lo, *mass);
        hi = std::max(hi, *mass);
      }
      worst = std::max(worst, hi / lo);
    }
    // Advance to the next subset.
    int64_t t = params.m - 1;
    while (t >= 0 && subset[t] == params.d - params.m + t) --t;
    if (t < 0) break;
    ++subset[t];
    for (int64_t u = t + 1; u < params.m; ++u) subset[u] = subset[u - 1] + 1;
  }
  return worst;
}

void LevelAccumulator::Add(const PerturbedReport& report) {
  for (const SignedEntry& e : report.support) Add(e.position, e.sign);
  CountReport();
}

void LevelAccumulator::Merge(const LevelAccumulator& other) {
  for (size_t k = 0; k < sums_.size(); ++k) sums_[k] += other.sums_[k];
  reports_ += other.reports_;
}

absl::StatusOr<std::vector<double>> LevelAccumulator::Coefficients(
    const MechanismParams& params) const {
  if (reports_ <= 0) {
    return absl::FailedPreconditionError("no reports at this level");
  }
  const double scale =
      HaarScale(params.level()) /
      (static_cast<double>(reports_) * params.p *
       (1.0 - std::exp(-params.epsilon)));
  std::vector<double> out(sums_.size());
  for (size_t k = 0; k < sums_.size(); ++k) {
    out[k] = scale * static_cast<double>(sums_[k]);
  }
  return out;
}

absl::StatusOr<std::vector<double>> AggregateLevel(
    std::span<const PerturbedReport> reports, const MechanismParams& params,
    int64_t n_j) {
  if (n_j <= 0 || reports.empty()) {
    return absl::InvalidArgumentError("aggregation needs at least one report");
  }
  if (static_cast<int64_t>(reports.size()) != n_j) {
    return absl::InvalidArgumentError(absl::StrCat(
        "n_j = ", n_j, " but ", reports.size(), " reports were given"));
  }
  LevelAccumulator acc(params.d);
  for (const PerturbedReport& y : reports) {
    if (absl::Status s = ValidateReport(params, y); !s.ok()) return s;
    acc.Add(y);
  }
  return acc.Coefficients(params);
}

LevelVariance ComputeLevelVariance(const MechanismParams& params,
                                   int64_t n_j) {
  const double decay = std::exp(-params.epsilon);
  const double gap = (1.0 - decay) * (1.0 - decay);
  const double scale = std::exp2(params.level()) / static_cast<double>(n_j);
  const double on_support = (1.0 + decay) / (params.p * gap) - 1.0;
  const double off_support = params.q * static_cast<double>(params.d - 1) /
                             (params.p * params.p * gap);
  LevelVariance out;
  out.conditional = scale * (on_support + 2.0 * off_support);
  out.conditional_single_q = scale * (on_support + off_support);
  out.bound = scale * VarianceObjective(params);
  return out;
}

}  // namespace wavelet_ldp
