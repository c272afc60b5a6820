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

// Acceptance suite. Prints one PASS/FAIL line per criterion; `--criterion N`
// runs a single one. Exit status is non-zero if any selected criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "wavelet_ldp/baselines.h"
#include "wavelet_ldp/bench.h"
#include "wavelet_ldp/datagen.h"
#include "wavelet_ldp/estimator.h"
#include "wavelet_ldp/haar.h"
#include "wavelet_ldp/mechanism.h"
#include "wavelet_ldp/metrics.h"

namespace wavelet_ldp {
namespace {

struct Outcome {
  Outcome() = default;
  Outcome(bool p, std::string d) : pass(p), detail(std::move(d)) {}

  bool pass = false;
  std::string detail;
  // Extra information lines, printed below the verdict.
  std::vector<std::string> notes;
};

PrivacyBudget Eps(double e) { return *PrivacyBudget::Create(e); }

int Threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

double Choose(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int64_t i = 1; i <= k; ++i) out = out * double(n - k + i) / double(i);
  return out;
}

// Every output with m nonzero signed entries, as (position, sign) lists.
std::vector<PerturbedReport> AllOutputs(int64_t d, int64_t m, int level) {
  std::vector<PerturbedReport> out;
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != m) continue;
    for (uint32_t signs = 0; signs < (1u << m); ++signs) {
      PerturbedReport y{level, {}};
      int t = 0;
      for (int64_t k = 0; k < d; ++k) {
        if ((mask >> k) & 1) {
          y.support.push_back({k, ((signs >> t++) & 1) ? 1 : -1});
        }
      }
      out.push_back(std::move(y));
    }
  }
  return out;
}

// Probability that the fast sampler's decision tree emits y for input v.
double DecisionTreePmf(const MechanismParams& params, const EncodedReport& v,
                       const PerturbedReport& y) {
  const double decay = std::exp(-params.epsilon);
  int special = 0;
  for (const auto& e : y.support) {
    if (e.position == v.position) special = e.sign * v.sign;
  }
  const double branch = special == 1    ? params.p
                        : special == -1 ? params.p * decay
                                        : 1 - params.p * (1 + decay);
  const int64_t picked = special == 0 ? params.m : params.m - 1;
  return branch / (Choose(params.d - 1, picked) * std::exp2(picked));
}

Outcome Criterion1() {
  double worst_error = 0.0;
  int configs = 0;
  for (int level : {1, 2, 3}) {
    const int64_t d = int64_t{1} << level;
    for (int64_t m : {1, 2, 3}) {
      if (m > d) continue;
      for (double eps : {0.5, 1.0, std::log(4.0)}) {
        const MechanismParams params = *DeriveParams(d, m, Eps(eps));
        const auto audited = LdpRatioAudit(params);
        if (!audited.ok()) return {false, std::string(audited.status().message())};
        // Independent check: ratio of the sampler's own decision-tree pmf.
        const std::vector<PerturbedReport> outputs = AllOutputs(d, m, level);
        double ratio = 0.0;
        for (const auto& y : outputs) {
          double lo = INFINITY, hi = 0.0;
          for (int64_t k = 0; k < d; ++k) {
            for (int sign : {-1, 1}) {
              const double pr = DecisionTreePmf(params, {level, k, sign}, y);
              lo = std::min(lo, pr);
              hi = std::max(hi, pr);
            }
          }
          ratio = std::max(ratio, hi / lo);
        }
        const double target = std::exp(eps);
        worst_error = std::max({worst_error, std::abs(*audited - target),
                                std::abs(ratio - target)});
        ++configs;
      }
    }
  }
  return {worst_error <= 1e-12,
          absl::StrFormat("%d configs, max |ratio - e^eps| = %.3g (tol 1e-12)",
                          configs, worst_error)};
}

Outcome Criterion2() {
  const MechanismParams params = *DeriveParams(4, 2, Eps(1.0));
  const EncodedReport v{2, 1, 1};
  constexpr int kDraws = 2000000;
  // Output key: bit (2 * position + [sign > 0]).
  std::array<double, 256> fast{}, ref{};
  auto key = [](const PerturbedReport& y) {
    uint32_t k = 0;
    for (const auto& e : y.support) k |= 1u << (2 * e.position + (e.sign > 0));
    return k;
  };
  Rng fast_rng = MakeStream(2, {0});
  Rng ref_rng = MakeStream(2, {1});
  for (int i = 0; i < kDraws; ++i) {
    fast[key(PerturbFast(v, params, fast_rng))] += 1;
    ref[key(PerturbReference(v, params, ref_rng))] += 1;
  }
  double stat = 0.0;
  int cells = 0;
  for (size_t k = 0; k < fast.size(); ++k) {
    const double row = fast[k] + ref[k];
    if (row == 0) continue;
    ++cells;
    const double expected = row / 2;
    stat += (fast[k] - expected) * (fast[k] - expected) / expected +
            (ref[k] - expected) * (ref[k] - expected) / expected;
  }
  const boost::math::chi_squared_distribution<double> dist(cells - 1);
  const double p = boost::math::cdf(boost::math::complement(dist, stat));
  return {p > 0.001 && cells == 24,
          absl::StrFormat("chi2 = %.2f on %d dof, p = %.4f (need > 0.001)",
                          stat, cells - 1, p)};
}

std::vector<double> RandomContinuousData(int64_t n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  switch (pick(rng)) {
    case 0:
      for (int64_t i = 0; i < n; ++i) out.push_back(unit(rng));
      break;
    case 1: {
      std::uniform_int_distribution<int> shape(1, 6);
      out = GenerateBeta(n, shape(rng), shape(rng), rng)->values;
      break;
    }
    case 2:
      out = GenerateSquareWave(n, std::exp2(-std::uniform_int_distribution<int>(1, 4)(rng)), rng)
                ->values;
      break;
    default: {
      // Tight clusters, redrawn rather than clipped so no atom lands on 0.
      std::normal_distribution<double> noise(0.0, 0.01);
      const double centers[3] = {unit(rng), unit(rng), unit(rng)};
      while (static_cast<int64_t>(out.size()) < n) {
        const double x = centers[out.size() % 3] + noise(rng);
        if (x > 0.0 && x <= 1.0) out.push_back(x);
      }
    }
  }
  if (unit(rng) < 0.3) out.back() = 1.0;
  return out;
}

Outcome Criterion3() {
  Rng rng = MakeStream(3, {});
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<int64_t>(1, 10000)(rng);
    const int level = trial % 9;
    const std::vector<double> samples = RandomContinuousData(n, rng);
    const auto tree = ExactCoefficients(samples, level);
    if (!tree.ok()) return {false, std::string(tree.status().message())};
    EstimatorConfig config{Eps(1.0)};
    config.max_level = level;
    config.perturbation = PerturbationMode::kNonPrivate;
    config.postprocess = false;
    const auto hook = Estimate(samples, config);
    if (!hook.ok()) return {false, std::string(hook.status().message())};
    const int grid = 1 << (level + 1);
    const StepCdf exact = *CdfOf(ReconstructPdf(*tree), grid);
    const StepCdf via_estimator = *CdfOf(*hook, grid);
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k <= grid; ++k) {
      const double x = double(k) / grid;
      const double empirical =
          double(std::upper_bound(sorted.begin(), sorted.end(), x) -
                 sorted.begin()) / double(n);
      worst = std::max({worst, std::abs(exact.knots()[k] - empirical),
                        std::abs(via_estimator.knots()[k] - empirical)});
    }
  }
  return {worst <= 1e-12,
          absl::StrFormat("200 datasets, max |F_J - F_emp| at dyadic points = "
                          "%.3g (tol 1e-12)", worst)};
}

Outcome Criterion4() {
  constexpr int64_t kUsers = 10000;
  constexpr int kReps = 10000;
  Rng data_rng = MakeStream(4, {});
  const std::vector<double> samples =
      GenerateBeta(kUsers, 5, 2, data_rng)->values;
  bool pass = true, corrected_pass = true;
  Outcome out;
  std::vector<std::string> parts;
  for (int level : {1, 3}) {
    const int64_t d = int64_t{1} << level;
    for (double eps : {0.5, 2.0}) {
      const MechanismParams params =
          *DeriveParams(d, OptimalM(d, Eps(eps)), Eps(eps));
      std::vector<EncodedReport> users;
      for (double x : samples) users.push_back(*Encode(x, level));
      const CoefficientTree tree = *ExactCoefficients(samples, level);
      const std::span<const double> exact = tree.level(level);
      FastPerturber perturber(params);
      Rng rng = MakeStream(4, {static_cast<uint32_t>(level),
                               static_cast<uint32_t>(eps * 10)});
      std::vector<double> sum(d, 0.0), sum_sq(d, 0.0);
      for (int r = 0; r < kReps; ++r) {
        LevelAccumulator acc(d);
        for (const EncodedReport& v : users) {
          perturber.Perturb(v, rng, [&](int64_t k, int s) { acc.Add(k, s); });
          acc.CountReport();
        }
        const std::vector<double> a = *acc.Coefficients(params);
        for (int64_t k = 0; k < d; ++k) {
          const double dev = a[k] - exact[k];
          sum[k] += dev;
          sum_sq[k] += dev * dev;
        }
      }
      double empirical = 0.0;
      for (int64_t k = 0; k < d; ++k) {
        const double mean = sum[k] / kReps;
        empirical += (sum_sq[k] - kReps * mean * mean) / (kReps - 1);
      }
      const LevelVariance v = ComputeLevelVariance(params, kUsers);
      const double single_q = empirical / v.conditional_single_q - 1.0;
      const double corrected = empirical / v.conditional - 1.0;
      pass &= std::abs(single_q) <= 0.05;
      corrected_pass &= std::abs(corrected) <= 0.05;
      parts.push_back(absl::StrFormat("d=%d eps=%g m=%d: %+.1f%%", d, eps,
                                      params.m, 100 * single_q));
      out.notes.push_back(absl::StrFormat(
          "d=%d eps=%g: empirical %.5g, single-q form %.5g (%+.1f%%), "
          "2q form %.5g (%+.1f%%)",
          d, eps, empirical, v.conditional_single_q, 100 * single_q,
          v.conditional, 100 * corrected));
    }
  }
  out.pass = pass;
  out.detail = absl::StrCat("empirical vs single-q closed form (tol 5%): ",
                            absl::StrJoin(parts, ", "));
  out.notes.push_back(absl::StrCat(
      "off-support coordinates are +1 or -1 with probability q each, so the "
      "closed form with 2q in place of q ",
      corrected_pass ? "matches within 5% in every case"
                     : "also misses 5% in some case"));
  return out;
}

Outcome Criterion5() {
  constexpr int64_t kUsers = 100000;
  constexpr int kTrials = 200;
  Rng data_rng = MakeStream(5, {});
  const std::vector<double> samples =
      GenerateBeta(kUsers, 5, 2, data_rng)->values;
  const int level = SelectJ(kUsers);
  const CoefficientTree exact = *ExactCoefficients(samples, level);
  const size_t size = exact.size();
  std::vector<double> sum(size, 0.0), sum_sq(size, 0.0);
  for (int t = 0; t < kTrials; ++t) {
    EstimatorConfig config{Eps(1.0)};
    config.seed = TrialSeed(5, "wavelet", 1.0, t);
    config.postprocess = false;
    const auto result = EstimateDistribution(samples, config);
    if (!result.ok()) return {false, std::string(result.status().message())};
    for (size_t i = 0; i < size; ++i) {
      const double dev = result->raw.values()[i] - exact.values()[i];
      sum[i] += dev;
      sum_sq[i] += dev * dev;
    }
  }
  const boost::math::normal_distribution<double> normal;
  const double bonferroni = boost::math::quantile(
      boost::math::complement(normal, 0.001 / (2.0 * double(size))));
  int outside = 0, outside_bonferroni = 0;
  double worst = 0.0, z_squares = 0.0;
  for (size_t i = 0; i < size; ++i) {
    const double mean = sum[i] / kTrials;
    const double var = (sum_sq[i] - kTrials * mean * mean) / (kTrials - 1);
    const double z = mean / std::sqrt(var / kTrials);
    worst = std::max(worst, std::abs(z));
    z_squares += z * z;
    outside += std::abs(z) > 3.0;
    outside_bonferroni += std::abs(z) > bonferroni;
  }
  const boost::math::chi_squared_distribution<double> chi2(static_cast<double>(size));
  const double p = boost::math::cdf(boost::math::complement(chi2, z_squares));
  Outcome out;
  out.pass = outside == 0;
  out.detail = absl::StrFormat(
      "%d of %d coefficients beyond 3 SE (max |z| = %.2f; %.2f expected "
      "beyond 3 SE by chance)",
      outside, size, worst, double(size) * 0.0027);
  out.notes.push_back(absl::StrFormat(
      "familywise 0.001 band (|z| <= %.2f): %d beyond; sum z^2 = %.1f on %d "
      "dof, p = %.3f",
      bonferroni, outside_bonferroni, z_squares, size, p));
  return out;
}

ExperimentSpec BetaSpec(std::vector<double> epsilons, int reps,
                        uint64_t seed) {
  ExperimentSpec spec;
  spec.dataset.kind = DatasetSpec::Kind::kBeta;
  spec.dataset.n = 100000;
  spec.epsilons = std::move(epsilons);
  spec.repetitions = reps;
  spec.seed = seed;
  spec.threads = Threads();
  spec.timing = false;
  return spec;
}

Outcome Criterion6() {
  ExperimentSpec spec = BetaSpec({0.5, 1.0, 2.0}, 100, 6);
  spec.sweep_min_j = 1;
  spec.sweep_max_j = 10;
  const auto sweep = JSweep(spec);
  if (!sweep.ok()) return {false, std::string(sweep.status().message())};
  const auto automatic = Run(spec);
  if (!automatic.ok()) return {false, std::string(automatic.status().message())};
  Outcome out;
  out.pass = true;
  double tightest = 0.0;
  for (const JSweepRow& row : *sweep) {
    out.pass &= row.mean <= row.bound;
    tightest = std::max(tightest, row.mean / row.bound);
  }
  const int auto_j = SelectJ(spec.dataset.n);
  for (const ResultRow& row : *automatic) {
    const double bound = *ComputeBound(spec.dataset.n, auto_j, Eps(row.epsilon));
    out.pass &= row.mean <= bound;
    tightest = std::max(tightest, row.mean / bound);
    out.notes.push_back(absl::StrFormat("auto J=%d eps=%g: mean W %.5f, bound %.5f",
                                        auto_j, row.epsilon, row.mean, bound));
  }
  for (double eps : spec.epsilons) {
    std::string line = absl::StrFormat("eps=%g J:W/bound", eps);
    for (const JSweepRow& row : *sweep) {
      if (row.epsilon == eps) {
        absl::StrAppendFormat(&line, " %d:%.4f/%.4f", row.j, row.mean, row.bound);
      }
    }
    out.notes.push_back(line);
  }
  out.detail = absl::StrFormat(
      "30 (eps, J) sweep cells + 3 auto-J runs, max mean W / bound = %.3f", tightest);
  return out;
}

Outcome Criterion7() {
  ExperimentSpec beta = BetaSpec({1.0, 2.0}, 20, 7);
  beta.methods.clear();
  for (const char* name :
       {"wavelet", "binning-8", "binning-16", "binning-32", "binning-64"}) {
    beta.methods.push_back(*MethodSpec::Parse(name));
  }
  const auto beta_rows = Run(beta);
  if (!beta_rows.ok()) return {false, std::string(beta_rows.status().message())};

  ExperimentSpec square = BetaSpec({4.0}, 20, 7);
  square.dataset.kind = DatasetSpec::Kind::kSquareWave;
  square.dataset.h = 1.0 / 16;
  square.methods = {*MethodSpec::Parse("wavelet"), *MethodSpec::Parse("binning-8")};
  const auto square_rows = Run(square);
  if (!square_rows.ok()) return {false, std::string(square_rows.status().message())};

  Outcome out;
  out.pass = true;
  std::vector<std::string> parts;
  for (double eps : beta.epsilons) {
    double wavelet = 0.0, best_binning = INFINITY;
    std::string best_name;
    for (const ResultRow& row : *beta_rows) {
      if (row.epsilon != eps) continue;
      if (row.method == "wavelet") {
        wavelet = row.mean;
      } else if (row.mean < best_binning) {
        best_binning = row.mean;
        best_name = row.method;
      }
    }
    out.pass &= wavelet < best_binning;
    parts.push_back(absl::StrFormat("(a) eps=%g wavelet %.5f vs best %s %.5f",
                                    eps, wavelet, best_name, best_binning));
  }
  double wavelet = 0.0, binning = 0.0;
  for (const ResultRow& row : *square_rows) {
    (row.method == "wavelet" ? wavelet : binning) = row.mean;
  }
  out.pass &= wavelet < 0.5 * binning;
  parts.push_back(absl::StrFormat("(b) wavelet %.5f vs 0.5 x binning-8 %.5f",
                                  wavelet, 0.5 * binning));
  out.detail = absl::StrJoin(parts, "; ");
  return out;
}

Outcome Criterion8() {
  Rng rng = MakeStream(8, {});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_integral = 0.0, min_height = INFINITY;
  for (int run = 0; run < 1000; ++run) {
    const auto n = static_cast<int64_t>(std::exp(unit(rng) * std::log(20000.0)));
    const std::vector<double> samples = RandomContinuousData(std::max<int64_t>(n, 1), rng);
    EstimatorConfig config{Eps(std::exp(std::log(0.05) + unit(rng) * std::log(400.0)))};
    config.seed = static_cast<uint64_t>(run);
    if (run % 2) {
      config.max_level = std::uniform_int_distribution<int>(
          0, static_cast<int>(std::min<int64_t>(12, static_cast<int64_t>(samples.size()) - 1)))(rng);
    }
    const auto pdf = Estimate(samples, config);
    if (!pdf.ok()) return {false, std::string(pdf.status().message())};
    worst_integral = std::max(worst_integral, std::abs(pdf->Integral() - 1.0));
    min_height = std::min(min_height, pdf->MinHeight());
  }
  double worst_simplex = 0.0, min_entry = INFINITY;
  std::normal_distribution<double> noise(0.0, 0.5);
  for (int run = 0; run < 1000; ++run) {
    const int64_t d = std::uniform_int_distribution<int64_t>(2, 128)(rng);
    FrequencyVector raw;
    if (run % 2) {
      for (int64_t i = 0; i < d; ++i) raw.values.push_back(1.0 / d + noise(rng));
      raw = NormSub(raw);
    } else {
      const std::vector<double> samples = RandomContinuousData(2000, rng);
      const auto freq = EstimateBinned(samples, d, Eps(0.1 + 5 * unit(rng)), rng);
      if (!freq.ok()) return {false, std::string(freq.status().message())};
      raw = *freq;
    }
    const double total = std::accumulate(raw.values.begin(), raw.values.end(), 0.0);
    worst_simplex = std::max(worst_simplex, std::abs(total - 1.0));
    min_entry = std::min(min_entry, *std::min_element(raw.values.begin(), raw.values.end()));
  }
  return {min_height >= 0.0 && worst_integral <= 1e-9 && min_entry >= 0.0 &&
              worst_simplex <= 1e-9,
          absl::StrFormat("1000 estimates: min height %.3g, max |integral - 1| "
                          "%.3g; 1000 Norm-Sub outputs: min entry %.3g, max "
                          "|sum - 1| %.3g",
                          min_height, worst_integral, min_entry, worst_simplex)};
}

Outcome Criterion9() {
  Outcome out;
  out.pass = true;
  int trials = 0, violations = 0;
  double max_slack_ratio = 0.0, mean_slack_ratio = 0.0;
  for (auto kind : {DatasetSpec::Kind::kBeta, DatasetSpec::Kind::kSquareWave}) {
    ExperimentSpec spec = BetaSpec({0.5, 1.0, 2.0, 4.0}, 5, 9);
    spec.dataset.kind = kind;
    spec.methods.clear();
    for (const char* name :
         {"wavelet", "binning-8", "binning-16", "binning-32", "binning-64"}) {
      spec.methods.push_back(*MethodSpec::Parse(name));
    }
    spec.metrics.clear();
    for (const char* name : {"ks", "wasserstein", "rq-mae(0.2)", "rq-max(0.2)",
                             "rq-mae(0.4)", "rq-max(0.4)"}) {
      spec.metrics.push_back(*MetricSpec::Parse(name));
    }
    spec.range_trials = 1000;
    const auto rows = Run(spec);
    if (!rows.ok()) return {false, std::string(rows.status().message())};
    const double slack = 2.0 / spec.grid_size;
    for (size_t i = 0; i < rows->size(); i += spec.metrics.size()) {
      // Rows for one (method, eps) are contiguous, sorted by metric name.
      auto find = [&](const std::string& metric) -> const ResultRow& {
        for (size_t k = i; k < i + spec.metrics.size(); ++k) {
          if ((*rows)[k].metric == metric) return (*rows)[k];
        }
        return (*rows)[i];
      };
      const ResultRow& ks = find("ks");
      const ResultRow& w = find("wasserstein");
      for (const char* alpha : {"0.2", "0.4"}) {
        const ResultRow& mae = find(absl::StrCat("rq-mae(", alpha, ")"));
        const ResultRow& max = find(absl::StrCat("rq-max(", alpha, ")"));
        for (int t = 0; t < spec.repetitions; ++t) {
          ++trials;
          const double max_bound = 2 * ks.values[t] + slack;
          const double mean_bound = 2 * w.values[t] + slack;
          const bool ok = max.values[t] <= max_bound && mae.values[t] <= mean_bound;
          violations += !ok;
          max_slack_ratio = std::max(max_slack_ratio, max.values[t] / max_bound);
          mean_slack_ratio = std::max(mean_slack_ratio, mae.values[t] / mean_bound);
        }
      }
    }
  }
  out.pass = violations == 0;
  out.detail = absl::StrFormat(
      "%d trials x 1000 intervals, %d violations; max error/bound %.3f (max), "
      "%.3f (mean)",
      trials, violations, max_slack_ratio, mean_slack_ratio);
  return out;
}

Outcome Criterion10() {
  Rng rng = MakeStream(10, {});
  std::vector<double> times;
  std::vector<std::string> parts;
  for (int64_t n : {10000, 40000, 160000}) {
    const std::vector<double> samples = GenerateBeta(n, 5, 2, rng)->values;
    std::vector<double> runs;
    for (int r = 0; r < 5; ++r) {
      EstimatorConfig config{Eps(1.0)};
      config.seed = static_cast<uint64_t>(r);
      const auto start = std::chrono::steady_clock::now();
      const auto pdf = Estimate(samples, config);
      runs.push_back(std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count());
      if (!pdf.ok()) return {false, std::string(pdf.status().message())};
    }
    std::sort(runs.begin(), runs.end());
    times.push_back(runs[2]);
    parts.push_back(absl::StrFormat("n=%d J=%d %.1f ms", n, SelectJ(n), runs[2]));
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  return {r1 < 8 && r2 < 8,
          absl::StrFormat("median of 5: %s; ratios %.2f, %.2f (need < 8)",
                          absl::StrJoin(parts, ", "), r1, r2)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

int Main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-10)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "exact privacy audit", 1, Criterion1},
      {2, "sampler equivalence", 30, Criterion2},
      {3, "dyadic cdf equality without noise", 10, Criterion3},
      {4, "level variance closed form", 120, Criterion4},
      {5, "coefficient unbiasedness", 120, Criterion5},
      {6, "bound domination", 600, Criterion6},
      {7, "ordering against binning", 600, Criterion7},
      {8, "output validity", 60, Criterion8},
      {9, "range-query bounds", 120, Criterion9},
      {10, "complexity sanity", 300, Criterion10},
  };
  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    all_pass &= pass;
    std::cout << absl::StrFormat(
                     "CRITERION %d %s: %s. %s [%.1fs, limit %.0fs%s]",
                     c.id, pass ? "PASS" : "FAIL", c.name, outcome.detail,
                     seconds, c.limit_seconds, in_time ? "" : ", OVER TIME")
              << "\n";
    for (const std::string& note : outcome.notes) {
      std::cout << "  note: " << note << "\n";
    }
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}

}  // namespace
}  // namespace wavelet_ldp

int main(int argc, char** argv) { return wavelet_ldp::Main(argc, argv); }
