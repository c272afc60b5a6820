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

#include "wavelet_ldp/datagen.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace wavelet_ldp {

absl::StatusOr<Dataset> GenerateBeta(int64_t n, int a, int b, Rng& rng) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (a < 1 || b < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("Beta parameters must be integers >= 1, got ", a, ", ", b));
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> draws(static_cast<size_t>(a + b - 1));
  Dataset out;
  out.label = absl::StrCat("beta(", a, ",", b, ")");
  out.values.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    for (double& u : draws) u = unit(rng);
    std::nth_element(draws.begin(), draws.begin() + (a - 1), draws.end());
    out.values.push_back(draws[static_cast<size_t>(a - 1)]);
  }
  return out;
}

absl::StatusOr<Dataset> GenerateSquareWave(int64_t n, double h, Rng& rng) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  int strips = 0;
  for (int r = 1; r <= 4; ++r) {
    if (h == std::exp2(-r)) strips = 1 << r;
  }
  if (strips == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("h = ", h, " must be one of 1/2, 1/4, 1/8, 1/16"));
  }
  // Odd strips carry mass 1.5 h, even strips 0.5 h.
  std::vector<double> weights(static_cast<size_t>(strips));
  for (int k = 0; k < strips; ++k) weights[k] = (k % 2 == 1) ? 1.5 : 0.5;
  std::discrete_distribution<int> strip(weights.begin(), weights.end());
  std::uniform_real_distribution<double> within(0.0, 1.0);
  Dataset out;
  out.label = absl::StrCat("squarewave(", h, ")");
  out.values.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    const int k = strip(rng);
    out.values.push_back((k + within(rng)) * h);
  }
  return out;
}

absl::StatusOr<Dataset> Ingest(const std::string& path,
                               const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<double> raw;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const absl::string_view text = absl::StripAsciiWhitespace(line);
    if (text.empty()) continue;
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc() || end != text.data() + text.size() ||
        !std::isfinite(value)) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", line_number, ": not a number: '", text, "'"));
    }
    if (options.below && !(value < *options.below)) continue;
    raw.push_back(value);
  }
  if (in.bad()) return absl::DataLossError(absl::StrCat("error reading ", path));
  if (raw.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(path, " has no values"));
  }
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = options.min.value_or(*lo_it);
  const double hi = options.max.value_or(*hi_it);
  if (!(hi > lo)) {
    return absl::InvalidArgumentError(
        absl::StrCat("degenerate range [", lo, ", ", hi, "] in ", path));
  }
  if (options.reject_outside) {
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] < lo || raw[i] > hi) {
        return absl::OutOfRangeError(absl::StrCat(
            path, ": value ", raw[i], " outside [", lo, ", ", hi, "]"));
      }
    }
  }
  Dataset out;
  out.label = path;
  out.offset = lo;
  out.scale = hi - lo;
  out.values.reserve(raw.size());
  for (double v : raw) {
    out.values.push_back(std::clamp((v - lo) / (hi - lo), 0.0, 1.0));
  }
  return out;
}

absl::Status WriteDataset(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  char buffer[64];
  for (double v : data.values) {
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    out.write(buffer, end - buffer);
    out.put('\n');
  }
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

}  // namespace wavelet_ldp
