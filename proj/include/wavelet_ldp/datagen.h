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

// Synthetic datasets on [0, 1] and ingestion of external numeric files.

#ifndef WAVELET_LDP_DATAGEN_H_
#define WAVELET_LDP_DATAGEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "wavelet_ldp/mechanism.h"

namespace wavelet_ldp {

struct Dataset {
  std::vector<double> values;
  std::string label;
  // Affine map applied on ingestion: value = (raw - offset) / scale.
  double offset = 0.0;
  double scale = 1.0;
};

// Beta(a, b) for integer a, b >= 1: the a-th smallest of a + b - 1 uniforms.
absl::StatusOr<Dataset> GenerateBeta(int64_t n, int a, int b, Rng& rng);

// Density 1.5 where floor(x / h) is odd and 0.5 where it is even, for
// h = 2^-r with r in 1..4.
absl::StatusOr<Dataset> GenerateSquareWave(int64_t n, double h, Rng& rng);

struct IngestOptions {
  std::optional<double> min;
  std::optional<double> max;
  // Keep only raw values strictly below this cap.
  std::optional<double> below;
  // Reject raw values outside [min, max] instead of clamping them.
  bool reject_outside = false;
};

// One decimal number per line; blank lines are skipped. Values are mapped
// affinely onto [0, 1] using the observed or overridden range, then clamped.
absl::StatusOr<Dataset> Ingest(const std::string& path,
                               const IngestOptions& options = {});

// Writes one value per line with round-trip precision.
absl::Status WriteDataset(const Dataset& data, const std::string& path);

}  // namespace wavelet_ldp

#endif  // WAVELET_LDP_DATAGEN_H_
