// Copyright 2026 The qsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace qsl {

struct Sample {
  double t = 0.0;
  double value = 0.0;
};

enum class QuadratureScheme { kTrapezoid };

std::string_view to_string(QuadratureScheme scheme);

struct QuadratureResult {
  double value = 0.0;
  /// |I_full - I_half| / 3, the Richardson estimate of the trapezoid error
  /// on the full grid. The half grid keeps every other sample; when the
  /// interval count is odd the trailing interval is shared by both rules.
  double error_estimate = 0.0;
};

/// Composite rule over ascending, finite samples. Throws NonFiniteSample on
/// NaN/Inf values and InvalidArgument on unordered times.
QuadratureResult integrate_correction(std::span<const Sample> samples,
                                      QuadratureScheme scheme = QuadratureScheme::kTrapezoid);

/// Running integrals: element k covers [t_0, t_k], with its own error estimate.
std::vector<QuadratureResult> cumulative_integral(std::span<const double> times,
                                                  std::span<const double> values,
                                                  QuadratureScheme scheme = QuadratureScheme::kTrapezoid);

}  // namespace qsl
