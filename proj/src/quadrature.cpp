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

#include "qsl/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "qsl/errors.hpp"

namespace qsl {

std::string_view to_string(QuadratureScheme scheme) {
  switch (scheme) {
    case QuadratureScheme::kTrapezoid: return "trapezoid";
  }
  return "unknown";
}

std::vector<QuadratureResult> cumulative_integral(std::span<const double> times,
                                                  std::span<const double> values,
                                                  QuadratureScheme scheme) {
  if (scheme != QuadratureScheme::kTrapezoid) {
    fail(ErrorCode::kInvalidArgument, "unsupported quadrature scheme");
  }
  if (times.size() != values.size()) {
    fail(ErrorCode::kDimensionMismatch, "times and values differ in length");
  }
  const std::size_t n = times.size();
  std::vector<QuadratureResult> out(n);
  if (n == 0) return out;
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(values[k]) || !std::isfinite(times[k])) {
      fail(ErrorCode::kNonFiniteSample, "sample " + std::to_string(k) + " is not finite");
    }
    if (k > 0 && !(times[k] > times[k - 1])) {
      fail(ErrorCode::kInvalidArgument, "sample times must be strictly ascending");
    }
  }

  // fine[k]: trapezoid on all samples up to k.
  // coarse[k] for even k: trapezoid on even-indexed samples up to k.
  double fine = 0.0;
  double coarse_even = 0.0;
  double fine_at_last_even = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    fine += 0.5 * (times[k] - times[k - 1]) * (values[k] + values[k - 1]);
    if (k % 2 == 0) {
      coarse_even += 0.5 * (times[k] - times[k - 2]) * (values[k] + values[k - 2]);
      fine_at_last_even = fine;
      out[k] = {fine, std::abs(fine - coarse_even) / 3.0};
    } else {
      // Trailing odd interval is integrated identically by both rules.
      const double tail = fine - fine_at_last_even;
      out[k] = {fine, std::abs(fine - (coarse_even + tail)) / 3.0};
    }
  }
  return out;
}

QuadratureResult integrate_correction(std::span<const Sample> samples, QuadratureScheme scheme) {
  std::vector<double> t(samples.size());
  std::vector<double> v(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    t[k] = samples[k].t;
    v[k] = samples[k].value;
  }
  const auto running = cumulative_integral(t, v, scheme);
  if (running.empty()) return {};
  return running.back();
}

}  // namespace qsl
