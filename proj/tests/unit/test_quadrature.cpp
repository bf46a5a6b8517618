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

#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "qsl/quadrature.hpp"
#include "test_support.hpp"

using namespace qsl;
using qsl_test::code_of;

namespace {

std::vector<Sample> sample(double (*f)(double), double a, double b, int intervals) {
  std::vector<Sample> out;
  for (int k = 0; k <= intervals; ++k) {
    const double t = a + (b - a) * k / intervals;
    out.push_back({t, f(t)});
  }
  return out;
}

double square(double x) { return x * x; }
double constant(double) { return 2.5; }

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("trapezoid on x^2 has the textbook error, and Richardson recovers it") {
    // T_h = 1/3 + h^2/6 on [0, 1]; |T_h - T_2h| / 3 = h^2/6.
    const int n = 100;
    const double h = 1.0 / n;
    const auto samples = sample(square, 0.0, 1.0, n);
    const QuadratureResult r = integrate_correction(samples);
    CHECK(r.value == doctest::Approx(1.0 / 3.0 + h * h / 6.0).epsilon(1e-13));
    CHECK(r.error_estimate == doctest::Approx(h * h / 6.0).epsilon(1e-8));
  }

  TEST_CASE("linear and constant integrands are exact with zero error estimate") {
    for (int n : {1, 2, 7, 10}) {
      const auto samples = sample(constant, 0.0, 3.0, n);
      const QuadratureResult r = integrate_correction(samples);
      CHECK(r.value == doctest::Approx(7.5).epsilon(1e-14));
      CHECK(r.error_estimate < 1e-13);
    }
  }

  TEST_CASE("cumulative integral ends at the full integral") {
    std::vector<double> t;
    std::vector<double> v;
    for (int k = 0; k <= 40; ++k) {
      t.push_back(0.05 * k);
      v.push_back(std::sin(t.back()));
    }
    const auto cum = cumulative_integral(t, v);
    REQUIRE(cum.size() == t.size());
    CHECK(cum.front().value == 0.0);
    CHECK(cum.back().value == doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-3));
    std::vector<Sample> s;
    for (std::size_t k = 0; k < t.size(); ++k) s.push_back({t[k], v[k]});
    CHECK(cum.back().value == doctest::Approx(integrate_correction(s).value).epsilon(1e-14));
    // Estimated error tracks the actual error.
    const double actual = std::abs(cum.back().value - (1.0 - std::cos(2.0)));
    CHECK(cum.back().error_estimate == doctest::Approx(actual).epsilon(0.05));
    for (std::size_t k = 1; k < cum.size(); ++k) CHECK(cum[k].value >= cum[k - 1].value);
  }

  TEST_CASE("bad input") {
    std::vector<Sample> s{{0.0, 1.0}, {0.1, std::numeric_limits<double>::quiet_NaN()}};
    CHECK(code_of([&] { integrate_correction(s); }) == ErrorCode::kNonFiniteSample);
    std::vector<Sample> unordered{{0.0, 1.0}, {0.2, 1.0}, {0.1, 1.0}};
    CHECK(code_of([&] { integrate_correction(unordered); }) == ErrorCode::kInvalidArgument);
    std::vector<double> t{0.0, 1.0};
    std::vector<double> v{1.0};
    CHECK(code_of([&] { cumulative_integral(t, v); }) == ErrorCode::kDimensionMismatch);
    CHECK(to_string(QuadratureScheme::kTrapezoid) == "trapezoid");
  }
}
