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

#include <doctest.h>

#include "qsl/io.hpp"
#include "test_support.hpp"

using namespace qsl;
using qsl_test::code_of;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("matrix JSON round trip") {
    const ComplexMatrix m = qsl_test::sy();
    const json j = io::matrix_to_json(m);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("im")[0][1] == -1.0);
    CHECK((io::matrix_from_json(j) - m).norm() == 0.0);
  }

  TEST_CASE("imaginary part is optional") {
    const json j = json::parse(R"({"dim": 2, "re": [[0, 1], [1, 0]]})");
    CHECK((io::observable_from_json(j).matrix() - qsl_test::sx()).norm() == 0.0);
    const json k = json::parse(R"({"re": [0.6, 0.8]})");
    CHECK(io::pure_state_from_json(k).amplitudes()(1) == Complex(0.8, 0.0));
  }

  TEST_CASE("malformed documents are config errors") {
    CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"dim": 2, "re": [[0, 1]]})")); }) ==
          ErrorCode::kConfigError);
    CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"re": "x"})")); }) == ErrorCode::kConfigError);
    CHECK(code_of([] { io::ket_from_json(json::parse(R"({"re": [1, 0], "im": [0]})")); }) ==
          ErrorCode::kConfigError);
    CHECK(code_of([] { io::read_json_file("/nonexistent/qsl.json"); }) == ErrorCode::kConfigError);
    // Structurally fine but not Hermitian: the physics check still applies.
    CHECK(code_of([] { io::observable_from_json(json::parse(R"({"dim": 2, "re": [[0, 1], [0, 0]]})")); }) ==
          ErrorCode::kNonHermitianInput);
  }

  TEST_CASE("config files") {
    const GueConfig g = io::gue_config_from_json(json::parse(R"({"dim": 5, "seed": 12})"));
    CHECK(g.dim == 5);
    CHECK(g.seed == 12);
    const SpinChainConfig s = io::spin_config_from_json(
        json::parse(R"({"M": 3, "blocks": [[1, 2], [3]], "omega0": 0.5, "omega": 2})"));
    CHECK(s.num_spins == 3);
    CHECK(s.blocks.size() == 2);
    CHECK(s.omega == 2.0);
    CHECK(code_of([] { io::gue_config_from_json(json::parse(R"({"dim": 3})")); }) == ErrorCode::kConfigError);
    CHECK(code_of([] { io::spin_config_from_json(json::parse(R"({"M": 2, "blocks": [[1, 5]], "omega0": 1, "omega": 1})")); }) ==
          ErrorCode::kConfigError);
  }

  TEST_CASE("CSV formatting") {
    CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(-2.5e-10) == "-2.5e-10");
    BoundReport r;
    r.tau_actual = 0.5;
    r.tau_mt = 0.25;
    r.tau_tqsl = 0.3;
    r.delta = 0.05;
    r.quadrature.bound_error = 1e-7;
    r.validity_clean = false;
    CHECK(io::bound_csv_row(r) == "0.5,0.25,0.3,0.05,1e-07,flagged");
    const std::string csv = io::bound_csv({r});
    CHECK(csv == std::string(io::kBoundCsvHeader) + "\n0.5,0.25,0.3,0.05,1e-07,flagged\n");
    const json j = io::to_json(r);
    CHECK(j.at("validity") == "flagged");
    CHECK(j.at("delta") == 0.05);
  }
}
