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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "qsl/experiments.hpp"
#include "qsl/io.hpp"
#include "test_support.hpp"

using namespace qsl;
using qsl_test::code_of;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qsl_unit_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig small_gue() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kGue;
  cfg.dim = 3;
  cfg.t_max = 1.5;
  cfg.steps = 16;
  cfg.seeds = {0, 1};
  return cfg;
}

}  // namespace

TEST_SUITE("experiments") {
  TEST_CASE("default initial state") {
    const PureState psi = default_initial_state(3);
    CHECK(std::norm(psi.amplitudes()(0)) == doctest::Approx(0.1));
    CHECK(std::norm(psi.amplitudes()(1)) == doctest::Approx(0.2));
    CHECK(std::norm(psi.amplitudes()(2)) == doctest::Approx(0.7));
    CHECK(std::norm(default_initial_state(4).amplitudes()(3)) == doctest::Approx(0.4));
  }

  TEST_CASE("config validation") {
    ExperimentConfig cfg = small_gue();
    cfg.steps = 1;
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::kConfigError);
    cfg = small_gue();
    cfg.t_max = -1.0;
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::kConfigError);
    cfg = small_gue();
    cfg.seeds.clear();
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::kConfigError);
    cfg = small_gue();
    cfg.hbar = 0.0;
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::kConfigError);
    CHECK(code_of([] { basis_mode_from_string("spiral"); }) == ErrorCode::kConfigError);
    CHECK(basis_mode_from_string("optimize") == BasisMode::kOptimize);
    CHECK(to_string(BasisMode::kFixedRandom) == "fixed-random");
  }

  TEST_CASE("GUE sweep matches the golden CSV") {
    const ExperimentResult r = run_experiment_gue(small_gue());
    REQUIRE(r.runs.size() == 2);
    CHECK(!r.violation);
    const std::string golden = slurp(fs::path(QSL_GOLDEN_DIR) / "gue_seed0_d3_t1.5_n16.csv");
    REQUIRE(!golden.empty());
    CHECK(r.runs[0].csv == golden);
  }

  TEST_CASE("artifacts are byte-identical across reruns and ordered by seed") {
    ExperimentConfig cfg = small_gue();
    cfg.seeds = {5, 2, 9};
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    cfg.output_path = a.string();
    const ExperimentResult ra = run_experiment_gue(cfg);
    cfg.output_path = b.string();
    run_experiment_gue(cfg);
    for (const char* name : {"gue_seed2.csv", "gue_seed5.csv", "gue_seed9.csv"}) {
      CHECK(slurp(a / name) == slurp(b / name));
      CHECK(!slurp(a / name).empty());
    }
    CHECK(ra.runs[0].seed == 2);
    CHECK(ra.runs[2].seed == 9);
    const auto summary = io::read_json_file((a / "gue_summary.json").string());
    CHECK(summary.at("runs").size() == 3);
    CHECK(summary.at("runs")[0].at("seed") == 2);
    CHECK(summary.at("config").at("dim") == 3);
    CHECK(summary.at("runs")[1].contains("min_delta"));
    CHECK(summary.at("runs")[1].contains("flags"));
  }

  TEST_CASE("CSV schema") {
    const ExperimentResult r = run_experiment_gue(small_gue());
    const std::string& csv = r.runs[1].csv;
    CHECK(csv.rfind("t,tau_mt,tau_tqsl,delta,quad_error,validity\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  }

  TEST_CASE("a failing run is quarantined and flagged as a violation") {
    ExperimentConfig cfg = small_gue();
    // The initial state is an eigenstate: Delta H = 0 and the bound is undefined.
    cfg.hamiltonian = Observable(ComplexMatrix::Identity(3, 3));
    const ExperimentResult r = run_experiment_gue(cfg);
    REQUIRE(r.runs.size() == 2);
    CHECK(r.violation);
    CHECK(r.runs[0].error.has_value());
    CHECK(r.summary.at("runs")[0].at("flags")[0] == "error");
  }

  TEST_CASE("spin experiment: dominance and closed-form fidelity") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::kSpin;
    cfg.t_max = 2.0;
    cfg.steps = 200;
    const ExperimentResult r = run_experiment_spin(cfg);
    REQUIRE(r.runs.size() == 1);
    CHECK(!r.violation);
    CHECK(r.runs[0].rows.front().delta == 0.0);
    CHECK(r.runs[0].min_delta >= -1e-9);
    CHECK(r.runs[0].max_fidelity_deviation < 1e-10);
    CHECK(r.runs[0].fidelity.size() == 200);
  }

  TEST_CASE("identity and optimized bases") {
    ExperimentConfig cfg = small_gue();
    cfg.seeds = {3};
    cfg.basis_mode = BasisMode::kIdentity;
    const ExperimentResult id = run_experiment_gue(cfg);
    cfg.basis_mode = BasisMode::kOptimize;
    cfg.optimizer.restarts = 2;
    cfg.optimizer.iterations = 20;
    const ExperimentResult opt = run_experiment_gue(cfg);
    CHECK(!id.violation);
    CHECK(!opt.violation);
    CHECK(opt.runs[0].rows.back().basis_id.rfind("optimized:", 0) == 0);
  }
}
