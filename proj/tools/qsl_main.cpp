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

// Command-line entry point: gue / spin sweeps and the property suite.
//
// Exit codes: 0 success, 1 bound or property violation, 2 configuration error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl/errors.hpp"
#include "qsl/experiments.hpp"
#include "qsl/io.hpp"
#include "qsl/property_suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

/// Accepts "7", "0-49" and comma-separated mixtures such as "0-3,10".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dash = item.find('-');
      if (dash == std::string::npos) {
        seeds.push_back(std::stoull(item));
        continue;
      }
      const std::uint64_t lo = std::stoull(item.substr(0, dash));
      const std::uint64_t hi = std::stoull(item.substr(dash + 1));
      if (hi < lo) qsl::fail(qsl::ErrorCode::kConfigError, "descending seed range: " + item);
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } catch (const std::logic_error&) {
      qsl::fail(qsl::ErrorCode::kConfigError, "malformed seed list entry: " + item);
    }
  }
  if (seeds.empty()) qsl::fail(qsl::ErrorCode::kConfigError, "seed list is empty");
  return seeds;
}

/// "1:2;3" -> {{1,2},{3}}
std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream outer(text);
  std::string block;
  while (std::getline(outer, block, ';')) {
    std::vector<int> members;
    std::stringstream inner(block);
    std::string idx;
    while (std::getline(inner, idx, ':')) {
      try {
        members.push_back(std::stoi(idx));
      } catch (const std::logic_error&) {
        qsl::fail(qsl::ErrorCode::kConfigError, "malformed block list: " + text);
      }
    }
    if (members.empty()) qsl::fail(qsl::ErrorCode::kConfigError, "empty block in: " + text);
    blocks.push_back(std::move(members));
  }
  return blocks;
}

void print_runs(const qsl::ExperimentResult& result) {
  for (const auto& run : result.runs) {
    std::printf("seed=%llu min_delta=%s max_delta=%s flags=%zu%s%s\n",
                static_cast<unsigned long long>(run.seed),
                qsl::io::format_double(run.min_delta).c_str(),
                qsl::io::format_double(run.max_delta).c_str(), run.flags.size(),
                run.error ? " error=" : "", run.error ? run.error->c_str() : "");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum speed limit bounds: tighter-than-Mandelstam-Tamm sweeps and checks"};
  app.require_subcommand(1);

  // Shared experiment flags.
  double t_max = 3.0;
  int steps = qsl::kDefaultSteps;
  std::string seeds_text;
  int n_hamiltonians = 0;
  std::string basis = "fixed-random";
  double hbar = 1.0;
  std::string out;
  std::string config_path;
  int restarts = 8;
  int iterations = 200;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tmax", t_max, "Final evolution time");
    sub->add_option("--steps", steps, "Number of grid points (>= 2)");
    sub->add_option("--seeds", seeds_text, "Seeds: list and/or ranges, e.g. 0-49 or 1,4,7");
    sub->add_option("--basis", basis, "Projection basis")
        ->check(CLI::IsMember({"fixed-random", "optimize", "identity"}));
    sub->add_option("--hbar", hbar, "Reduced Planck constant");
    sub->add_option("--out", out, "Output directory for CSV and JSON artifacts");
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--restarts", restarts, "Optimizer restarts (--basis optimize)");
    sub->add_option("--iterations", iterations, "Optimizer iterations per restart");
  };

  CLI::App* gue = app.add_subcommand("gue", "Random GUE Hamiltonians, one CSV per seed");
  add_common(gue);
  qsl::Index dim = 3;
  std::string state_path;
  std::string hamiltonian_path;
  gue->add_option("--dim", dim, "Hilbert-space dimension");
  gue->add_option("--n-hamiltonians", n_hamiltonians, "Use seeds 0..N-1");
  gue->add_option("--state", state_path, "Initial ket JSON {re, im}");
  gue->add_option("--hamiltonian", hamiltonian_path, "Fixed Hamiltonian JSON {dim, re, im}");

  CLI::App* spin = app.add_subcommand("spin", "Spin chain with block flips, closed form vs propagator");
  add_common(spin);
  int num_spins = 2;
  std::string blocks_text = "1:2";
  double omega0 = 1.0;
  double omega = 1.0;
  spin->add_option("--spins", num_spins, "Number of spins M");
  spin->add_option("--blocks", blocks_text, "Blocks as 1-based indices, e.g. 1:2;3");
  spin->add_option("--omega0", omega0, "Single-spin frequency");
  spin->add_option("--omega", omega, "Block frequency");

  CLI::App* verify = app.add_subcommand("verify", "Randomized invariant suite");
  int trials = 1000;
  std::vector<qsl::Index> dims{2, 3, 4, 5, 6};
  std::uint64_t verify_seed = 0;
  bool inject = false;
  std::string verify_out;
  verify->add_option("--trials", trials, "Trials per dimension");
  verify->add_option("--dims", dims, "Dimensions to test");
  verify->add_option("--seed", verify_seed, "Master seed");
  verify->add_flag("--inject-non-hermitian", inject, "Feed a non-Hermitian operator to the suite");
  verify->add_option("--out", verify_out, "Write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (verify->parsed()) {
      qsl::PropertyConfig pcfg;
      pcfg.trials = trials;
      pcfg.dims = dims;
      pcfg.seed = verify_seed;
      pcfg.inject_non_hermitian = inject;
      const qsl::PropertyReport report = qsl::run_property_suite(pcfg);
      for (const auto& r : report.invariants) {
        // Diagnostics are measurements, not gates.
        const char* status = r.diagnostic ? "INFO" : (r.passed ? "PASS" : "FAIL");
        std::printf("%-32s %s trials=%d rejections=%d worst_slack=%s\n", r.name.c_str(), status,
                    r.trials, r.rejections, qsl::io::format_double(r.worst_slack).c_str());
      }
      const std::string dumped = report.to_json().dump(2) + "\n";
      if (!verify_out.empty()) {
        std::ofstream f(verify_out, std::ios::binary);
        if (!f) qsl::fail(qsl::ErrorCode::kConfigError, "cannot write " + verify_out);
        f << dumped;
      }
      std::printf("overall: %s\n", report.passed ? "PASS" : "FAIL");
      return report.passed ? kExitOk : kExitViolation;
    }

    qsl::ExperimentConfig cfg;
    cfg.t_max = t_max;
    cfg.steps = steps;
    cfg.basis_mode = qsl::basis_mode_from_string(basis);
    cfg.hbar = hbar;
    cfg.output_path = out;
    cfg.optimizer.restarts = restarts;
    cfg.optimizer.iterations = iterations;
    if (!seeds_text.empty()) cfg.seeds = parse_seeds(seeds_text);

    qsl::ExperimentResult result;
    if (gue->parsed()) {
      cfg.kind = qsl::ExperimentKind::kGue;
      cfg.dim = dim;
      if (!config_path.empty()) {
        const qsl::GueConfig file = qsl::io::gue_config_from_json(qsl::io::read_json_file(config_path));
        cfg.dim = file.dim;
        if (seeds_text.empty()) cfg.seeds = {file.seed};
      }
      if (n_hamiltonians > 0 && seeds_text.empty()) {
        cfg.seeds.clear();
        for (int i = 0; i < n_hamiltonians; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(i));
      }
      if (!state_path.empty()) {
        cfg.initial_state = qsl::io::pure_state_from_json(qsl::io::read_json_file(state_path));
      }
      if (!hamiltonian_path.empty()) {
        cfg.hamiltonian = qsl::io::observable_from_json(qsl::io::read_json_file(hamiltonian_path));
      }
      result = qsl::run_experiment_gue(cfg);
    } else {
      cfg.kind = qsl::ExperimentKind::kSpin;
      if (spin->count("--tmax") == 0) cfg.t_max = 2.0;
      if (!config_path.empty()) {
        cfg.spin = qsl::io::spin_config_from_json(qsl::io::read_json_file(config_path));
      } else {
        cfg.spin.num_spins = num_spins;
        cfg.spin.blocks = parse_blocks(blocks_text);
        cfg.spin.omega0 = omega0;
        cfg.spin.omega = omega;
      }
      result = qsl::run_experiment_spin(cfg);
    }
    print_runs(result);
    if (out.empty()) std::cout << result.summary.dump(2) << "\n";
    return result.violation ? kExitViolation : kExitOk;
  } catch (const qsl::QslError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == qsl::ErrorCode::kConfigError ||
                   e.code() == qsl::ErrorCode::kInvalidArgument ||
                   e.code() == qsl::ErrorCode::kBlockIndexOutOfRange
               ? kExitConfig
               : kExitViolation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
}
