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

#include "qsl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>

#include "qsl/errors.hpp"
#include "qsl/io.hpp"

namespace qsl {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) {
  fail(ErrorCode::kConfigError, msg);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kConfigError, "cannot write " + path.string());
  out << text;
}

void summarize_rows(RunResult& run) {
  run.min_delta = std::numeric_limits<double>::infinity();
  run.max_delta = -std::numeric_limits<double>::infinity();
  for (const auto& r : run.rows) {
    run.min_delta = std::min(run.min_delta, r.delta);
    run.max_delta = std::max(run.max_delta, r.delta);
  }
  const auto flagged = std::find_if(run.rows.begin(), run.rows.end(),
                                    [](const BoundReport& r) { return !r.validity_clean; });
  if (flagged != run.rows.end()) {
    run.flags.push_back("outside_derivation_validity_from_t=" + io::format_double(flagged->tau_actual));
  }
  if (run.min_delta < -kDeltaSlack) run.flags.push_back("negative_delta");
}

OrthonormalBasis choose_basis(const ExperimentConfig& cfg, const Observable& h,
                              const PureState& psi0, std::uint64_t seed, std::string& basis_id) {
  switch (cfg.basis_mode) {
    case BasisMode::kIdentity:
      basis_id = "identity";
      return OrthonormalBasis::identity(h.dim());
    case BasisMode::kFixedRandom:
      basis_id = "gue-eigenbasis";
      return random_basis(h.dim(), derive_seed(seed, 1));
    case BasisMode::kOptimize: {
      OptimizerConfig opt = cfg.optimizer;
      opt.seed = derive_seed(seed, 2);
      OptimizationResult res = optimize_basis(h, psi0, cfg.t_max, cfg.steps, opt, cfg.hbar);
      basis_id = res.report.basis_id;
      return res.basis;
    }
  }
  return OrthonormalBasis::identity(h.dim());
}

json run_to_json(const RunResult& run, bool spin) {
  json j = {{"seed", run.seed},
            {"min_delta", run.rows.empty() ? json(nullptr) : json(run.min_delta)},
            {"max_delta", run.rows.empty() ? json(nullptr) : json(run.max_delta)},
            {"flags", run.flags}};
  if (!run.csv_path.empty()) j["csv"] = run.csv_path;
  if (run.error) j["error"] = *run.error;
  if (spin) j["max_fidelity_deviation"] = run.max_fidelity_deviation;
  return j;
}

template <typename RunOne>
ExperimentResult run_batch(const ExperimentConfig& cfg, const std::string& prefix, bool spin,
                           RunOne run_one) {
  validate(cfg);
  if (!cfg.output_path.empty()) fs::create_directories(cfg.output_path);

  std::vector<std::future<RunResult>> futures;
  futures.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds) {
    futures.push_back(std::async(std::launch::async, [&, seed] {
      RunResult run;
      run.seed = seed;
      try {
        run_one(run);
        summarize_rows(run);
        run.csv = io::bound_csv(run.rows);
        if (!cfg.output_path.empty()) {
          const fs::path path = fs::path(cfg.output_path) / (prefix + "_seed" + std::to_string(seed) + ".csv");
          write_text(path, run.csv);
          run.csv_path = path.string();
        }
      } catch (const std::exception& e) {
        run.error = e.what();
        run.flags.push_back("error");
      }
      return run;
    }));
  }

  ExperimentResult result;
  for (auto& f : futures) result.runs.push_back(f.get());
  std::sort(result.runs.begin(), result.runs.end(),
            [](const RunResult& a, const RunResult& b) { return a.seed < b.seed; });

  json runs = json::array();
  for (const auto& run : result.runs) {
    runs.push_back(run_to_json(run, spin));
    if (run.error || (!run.rows.empty() && run.min_delta < -kDeltaSlack)) result.violation = true;
    if (spin && run.max_fidelity_deviation > 1.0 - kFidelityFloor) result.violation = true;
  }
  result.summary = {{"config", config_to_json(cfg)}, {"runs", std::move(runs)},
                    {"violation", result.violation}};
  if (!cfg.output_path.empty()) {
    write_text(fs::path(cfg.output_path) / (prefix + "_summary.json"), result.summary.dump(2) + "\n");
  }
  return result;
}

}  // namespace

std::string to_string(BasisMode mode) {
  switch (mode) {
    case BasisMode::kFixedRandom: return "fixed-random";
    case BasisMode::kOptimize: return "optimize";
    case BasisMode::kIdentity: return "identity";
  }
  return "unknown";
}

BasisMode basis_mode_from_string(const std::string& name) {
  if (name == "fixed-random") return BasisMode::kFixedRandom;
  if (name == "optimize") return BasisMode::kOptimize;
  if (name == "identity") return BasisMode::kIdentity;
  config_error("unknown basis mode '" + name + "'");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.steps < 2) config_error("steps must be >= 2");
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) config_error("t_max must be positive");
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar)) config_error("hbar must be positive");
  if (cfg.seeds.empty()) config_error("at least one seed is required");
  if (cfg.kind == ExperimentKind::kGue) {
    const Index dim = cfg.hamiltonian ? cfg.hamiltonian->dim() : cfg.dim;
    if (dim < 2) config_error("dim must be >= 2");
    if (cfg.initial_state && cfg.initial_state->dim() != dim) {
      config_error("initial state dimension does not match dim");
    }
  }
  if (cfg.kind == ExperimentKind::kSpin) {
    try {
      validate(cfg.spin);
    } catch (const QslError& e) {
      config_error(e.what());
    }
  }
  if (cfg.basis_mode == BasisMode::kOptimize &&
      (cfg.optimizer.restarts < 1 || cfg.optimizer.iterations < 0)) {
    config_error("optimizer needs restarts >= 1 and iterations >= 0");
  }
}

PureState default_initial_state(Index dim) {
  ComplexVector v(dim);
  if (dim == 3) {
    v << std::sqrt(0.1), std::sqrt(0.2), std::sqrt(0.7);
    return PureState::normalized(v);
  }
  for (Index k = 0; k < dim; ++k) v(k) = std::sqrt(static_cast<double>(k + 1));
  return PureState::normalized(v);
}

json config_to_json(const ExperimentConfig& cfg) {
  json j = {{"kind", cfg.kind == ExperimentKind::kGue    ? "gue"
                     : cfg.kind == ExperimentKind::kSpin ? "spin"
                                                         : "verify"},
            {"t_max", cfg.t_max},
            {"steps", cfg.steps},
            {"seeds", cfg.seeds},
            {"basis", to_string(cfg.basis_mode)},
            {"hbar", cfg.hbar}};
  if (cfg.kind == ExperimentKind::kGue) {
    j["dim"] = cfg.hamiltonian ? cfg.hamiltonian->dim() : cfg.dim;
    const PureState psi0 = cfg.initial_state ? *cfg.initial_state : default_initial_state(j["dim"].get<Index>());
    j["initial_state"] = io::ket_to_json(psi0.amplitudes());
    if (cfg.hamiltonian) j["hamiltonian"] = io::matrix_to_json(cfg.hamiltonian->matrix());
  }
  if (cfg.kind == ExperimentKind::kSpin) {
    j["spin"] = {{"M", cfg.spin.num_spins},
                 {"blocks", cfg.spin.blocks},
                 {"omega0", cfg.spin.omega0},
                 {"omega", cfg.spin.omega}};
  }
  if (cfg.basis_mode == BasisMode::kOptimize) {
    j["optimizer"] = {{"restarts", cfg.optimizer.restarts},
                      {"iterations", cfg.optimizer.iterations},
                      {"initial_step", cfg.optimizer.initial_step}};
  }
  return j;
}

ExperimentResult run_experiment_gue(const ExperimentConfig& cfg) {
  return run_batch(cfg, "gue", false, [&](RunResult& run) {
    const Observable h = cfg.hamiltonian ? *cfg.hamiltonian : sample_gue({cfg.dim, run.seed});
    const PureState psi0 = cfg.initial_state ? *cfg.initial_state : default_initial_state(h.dim());
    std::string basis_id;
    const OrthonormalBasis basis = choose_basis(cfg, h, psi0, run.seed, basis_id);
    const Trajectory traj = sample_trajectory(h, psi0, cfg.t_max, cfg.steps, cfg.hbar);
    run.rows = tqsl_curve(traj, basis, basis_id);
  });
}

ExperimentResult run_experiment_spin(const ExperimentConfig& cfg) {
  return run_batch(cfg, "spin", true, [&](RunResult& run) {
    SpinChainConfig spin = cfg.spin;
    spin.hbar = cfg.hbar;
    const Observable h = spin_chain_hamiltonian(spin);
    const PureState psi0 = PureState::basis_state(h.dim(), 0);
    const std::vector<double> times = uniform_grid(cfg.t_max, cfg.steps);
    const Propagator prop(h, cfg.hbar);

    std::vector<PureState> closed;
    closed.reserve(times.size());
    run.fidelity.reserve(times.size());
    for (double t : times) {
      PureState s = spin_chain_evolved_state(spin, psi0, t);
      const PureState reference = prop.evolve(psi0, t);
      const double fid = std::norm(reference.amplitudes().dot(s.amplitudes()));
      run.fidelity.push_back(fid);
      run.max_fidelity_deviation = std::max(run.max_fidelity_deviation, 1.0 - fid);
      closed.push_back(std::move(s));
    }
    if (run.max_fidelity_deviation > 1.0 - kFidelityFloor) run.flags.push_back("fidelity_violation");

    std::string basis_id;
    const OrthonormalBasis basis = choose_basis(cfg, h, psi0, run.seed, basis_id);
    const Trajectory traj = trajectory_from_states(h, cfg.hbar, times, std::move(closed));
    run.rows = tqsl_curve(traj, basis, basis_id);

    if (!cfg.output_path.empty()) {
      std::string csv = "t,fidelity\n";
      for (std::size_t k = 0; k < times.size(); ++k) {
        csv += io::format_double(times[k]) + "," + io::format_double(run.fidelity[k]) + "\n";
      }
      write_text(fs::path(cfg.output_path) / ("spin_seed" + std::to_string(run.seed) + "_fidelity.csv"),
                 csv);
    }
  });
}

}  // namespace qsl
