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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsl/ensembles.hpp"
#include "qsl/speed_limits.hpp"

namespace qsl {

enum class ExperimentKind { kGue, kSpin, kVerify };
enum class BasisMode { kFixedRandom, kOptimize, kIdentity };

std::string to_string(BasisMode mode);
BasisMode basis_mode_from_string(const std::string& name);

/// Tolerance for "delta >= 0" checks across a sweep.
inline constexpr double kDeltaSlack = 1e-9;
/// Minimum closed-form vs propagator fidelity for spin-chain runs.
inline constexpr double kFidelityFloor = 1.0 - 1e-10;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kGue;
  Index dim = 3;
  SpinChainConfig spin;
  double t_max = 3.0;
  int steps = kDefaultSteps;
  std::vector<std::uint64_t> seeds{0};
  BasisMode basis_mode = BasisMode::kFixedRandom;
  double hbar = 1.0;
  /// Directory for CSV/JSON artifacts. Empty: nothing is written.
  std::string output_path;
  /// Overrides the default initial state / sampled Hamiltonian (gue only).
  std::optional<PureState> initial_state;
  std::optional<Observable> hamiltonian;
  OptimizerConfig optimizer;
};

/// Throws ConfigError on invalid fields.
void validate(const ExperimentConfig& cfg);

/// sqrt(0.1)|0> + sqrt(0.2)|1> + sqrt(0.7)|2> for dim 3; otherwise amplitudes
/// proportional to sqrt(1), sqrt(2), ..., sqrt(dim).
PureState default_initial_state(Index dim);

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<BoundReport> rows;
  std::string csv;
  std::string csv_path;
  double min_delta = 0.0;
  double max_delta = 0.0;
  std::vector<std::string> flags;
  std::optional<std::string> error;
  // Spin runs only.
  std::vector<double> fidelity;
  double max_fidelity_deviation = 0.0;
};

struct ExperimentResult {
  std::vector<RunResult> runs;
  nlohmann::json summary;
  /// Any delta below -kDeltaSlack, a failed run, or a fidelity violation.
  bool violation = false;
};

ExperimentResult run_experiment_gue(const ExperimentConfig& cfg);
ExperimentResult run_experiment_spin(const ExperimentConfig& cfg);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace qsl
