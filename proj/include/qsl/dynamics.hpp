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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "qsl/state.hpp"

namespace qsl {

/// exp(-i H t / hbar) for a fixed, time-independent H. The spectral
/// decomposition is computed once and reused for every time.
class Propagator {
 public:
  explicit Propagator(const Observable& hamiltonian, double hbar = 1.0);

  ComplexMatrix unitary(double t) const;
  PureState evolve(const PureState& psi0, double t) const;
  DensityMatrix evolve(const DensityMatrix& rho0, double t) const;

  const Observable& hamiltonian() const noexcept { return hamiltonian_; }
  double hbar() const noexcept { return hbar_; }

 private:
  Observable hamiltonian_;
  double hbar_;
  linalg::EigenDecomposition eig_;
};

PureState evolve_pure(const Observable& h, const PureState& psi0, double t, double hbar = 1.0);
DensityMatrix evolve_mixed(const Observable& h, const DensityMatrix& rho0, double t,
                           double hbar = 1.0);

/// |<psi0|psit>| clamped to [0, 1].
double overlap_modulus(const PureState& psi0, const PureState& psit);
/// sqrt(Tr(rho0 rhot) / Tr(rho0^2)) clamped to [0, 1].
double overlap_modulus(const DensityMatrix& rho0, const DensityMatrix& rhot);

/// 2 arccos |<psi0|psit>|, in [0, pi].
double bargmann_angle_pure(const PureState& psi0, const PureState& psit);
/// 2 arccos sqrt(Tr(rho0 rhot) / Tr(rho0^2)), in [0, pi].
double bargmann_angle_mixed(const DensityMatrix& rho0, const DensityMatrix& rhot);

/// Time-sampled evolution on a grid starting at t = 0.
///
/// `valid_until` is the first grid index outside the range where the speed
/// limit derivations apply: the first sample at which the overlap has passed
/// a minimum (the Bargmann angle stops growing), or sin s0 has returned to
/// zero. Samples [0, valid_until) are clean. valid_until == size() means the
/// whole trajectory is clean.
struct Trajectory {
  Observable hamiltonian;
  double hbar = 1.0;
  std::vector<double> times;
  std::variant<std::vector<PureState>, std::vector<DensityMatrix>> states;
  std::vector<double> overlap;
  std::vector<double> s0;
  double delta_h = 0.0;
  std::size_t valid_until = 0;

  std::size_t size() const noexcept { return times.size(); }
  bool is_mixed() const noexcept { return states.index() == 1; }
  bool clean_at(std::size_t k) const noexcept { return k < valid_until; }
  bool fully_clean() const noexcept { return valid_until == times.size(); }

  const std::vector<PureState>& pure_states() const;
  const std::vector<DensityMatrix>& mixed_states() const;

  /// Largest |Delta H(t_k) - Delta H(t_0)| over the grid.
  double delta_h_drift() const;
};

/// {0, t_max/(steps-1), ..., t_max}
std::vector<double> uniform_grid(double t_max, int steps);

Trajectory sample_trajectory(const Observable& h, const PureState& psi0, double t_max, int steps,
                             double hbar = 1.0);
Trajectory sample_trajectory(const Observable& h, const DensityMatrix& rho0, double t_max,
                             int steps, double hbar = 1.0);

/// Builds a trajectory from externally evolved states (for instance a closed
/// form). times must be ascending and start at 0.
Trajectory trajectory_from_states(const Observable& h, double hbar, std::vector<double> times,
                                  std::vector<PureState> states);

/// CSV with header t,s0,overlap,delta_h.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace qsl
