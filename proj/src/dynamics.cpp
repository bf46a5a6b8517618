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

#include "qsl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kSinZero = 1e-8;
constexpr double kOverlapRiseSlack = 1e-12;

void require_dims(Index a, Index b, const char* what) {
  if (a != b) {
    fail(ErrorCode::kDimensionMismatch, std::string(what) + ": dimensions " + std::to_string(a) +
                                            " and " + std::to_string(b) + " differ");
  }
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    fail(ErrorCode::kInvalidArgument, "evolution time must be finite and >= 0");
  }
}

double clamp_unit(double x) {
  return std::clamp(x, 0.0, 1.0);
}

std::size_t first_invalid_index(const std::vector<double>& overlap, const std::vector<double>& s0) {
  for (std::size_t k = 1; k < overlap.size(); ++k) {
    if (overlap[k] > overlap[k - 1] + kOverlapRiseSlack) return k;
    if (std::sin(s0[k]) < kSinZero) return k;
  }
  return overlap.size();
}

template <typename State>
void fill_geometry(Trajectory& traj, const std::vector<State>& states) {
  traj.overlap.resize(states.size());
  traj.s0.resize(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    // The initial state overlaps itself exactly; computing it would leave a
    // few ulps that the arccos and square roots downstream amplify to ~1e-8.
    const double c = k == 0 ? 1.0 : overlap_modulus(states.front(), states[k]);
    traj.overlap[k] = c;
    traj.s0[k] = 2.0 * std::acos(c);
  }
  traj.delta_h = std::sqrt(variance(traj.hamiltonian, states.front()));
  traj.valid_until = first_invalid_index(traj.overlap, traj.s0);
}

void validate_grid(const std::vector<double>& times) {
  if (times.size() < 2) {
    fail(ErrorCode::kInvalidArgument, "a trajectory needs at least two samples");
  }
  if (times.front() != 0.0) {
    fail(ErrorCode::kInvalidArgument, "trajectory times must start at 0");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      fail(ErrorCode::kInvalidArgument, "trajectory times must be strictly ascending");
    }
  }
}

}  // namespace

Propagator::Propagator(const Observable& hamiltonian, double hbar)
    : hamiltonian_(hamiltonian), hbar_(hbar), eig_(linalg::eigh(hamiltonian.matrix())) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    fail(ErrorCode::kInvalidArgument, "hbar must be positive and finite");
  }
}

ComplexMatrix Propagator::unitary(double t) const {
  return linalg::expm_i_hermitian(eig_, t / hbar_);
}

PureState Propagator::evolve(const PureState& psi0, double t) const {
  require_dims(hamiltonian_.dim(), psi0.dim(), "evolve_pure");
  require_time(t);
  ComplexVector out = unitary(t) * psi0.amplitudes();
  // Renormalize away the O(1e-16) drift of a numerically unitary matrix.
  out /= out.norm();
  return PureState(std::move(out));
}

DensityMatrix Propagator::evolve(const DensityMatrix& rho0, double t) const {
  require_dims(hamiltonian_.dim(), rho0.dim(), "evolve_mixed");
  require_time(t);
  const ComplexMatrix u = unitary(t);
  ComplexMatrix out = u * rho0.matrix() * u.adjoint();
  out /= out.trace().real();
  return DensityMatrix(out);
}

PureState evolve_pure(const Observable& h, const PureState& psi0, double t, double hbar) {
  return Propagator(h, hbar).evolve(psi0, t);
}

DensityMatrix evolve_mixed(const Observable& h, const DensityMatrix& rho0, double t, double hbar) {
  return Propagator(h, hbar).evolve(rho0, t);
}

double overlap_modulus(const PureState& psi0, const PureState& psit) {
  require_dims(psi0.dim(), psit.dim(), "overlap");
  return clamp_unit(std::abs(psi0.amplitudes().dot(psit.amplitudes())));
}

double overlap_modulus(const DensityMatrix& rho0, const DensityMatrix& rhot) {
  require_dims(rho0.dim(), rhot.dim(), "overlap");
  const double p0 = purity(rho0);
  const double cross = complex_expectation(rho0.matrix(), rhot).real();
  return std::sqrt(clamp_unit(cross / p0));
}

double bargmann_angle_pure(const PureState& psi0, const PureState& psit) {
  return 2.0 * std::acos(overlap_modulus(psi0, psit));
}

double bargmann_angle_mixed(const DensityMatrix& rho0, const DensityMatrix& rhot) {
  return 2.0 * std::acos(overlap_modulus(rho0, rhot));
}

const std::vector<PureState>& Trajectory::pure_states() const {
  if (is_mixed()) fail(ErrorCode::kInvalidArgument, "trajectory holds density matrices");
  return std::get<0>(states);
}

const std::vector<DensityMatrix>& Trajectory::mixed_states() const {
  if (!is_mixed()) fail(ErrorCode::kInvalidArgument, "trajectory holds pure states");
  return std::get<1>(states);
}

double Trajectory::delta_h_drift() const {
  double worst = 0.0;
  std::visit(
      [&](const auto& list) {
        for (const auto& state : list) {
          const double dh = std::sqrt(variance(hamiltonian, state));
          worst = std::max(worst, std::abs(dh - delta_h));
        }
      },
      states);
  return worst;
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    fail(ErrorCode::kInvalidArgument, "t_max must be positive and finite");
  }
  if (steps < 2) {
    fail(ErrorCode::kInvalidArgument, "steps must be >= 2");
  }
  std::vector<double> times(static_cast<std::size_t>(steps));
  const double dt = t_max / static_cast<double>(steps - 1);
  for (int k = 0; k < steps; ++k) {
    times[static_cast<std::size_t>(k)] = dt * k;
  }
  times.back() = t_max;
  return times;
}

Trajectory sample_trajectory(const Observable& h, const PureState& psi0, double t_max, int steps,
                             double hbar) {
  const Propagator prop(h, hbar);
  std::vector<double> times = uniform_grid(t_max, steps);
  std::vector<PureState> states;
  states.reserve(times.size());
  for (double t : times) {
    states.push_back(t == 0.0 ? psi0 : prop.evolve(psi0, t));
  }
  Trajectory traj{h, hbar, std::move(times), std::move(states), {}, {}, 0.0, 0};
  fill_geometry(traj, std::get<0>(traj.states));
  return traj;
}

Trajectory sample_trajectory(const Observable& h, const DensityMatrix& rho0, double t_max,
                             int steps, double hbar) {
  const Propagator prop(h, hbar);
  std::vector<double> times = uniform_grid(t_max, steps);
  std::vector<DensityMatrix> states;
  states.reserve(times.size());
  for (double t : times) {
    states.push_back(t == 0.0 ? rho0 : prop.evolve(rho0, t));
  }
  Trajectory traj{h, hbar, std::move(times), std::move(states), {}, {}, 0.0, 0};
  fill_geometry(traj, std::get<1>(traj.states));
  return traj;
}

Trajectory trajectory_from_states(const Observable& h, double hbar, std::vector<double> times,
                                  std::vector<PureState> states) {
  validate_grid(times);
  if (times.size() != states.size()) {
    fail(ErrorCode::kDimensionMismatch, "times and states differ in length");
  }
  for (const auto& s : states) require_dims(h.dim(), s.dim(), "trajectory_from_states");
  if (!(hbar > 0.0)) fail(ErrorCode::kInvalidArgument, "hbar must be positive");
  Trajectory traj{h, hbar, std::move(times), std::move(states), {}, {}, 0.0, 0};
  fill_geometry(traj, std::get<0>(traj.states));
  return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "t,s0,overlap,delta_h\n";
  char line[160];
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g\n", trajectory.times[k],
                  trajectory.s0[k], trajectory.overlap[k], trajectory.delta_h);
    out << line;
  }
}

}  // namespace qsl
