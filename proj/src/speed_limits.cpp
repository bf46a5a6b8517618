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

#include "qsl/speed_limits.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "qsl/ensembles.hpp"
#include "qsl/errors.hpp"
#include "qsl/uncertainty.hpp"

namespace qsl {

namespace {

void require_energy_spread(double delta_h) {
  if (!(delta_h > kMinEnergySpread)) {
    fail(ErrorCode::kZeroEnergyVariance,
         "Delta H = " + std::to_string(delta_h) + " (stationary state, bound undefined)");
  }
}

double clamp_unit(double x) {
  return std::clamp(x, 0.0, 1.0);
}

double mean_step(const std::vector<double>& times) {
  if (times.size() < 2) return 0.0;
  return (times.back() - times.front()) / static_cast<double>(times.size() - 1);
}

/// Geodesic term at every sample of a trajectory.
std::vector<double> geodesic_terms(const Trajectory& traj) {
  std::vector<double> out(traj.size());
  if (!traj.is_mixed()) {
    for (std::size_t k = 0; k < traj.size(); ++k) {
      out[k] = traj.hbar * traj.s0[k] / (2.0 * traj.delta_h);
    }
    return out;
  }
  const double p = purity(traj.mixed_states().front());
  const double sqrt_p = std::sqrt(clamp_unit(p));
  const double base = std::acos(sqrt_p);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    // sqrt Tr(rho0 rho_t) = sqrt(P) cos(s0/2)
    out[k] = traj.hbar * (std::acos(clamp_unit(sqrt_p * traj.overlap[k])) - base) / traj.delta_h;
  }
  return out;
}

}  // namespace

double mt_bound_pure(const Trajectory& trajectory, std::size_t index) {
  if (trajectory.is_mixed()) {
    fail(ErrorCode::kInvalidArgument, "mt_bound_pure needs a pure-state trajectory");
  }
  if (index >= trajectory.size()) {
    fail(ErrorCode::kInvalidArgument, "trajectory index out of range");
  }
  require_energy_spread(trajectory.delta_h);
  return trajectory.hbar * trajectory.s0[index] / (2.0 * trajectory.delta_h);
}

double combined_bound_orthogonal(const Observable& h, const PureState& psi0, double hbar) {
  const double mean = expectation(h, psi0);
  if (!(mean > kMinEnergySpread)) {
    fail(ErrorCode::kNonPositiveMeanEnergy,
         "<H> = " + std::to_string(mean) + " (mean-energy term undefined)");
  }
  const double spread = std::sqrt(variance(h, psi0));
  require_energy_spread(spread);
  const double half_pi_hbar = 0.5 * std::numbers::pi * hbar;
  return std::max(half_pi_hbar / spread, half_pi_hbar / mean);
}

double mixed_geodesic_term(const DensityMatrix& rho0, const DensityMatrix& rho_tau, double delta_h,
                           double hbar) {
  if (rho0.dim() != rho_tau.dim()) {
    fail(ErrorCode::kDimensionMismatch, "mixed_geodesic_term: dimensions differ");
  }
  require_energy_spread(delta_h);
  const double overlap = clamp_unit(complex_expectation(rho0.matrix(), rho_tau).real());
  const double p = clamp_unit(purity(rho0));
  return hbar * (std::acos(std::sqrt(overlap)) - std::acos(std::sqrt(p))) / delta_h;
}

CorrectionIntegrand::CorrectionIntegrand(const Trajectory& trajectory)
    : mixed_(trajectory.is_mixed()), times_(trajectory.times) {
  require_energy_spread(trajectory.delta_h);
  const std::size_t n = trajectory.size();
  const Index d = trajectory.hamiltonian.dim();
  const ComplexMatrix& h = trajectory.hamiltonian.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  cross_.resize(n);
  denominators_.resize(n);

  if (!mixed_) {
    const auto& states = trajectory.pure_states();
    const ComplexVector& psi0 = states.front().amplitudes();
    u_.resize(d, static_cast<Index>(n));
    v_.resize(d, static_cast<Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexVector& psi = states[k].amplitudes();
      // A = |psi0><psi0|: A-bar|psi> = c|psi0> - |c|^2 |psi>, c = <psi0|psi>.
      const Complex c = psi0.dot(psi);
      const ComplexVector u = c * psi0 - std::norm(c) * psi;
      const ComplexVector hpsi = h * psi;
      const double mean_h = psi.dot(hpsi).real();
      const ComplexVector v = hpsi - mean_h * psi;
      u_.col(static_cast<Index>(k)) = u;
      v_.col(static_cast<Index>(k)) = v;
      cross_[k] = std::abs(u.dot(v));
      denominators_[k] = std::sin(trajectory.s0[k]);
    }
    prefactor_ = 2.0 / trajectory.delta_h;
    return;
  }

  const auto& states = trajectory.mixed_states();
  const ComplexMatrix& rho0 = states.front().matrix();
  const double p = purity(states.front());
  f_.reserve(n);
  g_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix& rho = states[k].matrix();
    const double mean_a = complex_expectation(rho0, states[k]).real();
    const double mean_h = complex_expectation(h, states[k]).real();
    const ComplexMatrix abar = rho0 - mean_a * id;
    const ComplexMatrix bbar = h - mean_h * id;
    const ComplexMatrix arho = abar * rho;
    f_.push_back(arho * abar);
    g_.push_back(bbar * rho * bbar);
    cross_[k] = std::abs((arho * bbar).trace());
    const double c = trajectory.overlap[k];
    denominators_[k] = c * std::sqrt(std::max(0.0, 1.0 - p * c * c));
  }
  prefactor_ = 1.0 / (std::sqrt(p) * trajectory.delta_h);
}

std::vector<double> CorrectionIntegrand::correction_k(const OrthonormalBasis& basis) const {
  const Index d = mixed_ ? (f_.empty() ? 0 : f_.front().rows()) : u_.rows();
  if (basis.dim() != d) {
    fail(ErrorCode::kDimensionMismatch, "basis dimension does not match the trajectory");
  }
  const std::size_t n = size();
  std::vector<double> k_values(n);
  if (!mixed_) {
    const ComplexMatrix pu = basis.matrix().adjoint() * u_;
    const ComplexMatrix pv = basis.matrix().adjoint() * v_;
    const Eigen::RowVectorXd tighter =
        pu.cwiseAbs().cwiseProduct(pv.cwiseAbs()).colwise().sum();
    for (std::size_t k = 0; k < n; ++k) {
      k_values[k] = clamp_nonnegative(tighter(static_cast<Index>(k)) - cross_[k], "correction K");
    }
    return k_values;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double tighter = detail::mixed_tighter_from_operators(f_[k], g_[k], basis.matrix());
    k_values[k] = clamp_nonnegative(tighter - cross_[k], "correction K");
  }
  return k_values;
}

std::vector<double> CorrectionIntegrand::integrand(const OrthonormalBasis& basis) const {
  std::vector<double> values = correction_k(basis);
  const double floor = mixed_ ? kRadicalFloor : kSinFloor;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double denom = denominators_[k];
    if (denom >= floor) {
      values[k] /= denom;
      continue;
    }
    // t = 0 is the removable 0/0 point (K vanishes quadratically there) and
    // takes the value 0; anywhere else a singular sample with K > 0 is fatal.
    if (k > 0 && values[k] >= kCorrectionFloor) {
      const std::string where = "t = " + std::to_string(times_[k]) +
                                ", K = " + std::to_string(values[k]) +
                                ", denominator = " + std::to_string(denom);
      fail(mixed_ ? ErrorCode::kDenominatorUnderflow : ErrorCode::kSingularIntegrand, where);
    }
    values[k] = 0.0;
  }
  return values;
}

std::vector<BoundReport> tqsl_curve(const Trajectory& trajectory, const OrthonormalBasis& basis,
                                    const std::string& basis_id) {
  const CorrectionIntegrand integrand(trajectory);
  const std::vector<double> values = integrand.integrand(basis);
  const std::vector<QuadratureResult> running = cumulative_integral(trajectory.times, values);
  const std::vector<double> geodesic = geodesic_terms(trajectory);
  const double step = mean_step(trajectory.times);

  std::vector<BoundReport> out(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    BoundReport& r = out[k];
    r.tau_actual = trajectory.times[k];
    r.tau_mt = geodesic[k];
    r.correction_integral = running[k].value;
    r.correction_term = integrand.prefactor() * running[k].value;
    r.tau_tqsl = r.tau_mt + r.correction_term;
    r.delta = r.tau_tqsl - r.tau_mt;
    r.basis_id = basis_id;
    r.validity_clean = trajectory.clean_at(k);
    r.quadrature.scheme = std::string(to_string(QuadratureScheme::kTrapezoid));
    r.quadrature.step = step;
    r.quadrature.integral_error = running[k].error_estimate;
    r.quadrature.bound_error = integrand.prefactor() * running[k].error_estimate;
  }
  return out;
}

namespace {

template <typename State>
BoundReport tqsl_at(const Observable& h, const State& state0, double tau,
                    const OrthonormalBasis& basis, int steps, double hbar) {
  if (!(tau > 0.0)) {
    fail(ErrorCode::kInvalidArgument, "tau must be positive");
  }
  const Trajectory traj = sample_trajectory(h, state0, tau, steps, hbar);
  require_energy_spread(traj.delta_h);
  if (!traj.fully_clean()) {
    fail(ErrorCode::kValidityExceeded,
         "trajectory leaves the validity range at t = " +
             std::to_string(traj.times[traj.valid_until]) + " before tau = " + std::to_string(tau));
  }
  return tqsl_curve(traj, basis, "custom").back();
}

struct RestartOutcome {
  OrthonormalBasis basis;
  double value;
  std::vector<ProbeRecord> probes;
};

struct StartPoint {
  OrthonormalBasis basis;
  std::string label;
};

std::vector<StartPoint> start_points(Index dim, const OptimizerConfig& cfg) {
  std::vector<StartPoint> starts;
  if (cfg.seed_basis) starts.push_back({*cfg.seed_basis, "seed"});
  starts.push_back({OrthonormalBasis::identity(dim), "identity"});
  starts.push_back({random_basis(dim, derive_seed(cfg.seed, 0)), "gue-eigenbasis"});
  for (int r = static_cast<int>(starts.size()); r < cfg.restarts; ++r) {
    starts.push_back({random_basis(dim, derive_seed(cfg.seed, static_cast<std::uint64_t>(r) + 1)),
                      "gue-eigenbasis-" + std::to_string(r)});
  }
  starts.resize(static_cast<std::size_t>(cfg.restarts),
                StartPoint{OrthonormalBasis::identity(dim), "identity"});
  return starts;
}

template <typename State>
OptimizationResult optimize_impl(const Observable& h, const State& state0, double tau, int steps,
                                 const OptimizerConfig& cfg, double hbar) {
  if (cfg.restarts < 1 || cfg.iterations < 0 || !(cfg.initial_step > 0.0)) {
    fail(ErrorCode::kInvalidArgument, "optimizer needs restarts >= 1, iterations >= 0, step > 0");
  }
  if (cfg.seed_basis && cfg.seed_basis->dim() != h.dim()) {
    fail(ErrorCode::kDimensionMismatch, "seed basis dimension does not match the Hamiltonian");
  }
  if (!(tau > 0.0)) fail(ErrorCode::kInvalidArgument, "tau must be positive");
  const Trajectory traj = sample_trajectory(h, state0, tau, steps, hbar);
  const CorrectionIntegrand integrand(traj);
  const double geodesic = geodesic_terms(traj).back();

  auto score = [&](const OrthonormalBasis& basis) {
    const std::vector<double> values = integrand.integrand(basis);
    return geodesic + integrand.prefactor() * cumulative_integral(traj.times, values).back().value;
  };

  const std::vector<StartPoint> starts = start_points(h.dim(), cfg);

  auto climb = [&](int restart) {
    const StartPoint& start = starts[static_cast<std::size_t>(restart)];
    std::mt19937_64 engine(derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(restart)));
    RestartOutcome out{start.basis, score(start.basis), {}};
    out.probes.push_back({restart, -1, start.label, out.value, true});
    double step = cfg.initial_step;
    int failures = 0;
    for (int it = 0; it < cfg.iterations && step >= cfg.min_step; ++it) {
      const Observable direction = sample_gue({h.dim(), engine()});
      // e^{i step G} applied to every basis vector.
      ComplexMatrix rotated = linalg::expm_i_hermitian(direction.matrix(), -step) * out.basis.matrix();
      // Re-orthonormalize to keep accumulated round-off far below the basis tolerance.
      Eigen::HouseholderQR<ComplexMatrix> qr(rotated);
      ComplexMatrix q = qr.householderQ();
      const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
      for (Index j = 0; j < q.cols(); ++j) {
        const Complex diag = r(j, j);
        if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
      }
      OrthonormalBasis candidate(q);
      const double value = score(candidate);
      const bool accepted = value > out.value;
      out.probes.push_back({restart, it, start.label, value, accepted});
      if (accepted) {
        out.basis = std::move(candidate);
        out.value = value;
        failures = 0;
      } else if (++failures >= cfg.stagnation_limit) {
        step *= 0.5;
        failures = 0;
      }
    }
    return out;
  };

  std::vector<std::future<RestartOutcome>> futures;
  futures.reserve(starts.size());
  for (int r = 0; r < cfg.restarts; ++r) {
    futures.push_back(std::async(std::launch::async, climb, r));
  }
  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(futures.size());
  for (auto& f : futures) outcomes.push_back(f.get());

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }

  std::vector<ProbeRecord> probes;
  for (auto& o : outcomes) probes.insert(probes.end(), o.probes.begin(), o.probes.end());

  const std::string id = "optimized:" + starts[best].label;
  BoundReport report = tqsl_curve(traj, outcomes[best].basis, id).back();
  return {outcomes[best].basis, std::move(report), static_cast<int>(best), std::move(probes)};
}

}  // namespace

BoundReport tqsl_pure(const Observable& h, const PureState& psi0, double tau,
                      const OrthonormalBasis& basis, int steps, double hbar) {
  return tqsl_at(h, psi0, tau, basis, steps, hbar);
}

BoundReport tqsl_mixed(const Observable& h, const DensityMatrix& rho0, double tau,
                       const OrthonormalBasis& basis, int steps, double hbar) {
  return tqsl_at(h, rho0, tau, basis, steps, hbar);
}

OptimizationResult optimize_basis(const Observable& h, const PureState& psi0, double tau, int steps,
                                  const OptimizerConfig& cfg, double hbar) {
  return optimize_impl(h, psi0, tau, steps, cfg, hbar);
}

OptimizationResult optimize_basis(const Observable& h, const DensityMatrix& rho0, double tau,
                                  int steps, const OptimizerConfig& cfg, double hbar) {
  return optimize_impl(h, rho0, tau, steps, cfg, hbar);
}

}  // namespace qsl
