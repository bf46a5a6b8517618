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

#include "qsl/dynamics.hpp"
#include "qsl/quadrature.hpp"

namespace qsl {

/// Delta H at or below this is a stationary state; every speed limit is vacuous.
inline constexpr double kMinEnergySpread = 1e-12;
/// Integrand denominators: below these the sample is singular.
inline constexpr double kSinFloor = 1e-8;
inline constexpr double kRadicalFloor = 1e-12;
/// K values below this are treated as zero at singular samples.
inline constexpr double kCorrectionFloor = 1e-10;

inline constexpr int kDefaultSteps = 400;

struct QuadratureInfo {
  std::string scheme = "trapezoid";
  double step = 0.0;
  /// Richardson estimate of the error in correction_integral.
  double integral_error = 0.0;
  /// The same estimate propagated to tau_tqsl.
  double bound_error = 0.0;
};

/// Speed-limit bound evaluated at one actual evolution time tau_actual.
///
/// tau_mt is the geodesic (Mandelstam-Tamm type) term: hbar s0 / (2 Delta H)
/// for pure states and the arccos form for mixed states. correction_integral
/// is the raw time integral of the correction integrand; correction_term is
/// that integral times its prefactor (2/Delta H pure, 1/(sqrt(P) Delta H)
/// mixed), so tau_tqsl = tau_mt + correction_term and delta = correction_term.
struct BoundReport {
  double tau_actual = 0.0;
  double tau_mt = 0.0;
  double correction_integral = 0.0;
  double correction_term = 0.0;
  double tau_tqsl = 0.0;
  double delta = 0.0;
  std::string basis_id;
  bool validity_clean = true;
  QuadratureInfo quadrature;
};

/// hbar s0(t_k) / (2 Delta H) on a pure trajectory.
double mt_bound_pure(const Trajectory& trajectory, std::size_t index);

/// max{pi hbar / (2 Delta H), pi hbar / (2 <H>)} for orthogonal endpoints.
double combined_bound_orthogonal(const Observable& h, const PureState& psi0, double hbar = 1.0);

/// hbar (arccos sqrt Tr(rho0 rho_tau) - arccos sqrt Tr(rho0^2)) / Delta H.
double mixed_geodesic_term(const DensityMatrix& rho0, const DensityMatrix& rho_tau,
                           double delta_h, double hbar = 1.0);

/// Basis-independent pieces of the correction integrand along a trajectory,
/// with A = |psi(0)><psi(0)| (or rho(0)) and B = H. Building this once lets
/// many bases be scored cheaply.
class CorrectionIntegrand {
 public:
  explicit CorrectionIntegrand(const Trajectory& trajectory);

  std::size_t size() const noexcept { return times_.size(); }
  bool mixed() const noexcept { return mixed_; }

  /// K(t_k) for every sample.
  std::vector<double> correction_k(const OrthonormalBasis& basis) const;
  /// K / denominator with the t = 0 and singular-sample policies applied.
  std::vector<double> integrand(const OrthonormalBasis& basis) const;
  /// Multiplies the integral to give the correction term of the bound.
  double prefactor() const noexcept { return prefactor_; }
  const std::vector<double>& denominators() const noexcept { return denominators_; }

 private:
  bool mixed_ = false;
  std::vector<double> times_;
  std::vector<double> cross_;
  std::vector<double> denominators_;
  // Pure: columns are A-bar|psi_k> and B-bar|psi_k>.
  ComplexMatrix u_;
  ComplexMatrix v_;
  // Mixed: A-bar rho_k A-bar and B-bar rho_k B-bar.
  std::vector<ComplexMatrix> f_;
  std::vector<ComplexMatrix> g_;
  double prefactor_ = 0.0;
};

/// One report per grid sample of the trajectory. Samples outside the
/// validity range are computed and marked, not rejected.
std::vector<BoundReport> tqsl_curve(const Trajectory& trajectory, const OrthonormalBasis& basis,
                                    const std::string& basis_id = "custom");

/// Tighter pure-state bound at time tau on a `steps`-point grid over [0, tau].
BoundReport tqsl_pure(const Observable& h, const PureState& psi0, double tau,
                      const OrthonormalBasis& basis, int steps = kDefaultSteps, double hbar = 1.0);

/// Tighter mixed-state bound at time tau.
BoundReport tqsl_mixed(const Observable& h, const DensityMatrix& rho0, double tau,
                       const OrthonormalBasis& basis, int steps = kDefaultSteps,
                       double hbar = 1.0);

struct OptimizerConfig {
  int restarts = 8;
  int iterations = 200;
  std::uint64_t seed = 0;
  double initial_step = 0.3;
  double min_step = 1e-4;
  int stagnation_limit = 10;
  /// When set, restart 0 starts here; otherwise restart 0 is the identity.
  std::optional<OrthonormalBasis> seed_basis;
};

struct ProbeRecord {
  int restart = 0;
  int iteration = 0;  // -1 for the starting point of a restart
  std::string start;
  double value = 0.0;
  bool accepted = false;
};

struct OptimizationResult {
  OrthonormalBasis basis;
  BoundReport report;
  int best_restart = 0;
  std::vector<ProbeRecord> probes;
};

/// Random-restart hill climbing over the unitary group for the basis that
/// maximizes tau_tqsl at tau. Restart starting points, in order: the seed
/// basis (if any), the identity, the eigenbasis of an independent GUE draw,
/// then further GUE eigenbases. Restarts run concurrently; the result is the
/// highest bound, ties going to the lowest restart index.
OptimizationResult optimize_basis(const Observable& h, const PureState& psi0, double tau, int steps,
                                  const OptimizerConfig& cfg, double hbar = 1.0);
OptimizationResult optimize_basis(const Observable& h, const DensityMatrix& rho0, double tau,
                                  int steps, const OptimizerConfig& cfg, double hbar = 1.0);

}  // namespace qsl
