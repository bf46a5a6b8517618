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

#include "qsl/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qsl/dynamics.hpp"
#include "qsl/ensembles.hpp"
#include "qsl/errors.hpp"
#include "qsl/speed_limits.hpp"
#include "qsl/uncertainty.hpp"

namespace qsl {

namespace {

using nlohmann::json;

/// Runs `trial(dim, seed)` over every (dim, trial index) and keeps the worst
/// slack. Library errors are counted as rejections, never propagated.
InvariantResult run_invariant(const std::string& name, double tolerance, const PropertyConfig& cfg,
                              std::uint64_t stream, int trials_per_dim,
                              const std::function<double(Index, std::uint64_t)>& trial,
                              const std::vector<Index>& dims, bool diagnostic = false) {
  InvariantResult r;
  r.name = name;
  r.tolerance = tolerance;
  r.diagnostic = diagnostic;
  r.worst_slack = std::numeric_limits<double>::infinity();
  for (Index dim : dims) {
    for (int t = 0; t < trials_per_dim; ++t) {
      const std::uint64_t seed =
          derive_seed(derive_seed(cfg.seed, stream), static_cast<std::uint64_t>(dim) * 1000003ULL +
                                                         static_cast<std::uint64_t>(t));
      ++r.trials;
      try {
        r.worst_slack = std::min(r.worst_slack, trial(dim, seed));
      } catch (const QslError& e) {
        ++r.rejections;
        if (r.note.empty()) r.note = e.what();
      }
    }
  }
  if (r.trials == 0 || !std::isfinite(r.worst_slack)) r.worst_slack = 0.0;
  r.passed = r.rejections == 0 && r.worst_slack >= -tolerance;
  return r;
}

double max_abs(const ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

json PropertyReport::to_json() const {
  json list = json::array();
  for (const auto& r : invariants) {
    json j = {{"name", r.name},           {"trials", r.trials},
              {"rejections", r.rejections}, {"worst_slack", r.worst_slack},
              {"tolerance", r.tolerance},   {"diagnostic", r.diagnostic},
              {"passed", r.passed}};
    if (!r.note.empty()) j["note"] = r.note;
    list.push_back(std::move(j));
  }
  return {{"passed", passed}, {"invariants", std::move(list)}};
}

PropertyReport run_property_suite(const PropertyConfig& cfg) {
  if (cfg.trials < 1) fail(ErrorCode::kConfigError, "trials must be >= 1");
  if (cfg.dims.empty()) fail(ErrorCode::kConfigError, "at least one dimension is required");
  for (Index d : cfg.dims) {
    if (d < 2) fail(ErrorCode::kConfigError, "dimensions must be >= 2");
  }

  const int n = cfg.trials;
  const int n_dynamics = std::max(1, n / 5);
  std::vector<Index> linalg_dims = cfg.dims;
  linalg_dims.push_back(8);
  linalg_dims.push_back(16);

  PropertyReport report;
  auto add = [&](InvariantResult r) { report.invariants.push_back(std::move(r)); };

  add(run_invariant("eigh_reconstruction", 1e-9, cfg, 1, n, [](Index d, std::uint64_t s) {
    const Observable h = sample_gue({d, s});
    const auto eig = linalg::eigh(h.matrix());
    return -(eig.reconstruct() - h.matrix()).norm() / h.matrix().norm();
  }, linalg_dims));

  add(run_invariant("expm_inverse", 1e-9, cfg, 2, n, [](Index d, std::uint64_t s) {
    const Observable h = sample_gue({d, s});
    const ComplexMatrix prod = linalg::expm_i_hermitian(h.matrix(), 1.3) *
                               linalg::expm_i_hermitian(h.matrix(), -1.3);
    return -max_abs(prod - ComplexMatrix::Identity(d, d));
  }, linalg_dims));

  add(run_invariant("sqrtm_square", 1e-9, cfg, 3, n, [](Index d, std::uint64_t s) {
    const DensityMatrix rho = random_density_matrix(d, s, 1 + static_cast<Index>(s % static_cast<std::uint64_t>(d)));
    const ComplexMatrix root = linalg::sqrtm_psd(rho.matrix());
    return -max_abs(root * root - rho.matrix());
  }, linalg_dims));

  add(run_invariant("variance_consistency", 1e-10, cfg, 4, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, s});
    const PureState psi = random_pure_state(d, derive_seed(s, 1));
    const DensityMatrix lifted = psi.density();
    const Observable abar = centered(a, psi);
    const double v = variance(a, psi);
    const double e2 = complex_expectation(abar.matrix() * abar.matrix(), psi).real();
    const double worst = std::max({std::abs(v - e2), std::abs(v - variance(a, lifted)),
                                   std::abs(expectation(a, psi) - expectation(a, lifted))});
    return std::min(-worst, v);
  }, cfg.dims));

  add(run_invariant("basis_completeness", 1e-9, cfg, 5, n, [](Index d, std::uint64_t s) {
    const OrthonormalBasis random = basis_from_observable(sample_gue({d, s}));
    ComplexMatrix degenerate = ComplexMatrix::Identity(d, d);
    degenerate(0, 0) = 2.0;
    const OrthonormalBasis deg = basis_from_observable(Observable(degenerate));
    return -std::max(random.completeness_defect(), deg.completeness_defect());
  }, cfg.dims));

  add(run_invariant("pure_chain", 1e-9, cfg, 6, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const PureState psi = random_pure_state(d, derive_seed(s, 3));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 4));
    const double product = std::sqrt(variance(a, psi) * variance(b, psi));
    const double tighter = tighter_bound_pure(a, b, psi, basis);
    const double cross = cross_term(a, b, psi);
    const double comm = commutator_bound(a, b, psi);
    return std::min({product - tighter, tighter - cross, cross - comm});
  }, cfg.dims));

  add(run_invariant("mixed_chain", 1e-9, cfg, 7, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 3));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 4));
    const double product = std::sqrt(variance(a, rho) * variance(b, rho));
    const double tighter = tighter_bound_mixed(a, b, rho, basis);
    const double cross = cross_term(a, b, rho);
    const double comm = commutator_bound(a, b, rho);
    return std::min({product - tighter, tighter - cross, cross - comm});
  }, cfg.dims));

  add(run_invariant("cross_term_identity", 1e-9, cfg, 8, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const PureState psi = random_pure_state(d, derive_seed(s, 3));
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 4));
    return -std::max(std::abs(anticommutator_identity_residual(a, b, psi)),
                     std::abs(anticommutator_identity_residual(a, b, rho)));
  }, cfg.dims));

  add(run_invariant("mixed_identity_coefficient_two", 0.0, cfg, 9, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 3));
    return -std::abs(anticommutator_identity_residual(a, b, rho, 2.0));
  }, cfg.dims, true));

  add(run_invariant("f_positivity", 1e-10, cfg, 10, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 2), 1 + static_cast<Index>(s % static_cast<std::uint64_t>(d)));
    const ComplexMatrix f = f_operator(a, rho);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((f + f.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
  }, cfg.dims));

  add(run_invariant("mixed_pure_reduction", 1e-9, cfg, 11, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const PureState psi = random_pure_state(d, derive_seed(s, 3));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 4));
    return -std::abs(tighter_bound_mixed(a, b, psi.density(), basis) -
                     tighter_bound_pure(a, b, psi, basis));
  }, cfg.dims));

  add(run_invariant("projection_side_gap", 0.0, cfg, 12, n, [](Index d, std::uint64_t s) {
    const Observable a = sample_gue({d, derive_seed(s, 1)});
    const Observable b = sample_gue({d, derive_seed(s, 2)});
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 3));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 4));
    return -std::abs(tighter_bound_mixed(a, b, rho, basis, ProjectionSide::kLeft) -
                     tighter_bound_mixed(a, b, rho, basis, ProjectionSide::kRight));
  }, cfg.dims, true));

  add(run_invariant("evolution_preservation", 1e-9, cfg, 13, n_dynamics, [](Index d, std::uint64_t s) {
    const Observable h = sample_gue({d, derive_seed(s, 1)});
    const PureState psi = random_pure_state(d, derive_seed(s, 2));
    const DensityMatrix rho = random_density_matrix(d, derive_seed(s, 3));
    const Propagator prop(h);
    const double t = 0.37 + static_cast<double>(s % 100) * 0.05;
    const PureState psit = prop.evolve(psi, t);
    const DensityMatrix rhot = prop.evolve(rho, t);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> e0(rho.matrix(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> e1(rhot.matrix(), Eigen::EigenvaluesOnly);
    const ComplexMatrix lifted = prop.evolve(psi.density(), t).matrix();
    const double worst = std::max(
        {std::abs(psit.amplitudes().norm() - 1.0), std::abs(rhot.matrix().trace().real() - 1.0),
         (e0.eigenvalues() - e1.eigenvalues()).cwiseAbs().maxCoeff(),
         max_abs(lifted - psit.density().matrix()),
         std::abs(bargmann_angle_pure(psi, psit) - bargmann_angle_pure(psit, psi)),
         std::abs(bargmann_angle_mixed(rho, rhot) - bargmann_angle_mixed(rhot, rho))});
    return -worst;
  }, cfg.dims));

  add(run_invariant("tqsl_dominance", 1e-9, cfg, 14, n_dynamics, [](Index d, std::uint64_t s) {
    const Observable h = sample_gue({d, derive_seed(s, 1)});
    const PureState psi = random_pure_state(d, derive_seed(s, 2));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 3));
    const Trajectory traj = sample_trajectory(h, psi, 1.5, 151);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : tqsl_curve(traj, basis)) worst = std::min(worst, r.delta);
    return worst;
  }, cfg.dims));

  add(run_invariant("tqsl_lower_bound", 1e-6, cfg, 15, n_dynamics, [](Index d, std::uint64_t s) {
    const Observable h = sample_gue({d, derive_seed(s, 1)});
    const PureState psi = random_pure_state(d, derive_seed(s, 2));
    const OrthonormalBasis basis = random_basis(d, derive_seed(s, 3));
    const Trajectory traj = sample_trajectory(h, psi, 1.5, 151);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : tqsl_curve(traj, basis)) {
      if (r.validity_clean) worst = std::min(worst, r.tau_actual - r.tau_tqsl);
    }
    return worst;
  }, cfg.dims));

  if (cfg.inject_non_hermitian) {
    InvariantResult injected = run_invariant("injected_non_hermitian", 1e-9, cfg, 99, 1, [](Index d, std::uint64_t s) {
      ComplexMatrix broken = sample_gue({d, s}).matrix();
      broken(0, d - 1) += Complex(0.5, 0.0);
      const Observable a(broken);
      const PureState psi = random_pure_state(d, derive_seed(s, 1));
      return std::sqrt(variance(a, psi));
    }, cfg.dims, true);
    // Here a rejection is the expected outcome: the operator must never reach
    // the numerics.
    injected.passed = injected.rejections == injected.trials;
    add(std::move(injected));
  }

  report.passed = std::all_of(report.invariants.begin(), report.invariants.end(),
                              [](const InvariantResult& r) { return r.diagnostic || r.passed; });
  return report;
}

}  // namespace qsl
