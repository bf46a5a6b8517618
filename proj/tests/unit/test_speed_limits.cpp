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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qsl/ensembles.hpp"
#include "qsl/experiments.hpp"
#include "qsl/speed_limits.hpp"
#include "test_support.hpp"

using namespace qsl;
using qsl_test::code_of;

namespace {

/// Correction integral (2/dH) * int_0^tau K / sin s0 dt evaluated from the
/// definitions with an independent propagator and a fine Simpson rule.
double oracle_pure_correction(const ComplexMatrix& h, const ComplexVector& psi0,
                              const ComplexMatrix& basis, double tau) {
  const Index d = h.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex mean_h0 = psi0.dot(h * psi0);
  const double dh = std::sqrt((psi0.dot(h * h * psi0) - mean_h0 * mean_h0).real());
  auto integrand = [&](double t) {
    if (t < 1e-7) t = 1e-7;  // removable 0/0 at t = 0
    const ComplexVector psi = qsl_test::oracle_unitary(h, t) * psi0;
    const ComplexMatrix a = psi0 * psi0.adjoint();
    const double mean_a = psi.dot(a * psi).real();
    const double mean_b = psi.dot(h * psi).real();
    const ComplexMatrix abar = a - mean_a * id;
    const ComplexMatrix bbar = h - mean_b * id;
    double tighter = 0.0;
    for (Index n = 0; n < d; ++n) {
      const ComplexVector e = basis.col(n);
      tighter += std::abs(psi.dot(abar * e) * e.dot(bbar * psi));
    }
    const double cross = std::abs(psi.dot(abar * bbar * psi));
    const double s0 = 2.0 * std::acos(std::min(1.0, std::abs(psi0.dot(psi))));
    return (tighter - cross) / std::sin(s0);
  };
  return 2.0 / dh * qsl_test::simpson(integrand, 0.0, tau, 4000);
}

}  // namespace

TEST_SUITE("speed_limits") {
  TEST_CASE("Mandelstam-Tamm bound is saturated by sigma_x on |0>") {
    const Observable h(qsl_test::sx());
    const PureState zero = PureState::basis_state(2, 0);
    for (double tau : {0.2, 0.5, 1.0}) {
      const BoundReport r = tqsl_pure(h, zero, tau, OrthonormalBasis::identity(2));
      CHECK(r.tau_mt == doctest::Approx(tau).epsilon(1e-10));
      CHECK(std::abs(r.tau_mt - tau) < 1e-8);
      CHECK(r.tau_tqsl >= r.tau_mt - 1e-12);
      CHECK(r.tau_actual == doctest::Approx(tau));
    }
  }

  TEST_CASE("qubit pure states carry no correction in any basis") {
    const Observable h = sample_gue({2, 5});
    const PureState psi = random_pure_state(2, 6);
    const Trajectory traj = sample_trajectory(h, psi, 0.5, 101);
    REQUIRE(traj.fully_clean());
    for (const auto& r : tqsl_curve(traj, random_basis(2, 7))) CHECK(std::abs(r.delta) < 1e-9);
  }

  TEST_CASE("correction integral matches a fine-grid oracle in dimension 3") {
    for (std::uint64_t seed : {1u, 4u, 8u}) {
      const Observable h = sample_gue({3, seed});
      const PureState psi0 = default_initial_state(3);
      const OrthonormalBasis basis = random_basis(3, derive_seed(seed, 1));
      const double tau = 0.8;
      const Trajectory traj = sample_trajectory(h, psi0, tau, 400);
      if (!traj.fully_clean()) continue;
      const BoundReport r = tqsl_pure(h, psi0, tau, basis, 400);
      const double oracle = oracle_pure_correction(h.matrix(), psi0.amplitudes(), basis.matrix(), tau);
      CHECK(r.correction_term > 0.0);
      CHECK(r.correction_term == doctest::Approx(oracle).epsilon(1e-4));
      CHECK(r.delta == doctest::Approx(r.correction_term));
      CHECK(r.tau_tqsl <= tau + 1e-6);
      CHECK(r.quadrature.bound_error < 1e-3 * r.correction_term);
    }
  }

  TEST_CASE("pure curve: delta is zero at t = 0, nonnegative, and the bound stays below t") {
    const Observable h = sample_gue({3, 2});
    const Trajectory traj = sample_trajectory(h, default_initial_state(3), 3.0, 300);
    const auto curve = tqsl_curve(traj, random_basis(3, 99), "fixed");
    CHECK(curve.front().delta == 0.0);
    CHECK(curve.front().tau_tqsl == 0.0);
    for (const auto& r : curve) {
      CHECK(r.delta >= -1e-9);
      if (r.validity_clean) CHECK(r.tau_actual >= r.tau_tqsl - 1e-6);
      CHECK(r.basis_id == "fixed");
    }
  }

  TEST_CASE("mixed geodesic term for diag(0.8, 0.2) under sigma_x") {
    const Observable h(qsl_test::sx());
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 0.8;
    m(1, 1) = 0.2;
    const DensityMatrix rho0(m);
    for (double tau : {0.3, 0.9}) {
      const double c2 = std::cos(tau) * std::cos(tau);
      const double expected = std::acos(std::sqrt(0.68 * c2 + 0.32 * (1 - c2))) - std::acos(std::sqrt(0.68));
      const BoundReport r = tqsl_mixed(h, rho0, tau, OrthonormalBasis::identity(2));
      CHECK(r.tau_mt == doctest::Approx(expected).epsilon(1e-10));
      CHECK(mixed_geodesic_term(rho0, evolve_mixed(h, rho0, tau), 1.0) ==
            doctest::Approx(expected).epsilon(1e-10));
      CHECK(r.tau_tqsl >= r.tau_mt - 1e-12);
      CHECK(r.tau_tqsl <= tau + 1e-6);
    }
  }

  TEST_CASE("mixed bound reduces to the pure bound on rank-one states") {
    for (std::uint64_t s = 0; s < 6; ++s) {
      const Index d = 3 + static_cast<Index>(s % 2);
      const Observable h = sample_gue({d, derive_seed(s, 1)});
      const PureState psi = random_pure_state(d, derive_seed(s, 2));
      const OrthonormalBasis basis = random_basis(d, derive_seed(s, 3));
      const double tau = 0.4;
      if (!sample_trajectory(h, psi, tau, 200).fully_clean()) continue;
      const BoundReport p = tqsl_pure(h, psi, tau, basis, 200);
      const BoundReport m = tqsl_mixed(h, psi.density(), tau, basis, 200);
      CHECK(std::abs(p.tau_tqsl - m.tau_tqsl) < 1e-6);
      CHECK(std::abs(p.tau_mt - m.tau_mt) < 1e-9);
    }
  }

  TEST_CASE("quadrature convergence when the grid is doubled") {
    const Observable h = sample_gue({3, 3});
    const PureState psi0 = default_initial_state(3);
    const OrthonormalBasis basis = random_basis(3, 17);
    const Trajectory coarse = sample_trajectory(h, psi0, 1.0, 401);
    const Trajectory fine = sample_trajectory(h, psi0, 1.0, 801);
    REQUIRE(coarse.fully_clean());
    const double a = tqsl_curve(coarse, basis).back().correction_integral;
    const double b = tqsl_curve(fine, basis).back().correction_integral;
    CHECK(std::abs(a - b) < 1e-4 * std::abs(b));
    CHECK(tqsl_curve(coarse, basis).back().quadrature.integral_error >= 0.5 * std::abs(a - b));
  }

  TEST_CASE("error paths") {
    const Observable h(qsl_test::sx());
    const PureState zero = PureState::basis_state(2, 0);
    // The overlap passes its minimum at pi/2.
    CHECK(code_of([&] { tqsl_pure(h, zero, 2.0, OrthonormalBasis::identity(2)); }) ==
          ErrorCode::kValidityExceeded);
    // Eigenstate of H: Delta H = 0.
    const PureState plus = PureState::normalized(ComplexVector::Ones(2));
    CHECK(code_of([&] { tqsl_pure(h, plus, 0.5, OrthonormalBasis::identity(2)); }) ==
          ErrorCode::kZeroEnergyVariance);
    CHECK(code_of([&] { tqsl_pure(h, zero, 0.0, OrthonormalBasis::identity(2)); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(code_of([&] { tqsl_pure(h, zero, 0.5, OrthonormalBasis::identity(3)); }) ==
          ErrorCode::kDimensionMismatch);
  }

  TEST_CASE("orthogonality-time bound") {
    // H = diag(0, 2), |+>: <H> = 1, Delta H = 1 -> max(pi/2, pi/2).
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 1) = 2.0;
    const PureState plus = PureState::normalized(ComplexVector::Ones(2));
    CHECK(combined_bound_orthogonal(Observable(m), plus) == doctest::Approx(std::numbers::pi / 2));
    // Mean energy 0 leaves the mean-energy term undefined.
    CHECK(code_of([&] { combined_bound_orthogonal(Observable(qsl_test::sx()), PureState::basis_state(2, 0)); }) ==
          ErrorCode::kNonPositiveMeanEnergy);
  }

  TEST_CASE("basis optimizer with one restart and no iterations returns its seed basis") {
    const Observable h = sample_gue({3, 12});
    const PureState psi0 = default_initial_state(3);
    OptimizerConfig cfg;
    cfg.restarts = 1;
    cfg.iterations = 0;
    cfg.seed_basis = random_basis(3, 77);
    const OptimizationResult r = optimize_basis(h, psi0, 0.6, 120, cfg);
    CHECK((r.basis.matrix() - cfg.seed_basis->matrix()).norm() == 0.0);
    CHECK(r.report.tau_tqsl == tqsl_pure(h, psi0, 0.6, *cfg.seed_basis, 120).tau_tqsl);
  }

  TEST_CASE("bound is invariant under permuting the basis vectors") {
    const Observable h = sample_gue({3, 4});
    const PureState psi0 = default_initial_state(3);
    const OrthonormalBasis basis = random_basis(3, 9);
    ComplexMatrix permuted(3, 3);
    permuted << basis.matrix().col(2), basis.matrix().col(0), basis.matrix().col(1);
    const double a = tqsl_pure(h, psi0, 0.5, basis, 101).tau_tqsl;
    const double b = tqsl_pure(h, psi0, 0.5, OrthonormalBasis(permuted), 101).tau_tqsl;
    CHECK(b == doctest::Approx(a).epsilon(1e-13));
  }

  TEST_CASE("basis optimizer never does worse than its starting points and is deterministic") {
    const Observable h = sample_gue({3, 12});
    const PureState psi0 = default_initial_state(3);
    const double tau = 0.6;
    REQUIRE(sample_trajectory(h, psi0, tau, 120).fully_clean());
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.iterations = 40;
    cfg.seed = 5;
    cfg.seed_basis = random_basis(3, 77);
    const OptimizationResult a = optimize_basis(h, psi0, tau, 120, cfg);
    const OptimizationResult b = optimize_basis(h, psi0, tau, 120, cfg);
    const double seed_value = tqsl_pure(h, psi0, tau, *cfg.seed_basis, 120).tau_tqsl;
    const double identity_value = tqsl_pure(h, psi0, tau, OrthonormalBasis::identity(3), 120).tau_tqsl;
    CHECK(a.report.tau_tqsl >= seed_value - 1e-15);
    CHECK(a.report.tau_tqsl >= identity_value - 1e-15);
    CHECK(a.report.tau_tqsl <= tau + 1e-6);
    CHECK(a.report.tau_tqsl == b.report.tau_tqsl);
    CHECK(a.best_restart == b.best_restart);
    CHECK((a.basis.matrix() - b.basis.matrix()).norm() == 0.0);
    CHECK(a.basis.orthonormality_defect() < 1e-10);
    CHECK(a.report.basis_id.rfind("optimized:", 0) == 0);
    CHECK(!a.probes.empty());
  }
}
