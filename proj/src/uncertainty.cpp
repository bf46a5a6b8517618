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

#include "qsl/uncertainty.hpp"

#include <cmath>
#include <string>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

void require_same_dim(Index a, Index b, Index state, const char* what) {
  if (a != b || a != state) {
    fail(ErrorCode::kDimensionMismatch, std::string(what) + ": operator and state dimensions differ");
  }
}

void require_basis(const OrthonormalBasis& basis, Index dim) {
  if (basis.dim() != dim) {
    fail(ErrorCode::kDimensionMismatch, "basis dimension " + std::to_string(basis.dim()) +
                                            " does not match state dimension " +
                                            std::to_string(dim));
  }
}

ComplexMatrix shifted(const Observable& a, double mean) {
  return a.matrix() - mean * ComplexMatrix::Identity(a.dim(), a.dim());
}

template <typename State>
double rs_bound_impl(const Observable& a, const Observable& b, const State& state) {
  require_same_dim(a.dim(), b.dim(), state.dim(), "robertson_schrodinger_bound");
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix& bm = b.matrix();
  const Complex comm = complex_expectation(am * bm - bm * am, state);
  const Complex anti = complex_expectation(am * bm + bm * am, state);
  const double mean_product = expectation(a, state) * expectation(b, state);
  const double comm_term = std::norm(0.5 * comm);
  const double anti_term = std::norm(0.5 * anti - mean_product);
  return std::sqrt(comm_term + anti_term);
}

template <typename State>
double commutator_bound_impl(const Observable& a, const Observable& b, const State& state) {
  require_same_dim(a.dim(), b.dim(), state.dim(), "commutator_bound");
  const ComplexMatrix comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return 0.5 * std::abs(complex_expectation(comm, state));
}

template <typename State>
double identity_residual_impl(const Observable& a, const Observable& b, const State& state,
                              double c, double cross) {
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix& bm = b.matrix();
  const Complex comm = complex_expectation(am * bm - bm * am, state);
  const Complex anti = complex_expectation(am * bm + bm * am, state);
  const double mean_product = expectation(a, state) * expectation(b, state);
  return cross * cross - 0.25 * std::norm(comm) - std::norm(0.5 * anti - c * mean_product);
}

}  // namespace

double clamp_nonnegative(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kNonnegativeSlack) return 0.0;
  fail(ErrorCode::kInvariantViolation,
       std::string(what) + " = " + std::to_string(value) + " is negative beyond round-off");
}

double robertson_schrodinger_bound(const Observable& a, const Observable& b, const PureState& psi) {
  return rs_bound_impl(a, b, psi);
}

double robertson_schrodinger_bound(const Observable& a, const Observable& b,
                                   const DensityMatrix& rho) {
  return rs_bound_impl(a, b, rho);
}

double commutator_bound(const Observable& a, const Observable& b, const PureState& psi) {
  return commutator_bound_impl(a, b, psi);
}

double commutator_bound(const Observable& a, const Observable& b, const DensityMatrix& rho) {
  return commutator_bound_impl(a, b, rho);
}

double cross_term(const Observable& a, const Observable& b, const PureState& psi) {
  require_same_dim(a.dim(), b.dim(), psi.dim(), "cross_term");
  const ComplexVector& x = psi.amplitudes();
  const ComplexVector u = shifted(a, expectation(a, psi)) * x;
  const ComplexVector v = shifted(b, expectation(b, psi)) * x;
  return std::abs(u.dot(v));
}

double cross_term(const Observable& a, const Observable& b, const DensityMatrix& rho) {
  require_same_dim(a.dim(), b.dim(), rho.dim(), "cross_term");
  const ComplexMatrix abar = shifted(a, expectation(a, rho));
  const ComplexMatrix bbar = shifted(b, expectation(b, rho));
  return std::abs((abar * rho.matrix() * bbar).trace());
}

namespace detail {

double pure_tighter_from_vectors(const ComplexVector& u, const ComplexVector& v,
                                 const ComplexMatrix& basis) {
  const ComplexVector pu = basis.adjoint() * u;
  const ComplexVector pv = basis.adjoint() * v;
  return pu.cwiseAbs().dot(pv.cwiseAbs());
}

double mixed_tighter_from_operators(const ComplexMatrix& f, const ComplexMatrix& g,
                                    const ComplexMatrix& basis) {
  double total = 0.0;
  for (Index n = 0; n < basis.cols(); ++n) {
    const auto psi = basis.col(n);
    const Complex fn = psi.dot(f * psi);
    const Complex gn = psi.dot(g * psi);
    total += std::sqrt(std::abs(fn * gn));
  }
  return total;
}

}  // namespace detail

double tighter_bound_pure(const Observable& a, const Observable& b, const PureState& psi,
                          const OrthonormalBasis& basis, ProjectionSide side) {
  require_same_dim(a.dim(), b.dim(), psi.dim(), "tighter_bound_pure");
  require_basis(basis, psi.dim());
  const ComplexVector& x = psi.amplitudes();
  const ComplexMatrix abar = shifted(a, expectation(a, psi));
  const ComplexMatrix bbar = shifted(b, expectation(b, psi));
  if (side == ProjectionSide::kLeft) {
    return detail::pure_tighter_from_vectors(abar * x, bbar * x, basis.matrix());
  }
  // <psi|A-bar B-bar|psi_n><psi_n|psi>
  const ComplexVector w = bbar * (abar * x);
  return detail::pure_tighter_from_vectors(w, x, basis.matrix());
}

double tighter_bound_mixed(const Observable& a, const Observable& b, const DensityMatrix& rho,
                           const OrthonormalBasis& basis, ProjectionSide side) {
  require_same_dim(a.dim(), b.dim(), rho.dim(), "tighter_bound_mixed");
  require_basis(basis, rho.dim());
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix abar = shifted(a, expectation(a, rho));
  const ComplexMatrix bbar = shifted(b, expectation(b, rho));
  const ComplexMatrix f = abar * r * abar;
  if (side == ProjectionSide::kLeft) {
    return detail::mixed_tighter_from_operators(f, bbar * r * bbar, basis.matrix());
  }
  // Tr(f B-bar P_n rho B-bar P_n) = <psi_n|f B-bar|psi_n> <psi_n|rho B-bar|psi_n>
  const ComplexMatrix fb = f * bbar;
  const ComplexMatrix rb = r * bbar;
  double total = 0.0;
  for (Index n = 0; n < basis.size(); ++n) {
    const ComplexVector psi = basis.vector(n);
    total += std::sqrt(std::abs(psi.dot(fb * psi) * psi.dot(rb * psi)));
  }
  return total;
}

double correction_k_pure(const Observable& a, const Observable& b, const PureState& psi,
                         const OrthonormalBasis& basis) {
  return clamp_nonnegative(tighter_bound_pure(a, b, psi, basis) - cross_term(a, b, psi),
                           "correction K");
}

double correction_k_mixed(const Observable& a, const Observable& b, const DensityMatrix& rho,
                          const OrthonormalBasis& basis) {
  return clamp_nonnegative(tighter_bound_mixed(a, b, rho, basis) - cross_term(a, b, rho),
                           "correction K");
}

UncertaintyReport uncertainty_report(const Observable& a, const Observable& b, const PureState& psi,
                                     const OrthonormalBasis& basis) {
  UncertaintyReport r;
  r.delta_a = std::sqrt(variance(a, psi));
  r.delta_b = std::sqrt(variance(b, psi));
  r.tighter_bound = tighter_bound_pure(a, b, psi, basis);
  r.rs_bound = robertson_schrodinger_bound(a, b, psi);
  r.cross_term = cross_term(a, b, psi);
  r.correction_k = clamp_nonnegative(r.tighter_bound - r.cross_term, "correction K");
  return r;
}

UncertaintyReport uncertainty_report(const Observable& a, const Observable& b,
                                     const DensityMatrix& rho, const OrthonormalBasis& basis) {
  UncertaintyReport r;
  r.delta_a = std::sqrt(variance(a, rho));
  r.delta_b = std::sqrt(variance(b, rho));
  r.tighter_bound = tighter_bound_mixed(a, b, rho, basis);
  r.rs_bound = robertson_schrodinger_bound(a, b, rho);
  r.cross_term = cross_term(a, b, rho);
  r.correction_k = clamp_nonnegative(r.tighter_bound - r.cross_term, "correction K");
  return r;
}

ComplexMatrix f_operator(const Observable& a, const DensityMatrix& rho) {
  if (a.dim() != rho.dim()) {
    fail(ErrorCode::kDimensionMismatch, "f_operator: operator and state dimensions differ");
  }
  const ComplexMatrix abar = shifted(a, expectation(a, rho));
  return abar * rho.matrix() * abar;
}

double anticommutator_identity_residual(const Observable& a, const Observable& b,
                                        const DensityMatrix& rho, double mean_coefficient) {
  return identity_residual_impl(a, b, rho, mean_coefficient, cross_term(a, b, rho));
}

double anticommutator_identity_residual(const Observable& a, const Observable& b,
                                        const PureState& psi, double mean_coefficient) {
  return identity_residual_impl(a, b, psi, mean_coefficient, cross_term(a, b, psi));
}

}  // namespace qsl
