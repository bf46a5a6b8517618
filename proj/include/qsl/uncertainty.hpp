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

#include "qsl/state.hpp"

namespace qsl {

/// Round-off window for quantities that are nonnegative in exact arithmetic.
/// Values in [-kNonnegativeSlack, 0) are clamped to 0, anything lower is an
/// InvariantViolation.
inline constexpr double kNonnegativeSlack = 1e-9;

/// Which side of B-bar the rank-one projector P_n = |psi_n><psi_n| sits on.
///   kLeft:  B_n = P_n B-bar, evaluated as sqrt|Tr(A-bar rho A-bar B_n rho B_n^dagger)|
///           = sqrt(<psi_n|f|psi_n> <psi_n|g|psi_n>) with the positive
///           operators f = A-bar rho A-bar and g = B-bar rho B-bar. This is
///           the form that reduces to the pure-state bound.
///   kRight: B_n = B-bar P_n, evaluated literally as
///           sqrt|Tr(A-bar rho A-bar B_n rho B_n)|. Reported for comparison;
///           it is not a valid bound in general.
enum class ProjectionSide { kLeft, kRight };

struct UncertaintyReport {
  double delta_a = 0.0;
  double delta_b = 0.0;
  double tighter_bound = 0.0;
  double rs_bound = 0.0;
  double cross_term = 0.0;
  double correction_k = 0.0;
};

/// Square root of the Robertson-Schrodinger right-hand side,
/// sqrt(|<[A,B]>/2|^2 + |<{A,B}>/2 - <A><B>|^2).
double robertson_schrodinger_bound(const Observable& a, const Observable& b, const PureState& psi);
double robertson_schrodinger_bound(const Observable& a, const Observable& b, const DensityMatrix& rho);

/// |<[A,B]>| / 2
double commutator_bound(const Observable& a, const Observable& b, const PureState& psi);
double commutator_bound(const Observable& a, const Observable& b, const DensityMatrix& rho);

/// |<psi|A-bar B-bar|psi>| for pure states, |Tr(A-bar rho B-bar)| for mixed.
double cross_term(const Observable& a, const Observable& b, const PureState& psi);
double cross_term(const Observable& a, const Observable& b, const DensityMatrix& rho);

/// sum_n |<psi|A-bar B_n|psi>|
double tighter_bound_pure(const Observable& a, const Observable& b, const PureState& psi,
                          const OrthonormalBasis& basis, ProjectionSide side = ProjectionSide::kLeft);

/// sum_n over the projection variant described at ProjectionSide.
double tighter_bound_mixed(const Observable& a, const Observable& b, const DensityMatrix& rho,
                           const OrthonormalBasis& basis,
                           ProjectionSide side = ProjectionSide::kLeft);

/// tighter bound minus cross term; clamped per kNonnegativeSlack.
double correction_k_pure(const Observable& a, const Observable& b, const PureState& psi,
                         const OrthonormalBasis& basis);
double correction_k_mixed(const Observable& a, const Observable& b, const DensityMatrix& rho,
                          const OrthonormalBasis& basis);

UncertaintyReport uncertainty_report(const Observable& a, const Observable& b, const PureState& psi,
                                     const OrthonormalBasis& basis);
UncertaintyReport uncertainty_report(const Observable& a, const Observable& b,
                                     const DensityMatrix& rho, const OrthonormalBasis& basis);

/// f = A-bar rho A-bar. Positive semidefinite for every A and rho.
ComplexMatrix f_operator(const Observable& a, const DensityMatrix& rho);

/// |<A-bar B-bar>|^2 - |<[A,B]>|^2/4 - |<{A,B}>/2 - c <A><B>|^2.
/// c = 1 is the exact identity (residual ~ 1e-16). Other coefficients are a
/// diagnostic only; the residual for c = 2 measures how far that variant is
/// from holding on a given input.
double anticommutator_identity_residual(const Observable& a, const Observable& b,
                                        const DensityMatrix& rho, double mean_coefficient = 1.0);
double anticommutator_identity_residual(const Observable& a, const Observable& b,
                                        const PureState& psi, double mean_coefficient = 1.0);

/// Clamp helper shared by every ">= 0" quantity.
double clamp_nonnegative(double value, const char* what);

namespace detail {

/// Tighter-bound kernels on precomputed vectors, used by the trajectory code.
/// For a pure state, u = A-bar|psi>, v = B-bar|psi>:
///   tighter = sum_n |<psi_n|u>| |<psi_n|v>|,  cross = |<u|v>|.
double pure_tighter_from_vectors(const ComplexVector& u, const ComplexVector& v,
                                 const ComplexMatrix& basis);

/// For a mixed state with f = A-bar rho A-bar and g = B-bar rho B-bar:
///   tighter = sum_n sqrt(<psi_n|f|psi_n> <psi_n|g|psi_n>).
double mixed_tighter_from_operators(const ComplexMatrix& f, const ComplexMatrix& g,
                                    const ComplexMatrix& basis);

}  // namespace detail

}  // namespace qsl
