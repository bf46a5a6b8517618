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

#include "qsl/linalg.hpp"

namespace qsl {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using linalg::Index;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kBasisTolerance = 1e-9;
inline constexpr double kImaginaryResidueTolerance = 1e-8;
/// Purities within this distance of 1 are reported as exactly 1.
inline constexpr double kPuritySnap = 1e-13;

/// Hermitian operator. Inputs within the Hermiticity tolerance are
/// symmetrized on construction, so matrix() is exactly self-adjoint.
class Observable {
 public:
  explicit Observable(const ComplexMatrix& matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

class DensityMatrix;

/// Unit-norm ket. The global phase is not fixed.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  static PureState normalized(const ComplexVector& amplitudes);
  static PureState basis_state(Index dim, Index k);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Index dim() const noexcept { return amplitudes_.size(); }

  /// |psi><psi|
  DensityMatrix density() const;

 private:
  ComplexVector amplitudes_;
};

/// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& matrix);

  static DensityMatrix maximally_mixed(Index dim);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Complete orthonormal set stored as the columns of a unitary matrix.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(ComplexMatrix columns);

  static OrthonormalBasis identity(Index dim);

  const ComplexMatrix& matrix() const noexcept { return columns_; }
  Index dim() const noexcept { return columns_.rows(); }
  Index size() const noexcept { return columns_.cols(); }
  ComplexVector vector(Index n) const { return columns_.col(n); }

  double orthonormality_defect() const;
  double completeness_defect() const;

 private:
  ComplexMatrix columns_;
};

/// <A> for a pure state, Tr(A rho) for a mixed one.
double expectation(const Observable& a, const PureState& psi);
double expectation(const Observable& a, const DensityMatrix& rho);

/// <psi|M|psi> or Tr(M rho) for an arbitrary (not necessarily Hermitian) M.
Complex complex_expectation(const ComplexMatrix& m, const PureState& psi);
Complex complex_expectation(const ComplexMatrix& m, const DensityMatrix& rho);

/// Delta A^2, clamped at zero against round-off.
double variance(const Observable& a, const PureState& psi);
double variance(const Observable& a, const DensityMatrix& rho);

/// A - <A> I with the mean taken in the given state.
Observable centered(const Observable& a, const PureState& psi);
Observable centered(const Observable& a, const DensityMatrix& rho);

/// Tr(rho^2), snapped to exactly 1 within kPuritySnap.
double purity(const DensityMatrix& rho);

/// Eigenvectors of g, ascending eigenvalue order. Degenerate eigenspaces get
/// whatever orthonormal completion the eigensolver returns.
OrthonormalBasis basis_from_observable(const Observable& g);

}  // namespace qsl
