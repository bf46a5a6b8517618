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

#include "qsl/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

void require_dim(Index expected, Index actual, const char* what) {
  if (expected != actual) {
    fail(ErrorCode::kDimensionMismatch, std::string(what) + ": expected dimension " +
                                            std::to_string(expected) + ", got " +
                                            std::to_string(actual));
  }
}

double real_part_checked(Complex z) {
  if (std::abs(z.imag()) > kImaginaryResidueTolerance) {
    fail(ErrorCode::kNonRealExpectation,
         "imaginary part " + std::to_string(z.imag()) + " exceeds tolerance");
  }
  return z.real();
}

}  // namespace

Observable::Observable(const ComplexMatrix& matrix) : matrix_(linalg::hermitian_part(matrix)) {}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    fail(ErrorCode::kInvalidState, "empty state vector");
  }
  if (!amplitudes_.allFinite()) {
    fail(ErrorCode::kInvalidState, "state has non-finite amplitudes");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    fail(ErrorCode::kInvalidState, "state norm " + std::to_string(norm) + " is not 1");
  }
}

PureState PureState::normalized(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    fail(ErrorCode::kInvalidState, "cannot normalize a zero or non-finite vector");
  }
  return PureState(amplitudes / norm);
}

PureState PureState::basis_state(Index dim, Index k) {
  if (k < 0 || k >= dim) {
    fail(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix PureState::density() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix) : matrix_(linalg::hermitian_part(matrix)) {
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    fail(ErrorCode::kInvalidState, "density matrix trace " + std::to_string(trace) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double min_eigenvalue = solver.eigenvalues()(0);
  if (min_eigenvalue < -linalg::kPsdClampWindow) {
    fail(ErrorCode::kNotPositiveSemidefinite,
         "density matrix has eigenvalue " + std::to_string(min_eigenvalue));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() == 0 || columns_.rows() != columns_.cols()) {
    fail(ErrorCode::kInvalidBasis, "a complete basis needs exactly dim vectors of length dim");
  }
  if (!columns_.allFinite()) {
    fail(ErrorCode::kInvalidBasis, "basis has non-finite entries");
  }
  const double ortho = orthonormality_defect();
  const double complete = completeness_defect();
  if (ortho > kBasisTolerance || complete > kBasisTolerance) {
    fail(ErrorCode::kInvalidBasis, "orthonormality defect " + std::to_string(ortho) +
                                       ", completeness defect " + std::to_string(complete));
  }
}

OrthonormalBasis OrthonormalBasis::identity(Index dim) {
  return OrthonormalBasis(ComplexMatrix::Identity(dim, dim));
}

double OrthonormalBasis::orthonormality_defect() const {
  const Index n = columns_.cols();
  return (columns_.adjoint() * columns_ - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double OrthonormalBasis::completeness_defect() const {
  const Index d = columns_.rows();
  return (columns_ * columns_.adjoint() - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

Complex complex_expectation(const ComplexMatrix& m, const PureState& psi) {
  require_dim(m.rows(), psi.dim(), "operator/state");
  return psi.amplitudes().dot(m * psi.amplitudes());
}

Complex complex_expectation(const ComplexMatrix& m, const DensityMatrix& rho) {
  require_dim(m.rows(), rho.dim(), "operator/state");
  // Tr(M rho) without forming the product.
  return (m.transpose().cwiseProduct(rho.matrix())).sum();
}

double expectation(const Observable& a, const PureState& psi) {
  return real_part_checked(complex_expectation(a.matrix(), psi));
}

double expectation(const Observable& a, const DensityMatrix& rho) {
  return real_part_checked(complex_expectation(a.matrix(), rho));
}

double variance(const Observable& a, const PureState& psi) {
  require_dim(a.dim(), psi.dim(), "observable/state");
  const double mean = expectation(a, psi);
  const ComplexVector shifted = a.matrix() * psi.amplitudes() - mean * psi.amplitudes();
  return shifted.squaredNorm();
}

double variance(const Observable& a, const DensityMatrix& rho) {
  const Observable bar = centered(a, rho);
  const ComplexMatrix sq = bar.matrix() * bar.matrix();
  return std::max(0.0, real_part_checked(complex_expectation(sq, rho)));
}

Observable centered(const Observable& a, const PureState& psi) {
  const double mean = expectation(a, psi);
  return Observable(a.matrix() - mean * ComplexMatrix::Identity(a.dim(), a.dim()));
}

Observable centered(const Observable& a, const DensityMatrix& rho) {
  const double mean = expectation(a, rho);
  return Observable(a.matrix() - mean * ComplexMatrix::Identity(a.dim(), a.dim()));
}

double purity(const DensityMatrix& rho) {
  const double p = rho.matrix().cwiseAbs2().sum();
  // arccos sqrt(P) is ill-conditioned at P = 1, so a few ulps of round-off on
  // a rank-one state would leak ~1e-8 into every mixed-state geodesic term.
  return 1.0 - p <= kPuritySnap ? 1.0 : p;
}

OrthonormalBasis basis_from_observable(const Observable& g) {
  return OrthonormalBasis(linalg::eigh(g.matrix()).eigenvectors);
}

}  // namespace qsl
