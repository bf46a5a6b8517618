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

#include "qsl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsl/errors.hpp"

namespace qsl::linalg {

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kDimensionMismatch, "matrix is not square");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorCode::kDimensionMismatch,
         "expected a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    fail(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    fail(ErrorCode::kNonHermitianInput,
         "max |H - H^dagger| = " + std::to_string(defect) + " exceeds tolerance");
  }
  return (m + m.adjoint()) * 0.5;
}

EigenDecomposition eigh(const ComplexMatrix& h) {
  const ComplexMatrix sym = hermitian_part(h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kInvalidArgument, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_i_hermitian(const EigenDecomposition& eig, double s) {
  const Index n = eig.eigenvalues.size();
  ComplexVector phases(n);
  for (Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eig.eigenvalues(k) * s);
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s) {
  return expm_i_hermitian(eigh(h), s);
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& rho) {
  const EigenDecomposition eig = eigh(rho);
  RealVector roots(eig.eigenvalues.size());
  for (Index k = 0; k < roots.size(); ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda < -kPsdClampWindow) {
      fail(ErrorCode::kNotPositiveSemidefinite,
           "eigenvalue " + std::to_string(lambda) + " below clamp window");
    }
    roots(k) = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix out = eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  return (out + out.adjoint()) * 0.5;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

namespace pauli {

ComplexMatrix identity() {
  return ComplexMatrix::Identity(2, 2);
}

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace qsl::linalg
