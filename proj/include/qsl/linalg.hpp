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

#include <complex>

#include <Eigen/Dense>

namespace qsl::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Max entrywise |H - H^dagger| tolerated before an input is rejected.
inline constexpr double kHermitianTolerance = 1e-9;
/// Eigenvalues in [-kPsdClampWindow, 0) are treated as round-off and set to 0.
inline constexpr double kPsdClampWindow = 1e-10;

struct EigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns are unit eigenvectors

  ComplexMatrix reconstruct() const;
};

bool all_finite(const ComplexMatrix& m);

/// Largest entrywise modulus of m - m^dagger. Requires a square matrix.
double hermiticity_defect(const ComplexMatrix& m);

/// Returns (m + m^dagger)/2 after checking that m is square, finite and
/// Hermitian within kHermitianTolerance. Throws NonHermitianInput otherwise.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

EigenDecomposition eigh(const ComplexMatrix& h);

/// exp(-i H s) for Hermitian H, built from the spectral decomposition.
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s);
ComplexMatrix expm_i_hermitian(const EigenDecomposition& eig, double s);

/// Positive square root of a positive semidefinite Hermitian matrix.
ComplexMatrix sqrtm_psd(const ComplexMatrix& rho);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max entrywise |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace qsl::linalg
