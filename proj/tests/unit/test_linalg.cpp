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

#include <doctest.h>

#include "qsl/ensembles.hpp"
#include "qsl/linalg.hpp"
#include "test_support.hpp"

using namespace qsl;
using namespace qsl::linalg;
using qsl_test::code_of;

TEST_SUITE("linalg") {
  TEST_CASE("eigh matches a hand diagonalization") {
    ComplexMatrix m(2, 2);
    m << 2, 1, 1, 2;
    const EigenDecomposition eig = eigh(m);
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
    // Eigenvector of 3 is (1,1)/sqrt2 up to phase.
    CHECK(std::abs(eig.eigenvectors(0, 1)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK((eig.reconstruct() - m).norm() < 1e-13);
  }

  TEST_CASE("eigh of a complex Hermitian 2x2") {
    // sigma_y has eigenvalues -1, +1.
    const EigenDecomposition eig = eigh(pauli::y());
    CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
    CHECK(unitarity_defect(eig.eigenvectors) < 1e-14);
  }

  TEST_CASE("eigh reconstructs random GUE matrices up to dimension 16") {
    for (Index d : {2, 5, 9, 16}) {
      const Observable h = sample_gue({d, static_cast<std::uint64_t>(d)});
      const EigenDecomposition eig = eigh(h.matrix());
      CHECK((eig.reconstruct() - h.matrix()).norm() < 1e-12 * d);
      for (Index k = 1; k < d; ++k) CHECK(eig.eigenvalues(k - 1) <= eig.eigenvalues(k));
    }
  }

  TEST_CASE("expm of sigma_x is a rotation") {
    for (double s : {0.0, 0.3, 1.7, -2.2}) {
      const ComplexMatrix u = expm_i_hermitian(pauli::x(), s);
      ComplexMatrix expected(2, 2);
      expected << std::cos(s), Complex(0, -std::sin(s)), Complex(0, -std::sin(s)), std::cos(s);
      CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  TEST_CASE("expm agrees with the generic matrix exponential and inverts") {
    const Observable h = sample_gue({6, 11});
    const ComplexMatrix u = expm_i_hermitian(h.matrix(), 0.9);
    CHECK((u - qsl_test::oracle_unitary(h.matrix(), 0.9)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(unitarity_defect(u) < 1e-13);
    const ComplexMatrix back = expm_i_hermitian(h.matrix(), -0.9);
    CHECK(((u * back) - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-13);
  }

  TEST_CASE("sqrtm of a rotated diagonal matrix") {
    const ComplexMatrix u = expm_i_hermitian(pauli::y(), 0.4);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    ComplexMatrix rd = ComplexMatrix::Zero(2, 2);
    rd(0, 0) = 2.0;
    rd(1, 1) = 3.0;
    const ComplexMatrix root = sqrtm_psd(u * d * u.adjoint());
    CHECK((root - u * rd * u.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  }

  TEST_CASE("sqrtm clamps tiny negative eigenvalues and rejects real ones") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1e-12;
    const ComplexMatrix root = sqrtm_psd(m);
    CHECK(std::abs(root(1, 1)) == 0.0);
    m(1, 1) = -1e-6;
    CHECK(code_of([&] { sqrtm_psd(m); }) == ErrorCode::kNotPositiveSemidefinite);
  }

  TEST_CASE("kron follows the leftmost-factor-most-significant convention") {
    const ComplexMatrix k = kron(pauli::x(), pauli::identity());
    // X on the first spin maps |00> (index 0) to |10> (index 2).
    CHECK(k(2, 0) == Complex(1.0));
    CHECK(k(1, 0) == Complex(0.0));
    CHECK(kron(pauli::z(), pauli::z()).diagonal().real().transpose() ==
          Eigen::RowVector4d(1, -1, -1, 1));
  }

  TEST_CASE("kron is associative and sqrtm of I/2") {
    const ComplexMatrix a = sample_gue({2, 1}).matrix();
    const ComplexMatrix b = sample_gue({3, 2}).matrix();
    const ComplexMatrix c = sample_gue({2, 3}).matrix();
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-14);
    const ComplexMatrix half = 0.5 * pauli::identity();
    const ComplexMatrix root = sqrtm_psd(half);
    CHECK((root - std::sqrt(0.5) * pauli::identity()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("Pauli algebra") {
    const Complex i(0, 1);
    CHECK((pauli::x() * pauli::y() - i * pauli::z()).norm() < 1e-15);
    CHECK((pauli::x() * pauli::x() - pauli::identity()).norm() < 1e-15);
  }

  TEST_CASE("input validation") {
    ComplexMatrix rect(2, 3);
    rect.setZero();
    CHECK(code_of([&] { eigh(rect); }) == ErrorCode::kDimensionMismatch);
    ComplexMatrix bad = pauli::x();
    bad(0, 1) = 2.0;
    CHECK(code_of([&] { eigh(bad); }) == ErrorCode::kNonHermitianInput);
    ComplexMatrix nan = pauli::x();
    nan(0, 0) = std::nan("");
    CHECK(code_of([&] { eigh(nan); }) == ErrorCode::kInvalidArgument);
    // Within tolerance: accepted and symmetrized.
    ComplexMatrix near = pauli::x();
    near(0, 1) += 1e-11;
    CHECK(hermiticity_defect(hermitian_part(near)) == 0.0);
  }
}
