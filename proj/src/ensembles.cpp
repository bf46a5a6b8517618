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

#include "qsl/ensembles.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kProductTolerance = 1e-10;

std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

ComplexMatrix complex_gaussian(Index rows, Index cols, std::mt19937_64& engine, double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

int bit_of_spin(int spin, int num_spins) {
  return num_spins - spin;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Observable sample_gue(const GueConfig& cfg) {
  if (cfg.dim < 2) {
    fail(ErrorCode::kInvalidArgument, "GUE dimension must be >= 2");
  }
  const Index d = cfg.dim;
  auto engine = make_engine(cfg.seed);
  std::normal_distribution<double> diag(0.0, std::sqrt(1.0 / static_cast<double>(d)));
  std::normal_distribution<double> off(0.0, std::sqrt(1.0 / (2.0 * static_cast<double>(d))));
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    h(i, i) = diag(engine);
    for (Index j = i + 1; j < d; ++j) {
      const double re = off(engine);
      const double im = off(engine);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return Observable(h);
}

OrthonormalBasis random_basis(Index dim, std::uint64_t seed) {
  return basis_from_observable(sample_gue({dim, seed}));
}

PureState random_pure_state(Index dim, std::uint64_t seed) {
  if (dim < 1) fail(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  auto engine = make_engine(seed);
  const ComplexMatrix g = complex_gaussian(dim, 1, engine, 1.0);
  return PureState::normalized(g.col(0));
}

DensityMatrix random_density_matrix(Index dim, std::uint64_t seed, Index rank) {
  if (dim < 1) fail(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (rank <= 0 || rank > dim) rank = dim;
  auto engine = make_engine(seed);
  const ComplexMatrix g = complex_gaussian(dim, rank, engine, 1.0);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

void validate(const SpinChainConfig& cfg) {
  if (cfg.num_spins < 1 || cfg.num_spins > kMaxSpins) {
    fail(ErrorCode::kInvalidArgument,
         "num_spins must be in [1, " + std::to_string(kMaxSpins) + "]");
  }
  if (!(cfg.omega0 > 0.0) || !(cfg.omega > 0.0) || !(cfg.hbar > 0.0)) {
    fail(ErrorCode::kInvalidArgument, "omega0, omega and hbar must be positive");
  }
  for (std::size_t j = 0; j < cfg.blocks.size(); ++j) {
    std::uint64_t seen = 0;
    if (cfg.blocks[j].empty()) {
      fail(ErrorCode::kBlockIndexOutOfRange, "block " + std::to_string(j + 1) + " is empty");
    }
    for (int spin : cfg.blocks[j]) {
      if (spin < 1 || spin > cfg.num_spins) {
        fail(ErrorCode::kBlockIndexOutOfRange, "block " + std::to_string(j + 1) +
                                                   " references spin " + std::to_string(spin));
      }
      const std::uint64_t bit = 1ULL << (spin - 1);
      if (seen & bit) {
        fail(ErrorCode::kBlockIndexOutOfRange, "block " + std::to_string(j + 1) +
                                                   " repeats spin " + std::to_string(spin));
      }
      seen |= bit;
    }
  }
}

std::uint64_t block_mask(const SpinChainConfig& cfg, std::size_t block) {
  std::uint64_t mask = 0;
  for (int spin : cfg.blocks.at(block)) {
    mask |= 1ULL << bit_of_spin(spin, cfg.num_spins);
  }
  return mask;
}

Observable spin_chain_hamiltonian(const SpinChainConfig& cfg) {
  validate(cfg);
  const int m = cfg.num_spins;
  const Index dim = Index{1} << m;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);

  // X on spin i, or the X string over a block, as a Kronecker product.
  auto x_string = [&](const std::vector<int>& spins) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int s = 1; s <= m; ++s) {
      bool on = false;
      for (int b : spins) on = on || (b == s);
      out = linalg::kron(out, on ? linalg::pauli::x() : linalg::pauli::identity());
    }
    return out;
  };

  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int s = 1; s <= m; ++s) {
    h += cfg.hbar * cfg.omega0 * (id - x_string({s}));
  }
  for (const auto& block : cfg.blocks) {
    h += cfg.hbar * cfg.omega * (id - x_string(block));
  }
  return Observable(h);
}

std::vector<ComplexVector> factor_product_state(const PureState& psi, int num_spins) {
  const Index dim = Index{1} << num_spins;
  if (psi.dim() != dim) {
    fail(ErrorCode::kDimensionMismatch, "state dimension does not match 2^M");
  }
  const ComplexVector& x = psi.amplitudes();
  std::vector<ComplexVector> factors;
  factors.reserve(static_cast<std::size_t>(num_spins));
  for (int spin = 1; spin <= num_spins; ++spin) {
    const int bit = bit_of_spin(spin, num_spins);
    // Reduced density matrix of this spin.
    ComplexMatrix red = ComplexMatrix::Zero(2, 2);
    for (Index i = 0; i < dim; ++i) {
      if ((i >> bit) & 1) continue;
      const Index j = i | (Index{1} << bit);
      red(0, 0) += std::norm(x(i));
      red(1, 1) += std::norm(x(j));
      red(0, 1) += x(i) * std::conj(x(j));
    }
    red(1, 0) = std::conj(red(0, 1));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(red);
    factors.push_back(solver.eigenvectors().col(1));
  }
  const PureState rebuilt = product_state(factors);
  const Complex phase_overlap = rebuilt.amplitudes().dot(x);
  const double residual =
      (x - (phase_overlap / std::abs(phase_overlap)) * rebuilt.amplitudes()).norm();
  if (!(std::abs(phase_overlap) > 0.0) || residual > kProductTolerance) {
    fail(ErrorCode::kNotProductState,
         "state does not factor over spins (residual " + std::to_string(residual) + ")");
  }
  // Put the global phase on the first factor so the product reproduces psi.
  factors.front() *= phase_overlap / std::abs(phase_overlap);
  return factors;
}

PureState product_state(std::span<const ComplexVector> spins) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& s : spins) {
    out = linalg::kron(out, s);
  }
  return PureState::normalized(out.col(0));
}

PureState spin_chain_evolved_state(const SpinChainConfig& cfg, const PureState& psi0, double t) {
  validate(cfg);
  const Index dim = Index{1} << cfg.num_spins;
  if (psi0.dim() != dim) {
    fail(ErrorCode::kDimensionMismatch, "initial state dimension does not match 2^M");
  }
  // The closed form is stated for product initial states; enforce it.
  factor_product_state(psi0, cfg.num_spins);

  // Each factor cos(a) + i sin(a) X_mask flips the bits in `mask`.
  ComplexVector state = psi0.amplitudes();
  auto apply_flip_rotation = [&](std::uint64_t mask, double angle) {
    const Complex c(std::cos(angle), 0.0);
    const Complex is(0.0, std::sin(angle));
    ComplexVector next(dim);
    for (Index i = 0; i < dim; ++i) {
      next(i) = c * state(i) + is * state(static_cast<Index>(static_cast<std::uint64_t>(i) ^ mask));
    }
    state = std::move(next);
  };

  for (int spin = 0; spin < cfg.num_spins; ++spin) {
    apply_flip_rotation(std::uint64_t{1} << (cfg.num_spins - 1 - spin), cfg.omega0 * t);
  }
  for (std::size_t j = 0; j < cfg.blocks.size(); ++j) {
    apply_flip_rotation(block_mask(cfg, j), cfg.omega * t);
  }

  const double global =
      -(cfg.num_spins * cfg.omega0 + static_cast<double>(cfg.blocks.size()) * cfg.omega) * t;
  state *= std::polar(1.0, global);
  return PureState::normalized(state);
}

}  // namespace qsl
