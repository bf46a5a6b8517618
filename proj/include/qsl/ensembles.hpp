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

#include <cstdint>
#include <span>
#include <vector>

#include "qsl/state.hpp"

namespace qsl {

/// Gaussian Unitary Ensemble with density proportional to
/// exp(-(D/2) Tr H^2): diagonal entries N(0, 1/D), real and imaginary parts
/// of each off-diagonal entry N(0, 1/(2D)).
struct GueConfig {
  Index dim = 3;
  std::uint64_t seed = 0;
};

Observable sample_gue(const GueConfig& cfg);

/// Eigenbasis of an independent GUE draw.
OrthonormalBasis random_basis(Index dim, std::uint64_t seed);

/// Haar-random ket (normalized complex Gaussian vector).
PureState random_pure_state(Index dim, std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
/// rank <= 0 means full rank.
DensityMatrix random_density_matrix(Index dim, std::uint64_t seed, Index rank = 0);

/// Deterministic child seed for stream `stream` of `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// H = hbar omega0 sum_i (1 - X_i) + hbar omega sum_j (1 - S_j), where S_j is
/// the product of X over the spins of block j. Spins are numbered 1..M, spin 1
/// being the leftmost tensor factor.
struct SpinChainConfig {
  int num_spins = 2;
  std::vector<std::vector<int>> blocks{{1, 2}};
  double omega0 = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
};

inline constexpr int kMaxSpins = 10;

void validate(const SpinChainConfig& cfg);

Observable spin_chain_hamiltonian(const SpinChainConfig& cfg);

/// Bit mask of block j in the computational-basis index.
std::uint64_t block_mask(const SpinChainConfig& cfg, std::size_t block);

/// Splits a product ket into single-spin kets (spin 1 first). Throws
/// NotProductState when the reconstruction misses by more than 1e-10.
std::vector<ComplexVector> factor_product_state(const PureState& psi, int num_spins);

/// Tensor product of single-spin kets, spin 1 leftmost.
PureState product_state(std::span<const ComplexVector> spins);

/// exp(-i H t / hbar)|psi0> for a product state psi0 (NotProductState
/// otherwise), from the commuting factor structure of H:
///   e^{-i(M omega0 + Q omega)t} prod_i (cos w0t + i X_i sin w0t)
///                               prod_j (cos wt + i S_j sin wt) |psi0>.
PureState spin_chain_evolved_state(const SpinChainConfig& cfg, const PureState& psi0, double t);

}  // namespace qsl
