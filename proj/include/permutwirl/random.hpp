// Copyright 2026 The permutwirl Authors
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
#include <random>

#include "permutwirl/linalg.hpp"
#include "permutwirl/states.hpp"

namespace permutwirl {

using Rng = std::mt19937_64;

/// rows x cols matrix of i.i.d. standard complex normal entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with square G, i.e. the marginal of a Haar
/// random pure state on d x d.
DensityMatrix random_density(std::size_t d, Rng& rng);
DensityMatrix random_bipartite_density(BipartiteDims dims, Rng& rng);
/// Real state whose entries are all nonnegative (G G^T with G >= 0).
DensityMatrix random_nonnegative_real_density(std::size_t d, Rng& rng);

/// (G + G^dagger) / 2.
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);

/// Haar unitary via Gram-Schmidt QR of a Ginibre matrix with the diagonal of
/// R made positive.
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);

/// Uniformly random element of S_d.
Permutation random_permutation(std::size_t d, Rng& rng);

/// Uniform point in the unit Bloch ball.
BlochVector random_bloch(Rng& rng);

}  // namespace permutwirl
