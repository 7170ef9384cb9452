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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <functional>
#include <string>
#include <vector>
#include <cstdint>

#include "permutwirl/linalg.hpp"
#include "permutwirl/random.hpp"
#include "permutwirl/states.hpp"

namespace permutwirl::test {

inline Rng make_rng(std::uint64_t salt = 0) { return Rng(0x5eed'2026ULL + salt); }

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  return ginibre(r, c, rng);
}

/// Spectral projector onto the eigenvectors whose eigenvalue lies within
/// `cluster_tol` of `value`. Degenerate eigenvectors are only defined up to
/// unitary mixing, so tests compare these instead of raw columns.
inline ComplexMatrix spectral_projector(const EigenDecomposition& eig, double value,
                                        double cluster_tol = 1e-8) {
  const std::size_t n = eig.vectors.rows();
  ComplexMatrix proj(n, n);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k] - value) > cluster_tol) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        proj(i, j) += eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return proj;
}

}  // namespace permutwirl::test

#define CHECK_MAT_CLOSE(a, b, tol) CHECK(::permutwirl::max_abs_diff((a), (b)) <= (tol))
#define REQUIRE_MAT_CLOSE(a, b, tol) \
  REQUIRE(::permutwirl::max_abs_diff((a), (b)) <= (tol))
