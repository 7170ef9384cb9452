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

#include "permutwirl/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace permutwirl {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = cplx(re, im) / std::sqrt(2.0);
  }
  return g;
}

DensityMatrix random_density(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * dagger(g);
  rho /= trace(rho).real();
  // Round-off leaves ~1e-17 anti-Hermitian noise; project it out.
  rho = (rho + dagger(rho)) * 0.5;
  return validate_density(rho, {d});
}

DensityMatrix random_bipartite_density(BipartiteDims dims, Rng& rng) {
  const DensityMatrix rho = random_density(dims.total(), rng);
  return validate_density(rho.matrix(), {dims.dA, dims.dB});
}

DensityMatrix random_nonnegative_real_density(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (auto& z : g.entries()) z = uniform(rng);
  ComplexMatrix rho = g * g.transpose();
  rho /= trace(rho).real();
  return validate_density(rho, {d});
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return (g + dagger(g)) * 0.5;
}

ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  ComplexMatrix q = ginibre(d, d, rng);
  // Modified Gram-Schmidt on the columns. Dividing each column by its norm
  // is the positive-diagonal-R convention that makes the result Haar.
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj{};
      for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < d; ++i) q(i, k) -= proj * q(i, j);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) q(i, k) /= norm;
  }
  return q;
}

Permutation random_permutation(std::size_t d, Rng& rng) {
  std::vector<std::size_t> m(d);
  std::iota(m.begin(), m.end(), 0);
  // std::shuffle's algorithm is unspecified; Fisher-Yates keeps runs portable.
  for (std::size_t i = d; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(m[i - 1], m[pick(rng)]);
  }
  return Permutation(std::move(m));
}

BlochVector random_bloch(Rng& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  while (true) {
    BlochVector r{uniform(rng), uniform(rng), uniform(rng)};
    if (r.norm() <= 1.0) return r;
  }
}

}  // namespace permutwirl
