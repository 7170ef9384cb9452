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

// Cyclic Jacobi diagonalization of complex Hermitian matrices.
//
// Each rotation first removes the phase of a(p,q) with a diagonal unitary and
// then applies the classical real symmetric Jacobi rotation to the 2x2 block
// (p,q). Accuracy at the sizes this library targets (d <= 64) is at the level
// of a few ulps times the matrix norm.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "permutwirl/error.hpp"
#include "permutwirl/linalg.hpp"

namespace permutwirl {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// Applies the unitary J (acting on coordinates p, q) as A <- J^dagger A J and
// V <- V J, where J = [[j00, j01], [j10, j11]].
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q,
            cplx j00, cplx j01, cplx j10, cplx j11) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * j00 + akq * j10;
    a(k, q) = akp * j01 + akq * j11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
    a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * j00 + vkq * j10;
    v(k, q) = vkp * j01 + vkq * j11;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& input, double tol) {
  if (!input.is_square()) {
    throw Error(ErrorCode::NonSquare, "hermitian_eigen: matrix is " +
                                          std::to_string(input.rows()) + "x" +
                                          std::to_string(input.cols()));
  }
  const double defect = hermiticity_defect(input);
  if (defect > tol) {
    throw Error(ErrorCode::NotHermitian,
                "hermitian_eigen: max |a - a^dagger| = " + std::to_string(defect));
  }

  const std::size_t n = input.rows();
  ComplexMatrix a = (input + dagger(input)) * 0.5;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  auto sweep_once = [&] {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;  // a(p,q) = mag * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const cplx ph = std::conj(phase);
        rotate(a, v, p, q, c, s, -s * ph, c * ph);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  };

  int sweeps = 0;
  while (off_diagonal_norm(a) > kEigenTol * scale) {
    if (++sweeps > kMaxSweeps) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "hermitian_eigen: no convergence after " +
                      std::to_string(kMaxSweeps) + " sweeps");
    }
    sweep_once();
  }
  // Convergence is quadratic: one more sweep drives the residual
  // off-diagonal mass down to rounding level.
  if (n > 1) sweep_once();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition result{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
  return hermitian_eigen(a, tol).values;
}

}  // namespace permutwirl
