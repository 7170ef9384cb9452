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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace permutwirl {

using cplx = std::complex<double>;

/// Default comparison tolerance for matrix equality and Hermiticity checks.
inline constexpr double kDefaultTol = 1e-10;
/// Off-diagonal threshold at which the Jacobi eigensolver stops sweeping.
inline constexpr double kEigenTol = 1e-12;

/// Dense row-major complex matrix. All comparisons are tolerance based.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-by-row literal, e.g. `{{1, 0}, {0, -1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);
  ComplexMatrix& operator/=(cplx scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator/(ComplexMatrix a, cplx s);

/// Largest entrywise modulus of `a - b`. Throws DimMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);
double max_abs(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);
/// Hilbert-Schmidt inner product Tr(x^dagger y).
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);
/// Outer product |u><v| of two column vectors given as spans.
ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v);

/// Max entry of |a - a^dagger|.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are orthonormal eigenvectors
};

/// Cyclic complex Jacobi. Throws NonSquare, NotHermitian (defect > tol) or
/// ConvergenceFailure.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a,
                                   double tol = kDefaultTol);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tol = kDefaultTol);

/// Sizes of a bipartite system; the composite index is `iA * dB + iB`.
struct BipartiteDims {
  std::size_t dA = 0;
  std::size_t dB = 0;
  std::size_t total() const noexcept { return dA * dB; }
};

enum class Side { A, B };

ComplexMatrix partial_trace(const ComplexMatrix& x, BipartiteDims dims,
                            Side traced);
ComplexMatrix partial_transpose(const ComplexMatrix& x, BipartiteDims dims,
                                Side transposed);

}  // namespace permutwirl
