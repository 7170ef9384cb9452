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

#include "permutwirl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "permutwirl/error.hpp"

namespace permutwirl {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NonSquare,
                std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()));
  }
}

void require_bipartite(const ComplexMatrix& x, BipartiteDims dims,
                       const char* op) {
  if (!x.is_square() || x.rows() != dims.total() || dims.dA == 0 ||
      dims.dB == 0) {
    throw Error(ErrorCode::DimMismatch,
                std::string(op) + ": matrix " + std::to_string(x.rows()) +
                    "x" + std::to_string(x.cols()) + " does not match dims (" +
                    std::to_string(dims.dA) + "," + std::to_string(dims.dB) +
                    ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimMismatch,
                "entry count " + std::to_string(data_.size()) +
                    " != " + std::to_string(rows_ * cols_));
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix t(*this);
  for (auto& z : t.data_) z = std::conj(z);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator/=(cplx scalar) {
  for (auto& z : data_) z /= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimMismatch,
                "matmul: inner dimensions " + std::to_string(a.cols()) +
                    " and " + std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(ComplexMatrix a, cplx s) {
  a *= s;
  return a;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator/(ComplexMatrix a, cplx s) {
  a /= s;
  return a;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.transpose().conj(); }

cplx trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  cplx t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "hs_inner");
  cplx s{};
  auto ex = x.entries();
  auto ey = y.entries();
  for (std::size_t i = 0; i < ex.size(); ++i) s += std::conj(ex[i]) * ey[i];
  return s;
}

ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.is_square() && hermiticity_defect(a) <= tol;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, BipartiteDims dims,
                            Side traced) {
  require_bipartite(x, dims, "partial_trace");
  const auto [dA, dB] = dims;
  if (traced == Side::A) {
    ComplexMatrix out(dB, dB);
    for (std::size_t b = 0; b < dB; ++b)
      for (std::size_t b2 = 0; b2 < dB; ++b2)
        for (std::size_t a = 0; a < dA; ++a) out(b, b2) += x(a * dB + b, a * dB + b2);
    return out;
  }
  ComplexMatrix out(dA, dA);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t a2 = 0; a2 < dA; ++a2)
      for (std::size_t b = 0; b < dB; ++b) out(a, a2) += x(a * dB + b, a2 * dB + b);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& x, BipartiteDims dims,
                                Side transposed) {
  require_bipartite(x, dims, "partial_transpose");
  const auto [dA, dB] = dims;
  ComplexMatrix out(x.rows(), x.cols());
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t b = 0; b < dB; ++b)
      for (std::size_t a2 = 0; a2 < dA; ++a2)
        for (std::size_t b2 = 0; b2 < dB; ++b2) {
          const cplx v = x(a * dB + b, a2 * dB + b2);
          if (transposed == Side::A)
            out(a2 * dB + b, a * dB + b2) = v;
          else
            out(a * dB + b2, a2 * dB + b) = v;
        }
  return out;
}

}  // namespace permutwirl
