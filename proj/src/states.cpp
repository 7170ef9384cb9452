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

#include "permutwirl/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "permutwirl/error.hpp"

namespace permutwirl {

namespace {

Dims resolve_dims(const ComplexMatrix& m, Dims dims) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, "density matrix must be square, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  if (dims.empty()) dims = {m.rows()};
  if (dims.size() > 2) {
    throw Error(ErrorCode::DimMismatch, "at most two subsystems are supported");
  }
  const std::size_t product =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (product != m.rows() || product == 0) {
    throw Error(ErrorCode::DimMismatch,
                "dims product " + std::to_string(product) +
                    " != matrix dimension " + std::to_string(m.rows()));
  }
  return dims;
}

}  // namespace

BipartiteDims DensityMatrix::bipartite_dims() const {
  if (!is_bipartite()) {
    throw Error(ErrorCode::DimMismatch, "state is not bipartite");
  }
  return {dims_[0], dims_[1]};
}

DensityMatrix validate_density(const ComplexMatrix& m, Dims dims, double tol) {
  dims = resolve_dims(m, std::move(dims));
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    throw Error(ErrorCode::NotHermitian,
                "max |rho - rho^dagger| = " + std::to_string(defect));
  }
  const cplx tr = trace(m);
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorCode::TraceNotOne,
                "trace = " + std::to_string(tr.real()) + " + " +
                    std::to_string(tr.imag()) + "i");
  }
  const double min_eig = hermitian_eigenvalues(m, tol).front();
  if (min_eig < -tol) {
    throw Error(ErrorCode::NotPositive,
                "min eigenvalue = " + std::to_string(min_eig));
  }
  return DensityMatrix(m, std::move(dims));
}

DensityMatrix sanitize_density(const ComplexMatrix& m, Dims dims, double tol) {
  dims = resolve_dims(m, std::move(dims));
  const ComplexMatrix herm = (m + dagger(m)) * 0.5;
  auto eig = hermitian_eigen(herm, std::max(tol, hermiticity_defect(herm)));
  const std::size_t n = herm.rows();
  ComplexMatrix repaired(n, n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::max(0.0, eig.values[k]);
    total += lambda;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        repaired(i, j) += lambda * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  if (total <= 0.0) {
    throw Error(ErrorCode::TraceNotOne, "no positive spectral weight to renormalize");
  }
  repaired /= total;
  return DensityMatrix(std::move(repaired), std::move(dims));
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

DensityMatrix qubit_from_bloch(const BlochVector& r, double tol) {
  if (r.norm() > 1.0 + tol) {
    throw Error(ErrorCode::BlochOutsideBall,
                "|r| = " + std::to_string(r.norm()) + " > 1");
  }
  ComplexMatrix m{{0.5 * (1.0 + r.r3), 0.5 * cplx(r.r1, -r.r2)},
                  {0.5 * cplx(r.r1, r.r2), 0.5 * (1.0 - r.r3)}};
  return validate_density(m, {2}, tol);
}

BlochVector bloch_of_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::DimMismatch,
                "Bloch vector needs a qubit, got dimension " + std::to_string(rho.dim()));
  }
  const auto& m = rho.matrix();
  return {trace(m * pauli_x()).real(), trace(m * pauli_y()).real(),
          trace(m * pauli_z()).real()};
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw Error(ErrorCode::ValidationError, "map is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::size_t> m(d);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::DimMismatch, "composing permutations of different size");
  }
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[i] = map_[other.map_[i]];
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[map_[i]] = i;
  return Permutation(std::move(m));
}

ComplexMatrix permutation_matrix(const Permutation& p) {
  ComplexMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p(i), i) = 1.0;
  return m;
}

void for_each_permutation(std::size_t d,
                          const std::function<void(const Permutation&)>& visit) {
  if (d == 0 || d > kMaxEnumerationDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "permutation enumeration needs 1 <= d <= " +
                    std::to_string(kMaxEnumerationDim) + ", got " + std::to_string(d));
  }
  std::vector<std::size_t> m(d);
  std::iota(m.begin(), m.end(), 0);
  do {
    visit(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
}

std::vector<Permutation> enumerate_permutations(std::size_t d) {
  std::vector<Permutation> all;
  for_each_permutation(d, [&](const Permutation& p) { all.push_back(p); });
  return all;
}

ComplexMatrix all_ones_projector(std::size_t d) {
  return ComplexMatrix(d, d, std::vector<cplx>(d * d, 1.0));
}

DensityMatrix maximally_coherent_state(std::size_t d) {
  return validate_density(all_ones_projector(d) / static_cast<double>(d), {d});
}

DensityMatrix maximally_coherent_mixed_state(std::size_t d, double p, double tol) {
  if (d == 0) throw Error(ErrorCode::DimMismatch, "d must be >= 1");
  const double lower = d > 1 ? -1.0 / static_cast<double>(d - 1) : -HUGE_VAL;
  if (p < lower - tol || p > 1.0 + tol) {
    throw Error(ErrorCode::WeightOutOfRange,
                "p = " + std::to_string(p) + " outside [" + std::to_string(lower) +
                    ", 1]");
  }
  const double dd = static_cast<double>(d);
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = (i == j) ? 1.0 / dd : p / dd;
  return validate_density(m, {d}, tol);
}

std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& t) {
  return {0.25 * (1.0 - t.t1 - t.t2 - t.t3), 0.25 * (1.0 - t.t1 + t.t2 + t.t3),
          0.25 * (1.0 + t.t1 - t.t2 + t.t3), 0.25 * (1.0 + t.t1 + t.t2 - t.t3)};
}

bool bell_params_valid(const BellDiagonalParams& t, double tol) {
  const auto ev = bell_diagonal_eigenvalues(t);
  return std::all_of(ev.begin(), ev.end(), [&](double x) { return x >= -tol; });
}

DensityMatrix bell_diagonal_state(const BellDiagonalParams& t, double tol) {
  static constexpr const char* kConstraints[] = {
      "1 - t1 - t2 - t3 >= 0", "1 - t1 + t2 + t3 >= 0", "1 + t1 - t2 + t3 >= 0",
      "1 + t1 + t2 - t3 >= 0"};
  const auto ev = bell_diagonal_eigenvalues(t);
  for (std::size_t k = 0; k < 4; ++k) {
    if (ev[k] < -tol) {
      throw Error(ErrorCode::InvalidBellParams,
                  std::string("violates ") + kConstraints[k] + " (value " +
                      std::to_string(4.0 * ev[k]) + ")");
    }
  }
  const auto sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  ComplexMatrix m = ComplexMatrix::identity(4) + t.t1 * kron(sx, sx) +
                    t.t2 * kron(sy, sy) + t.t3 * kron(sz, sz);
  m *= 0.25;
  return validate_density(m, {2, 2}, tol);
}

DensityMatrix maximally_entangled_state(std::size_t d) {
  std::vector<cplx> omega(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) omega[i * d + i] = amp;
  return validate_density(outer(omega, omega), {d, d});
}

}  // namespace permutwirl
