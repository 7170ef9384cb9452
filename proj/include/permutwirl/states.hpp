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

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "permutwirl/linalg.hpp"

namespace permutwirl {

/// Dimension list of a state: `{d}` for a single system, `{dA, dB}` for a
/// bipartite one.
using Dims = std::vector<std::size_t>;

/// A validated quantum state. Only obtainable through `validate_density`
/// (or `sanitize_density`), so holding one means the invariants held at
/// construction: Hermitian, unit trace, min eigenvalue >= -tol.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  bool is_bipartite() const noexcept { return dims_.size() == 2; }
  /// Throws DimMismatch unless the state is bipartite.
  BipartiteDims bipartite_dims() const;

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, Dims, double);
  friend DensityMatrix sanitize_density(const ComplexMatrix&, Dims, double);
  DensityMatrix(ComplexMatrix m, Dims dims) : mat_(std::move(m)), dims_(std::move(dims)) {}

  ComplexMatrix mat_;
  Dims dims_;
};

/// Throws NonSquare, DimMismatch, NotHermitian, TraceNotOne or NotPositive.
/// An empty `dims` means `{m.rows()}`.
DensityMatrix validate_density(const ComplexMatrix& m, Dims dims = {},
                               double tol = kDefaultTol);
/// Opt-in repair: Hermitizes, clamps negative eigenvalues to zero and
/// renormalizes the trace. Still rejects non-square or zero-trace input.
DensityMatrix sanitize_density(const ComplexMatrix& m, Dims dims = {},
                               double tol = kDefaultTol);

// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double norm() const;
};

DensityMatrix qubit_from_bloch(const BlochVector& r, double tol = kDefaultTol);
BlochVector bloch_of_qubit(const DensityMatrix& rho);

/// A bijection on {0, ..., d-1}; `map()[i]` is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t d);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// P = sum_i |pi(i)><i|.
ComplexMatrix permutation_matrix(const Permutation& p);

inline constexpr std::size_t kMaxEnumerationDim = 10;

/// Visits every permutation of {0..d-1} once, in lexicographic order.
/// Throws DimensionTooLarge for d > kMaxEnumerationDim and for d == 0.
void for_each_permutation(std::size_t d,
                          const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_permutations(std::size_t d);

/// d x d matrix of ones, E = |e><e|.
ComplexMatrix all_ones_projector(std::size_t d);

/// |Phi_d><Phi_d| with |Phi_d> = d^{-1/2} sum_i |i>.
DensityMatrix maximally_coherent_state(std::size_t d);

/// (1 - p) I/d + p |Phi_d><Phi_d|, p in [-1/(d-1), 1]. Throws
/// WeightOutOfRange otherwise (at d = 1 only p in [-inf, 1] matters and the
/// state is [[1]]).
DensityMatrix maximally_coherent_mixed_state(std::size_t d, double p,
                                             double tol = kDefaultTol);

struct BellDiagonalParams {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

/// The four eigenvalues of (1/4)(I + sum_i t_i sigma_i x sigma_i), in the
/// order (1-t1-t2-t3, 1-t1+t2+t3, 1+t1-t2+t3, 1+t1+t2-t3) / 4.
std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& t);
/// True when all four eigenvalues are >= -tol (the tetrahedron).
bool bell_params_valid(const BellDiagonalParams& t, double tol = kDefaultTol);
/// Throws InvalidBellParams naming the violated constraint.
DensityMatrix bell_diagonal_state(const BellDiagonalParams& t,
                                  double tol = kDefaultTol);

/// Normalized maximally entangled state |Omega> = d^{-1/2} sum_i |ii>.
DensityMatrix maximally_entangled_state(std::size_t d);

}  // namespace permutwirl
