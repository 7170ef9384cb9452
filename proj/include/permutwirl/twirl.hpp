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

#include <cstddef>

#include "permutwirl/linalg.hpp"
#include "permutwirl/states.hpp"

namespace permutwirl {

/// Largest dimension accepted by the single-system brute-force average.
inline constexpr std::size_t kMaxBruteForceDim = 9;
/// Largest local dimension accepted by the collective brute-force average.
inline constexpr std::size_t kMaxCollectiveDim = 7;
// Multiply-add budget for the explicit bipartite group averages.
inline constexpr double kMaxBruteForceWork = 5e9;

/// Average of P x P^dagger over all d! permutation matrices, accumulated in
/// lexicographic order and divided by d! once at the end.
ComplexMatrix twirl_bruteforce(const ComplexMatrix& x);

/// Closed form of the same average:
///   Tr(x) I/d + Tr(x (E - I)) (E - I) / (d (d - 1)).
/// At d = 1 the channel is the identity map.
ComplexMatrix twirl_closed_form(const ComplexMatrix& x);

/// The two scalars that fix the image of a state under the channel.
///   a: common off-diagonal entry, sum_{i != j} rho_ij / (d (d - 1))
///   p: weight of |Phi_d><Phi_d| in the image, equal to d * a
struct TwirlSummary {
  double a = 0.0;
  double p = 0.0;
  std::size_t d = 0;
};

/// Throws NonRealSum when the off-diagonal sum has an imaginary part
/// beyond tol, and DimMismatch for bipartite input.
TwirlSummary twirl_params(const DensityMatrix& rho, double tol = kDefaultTol);

/// Rebuilds the image state from (a, d). Throws ParamOutOfRange when a
/// lies outside [-1/(d(d-1)), 1/d].
DensityMatrix reconstruct_output_state(const TwirlSummary& s,
                                       double tol = kDefaultTol);

/// Channel applied to one factor of a bipartite operator.
ComplexMatrix twirl_one_sided(const ComplexMatrix& x, BipartiteDims dims,
                              Side side);

/// Expansion of the two-sided image in the orthogonal operator basis
///   B0 = I x I, B1 = I x (E_B - I), B2 = (E_A - I) x I,
///   B3 = (E_A - I) x (E_B - I),
/// i.e. c_k = <B_k, x> / <B_k, B_k>.
///
/// gamma1..gamma3 are the unnormalized overlaps
///   gamma1 = Tr(x (E_A - I) x I), gamma2 = Tr(x I x (E_B - I)),
///   gamma3 = Tr(x (E_A - I) x (E_B - I)),
/// so c1 = gamma2 / (dA dB (dB-1)), c2 = gamma1 / (dA (dA-1) dB) and
/// c3 = gamma3 / (dA (dA-1) dB (dB-1)).
struct BipartiteTwirlCoefficients {
  cplx c0, c1, c2, c3;
  cplx gamma1, gamma2, gamma3;
};

struct TwoSidedTwirl {
  ComplexMatrix output;
  BipartiteTwirlCoefficients coefficients;
};

/// Requires dA, dB >= 2.
TwoSidedTwirl twirl_two_sided(const ComplexMatrix& x, BipartiteDims dims);

/// Reference averages over explicit permutation matrices, used as oracles
/// for the bipartite closed forms.
ComplexMatrix twirl_one_sided_bruteforce(const ComplexMatrix& x,
                                         BipartiteDims dims, Side side);
ComplexMatrix twirl_two_sided_bruteforce(const ComplexMatrix& x,
                                         BipartiteDims dims);

/// (1/d!) sum_pi (P x P) x (P x P)^dagger for a d^2 x d^2 operator, d <= 7.
/// No closed form is known; this is the only evaluation route.
ComplexMatrix collective_twirl_bruteforce(const ComplexMatrix& x, std::size_t d);

/// Choi matrix (Delta x id)(|Omega><Omega|) as a {d, d} state.
DensityMatrix choi_matrix(std::size_t d);

/// Two-term separable decomposition of the Choi matrix:
///   (1/d) Phi x Phi + (1 - 1/d) Q x Q,  Q = (I - Phi) / (d - 1).
struct SeparableDecomposition {
  double weight_phi = 0.0;
  double weight_complement = 0.0;
  ComplexMatrix phi;         // |Phi_d><Phi_d|
  ComplexMatrix complement;  // (I - Phi) / (d - 1)
  ComplexMatrix assembled() const;
};

SeparableDecomposition choi_separable_decomposition(std::size_t d);

struct EntanglementBreakingReport {
  std::size_t d = 0;
  double residual = 0.0;
  double tol = 0.0;
  SeparableDecomposition decomposition;
  bool passed() const { return residual <= tol; }
};

/// Computes the Choi matrix through the one-sided closed form and compares it
/// with the explicit separable decomposition. Throws CertificateFailed when
/// the residual exceeds tol.
EntanglementBreakingReport entanglement_breaking_certificate(std::size_t d,
                                                             double tol = 1e-12);

}  // namespace permutwirl
