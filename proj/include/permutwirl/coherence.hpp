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
#include <cstdint>
#include <span>
#include <string_view>

#include "permutwirl/states.hpp"
#include "permutwirl/twirl.hpp"

namespace permutwirl {

enum class CoherenceMeasure { L1, RelEnt };

std::string_view to_string(CoherenceMeasure m);

/// Eigenvalues in (-kEntropyZeroTol, 0] count as exact zeros in entropies.
inline constexpr double kEntropyZeroTol = 1e-12;

/// Diagonal part of rho in the reference basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// -Tr(rho ln rho) in nats, with 0 ln 0 = 0. Throws NotPositive for an
/// eigenvalue below -kEntropyZeroTol.
double von_neumann_entropy(const DensityMatrix& rho);
/// Shannon entropy (nats) of a probability vector, same zero convention.
double shannon_entropy(std::span<const double> probabilities);

/// Sum of |rho_ij| over i != j.
double l1_coherence(const DensityMatrix& rho);
/// S(dephase(rho)) - S(rho), in nats.
double rel_ent_coherence(const DensityMatrix& rho);
double coherence(const DensityMatrix& rho, CoherenceMeasure m);

/// d (d - 1) |a|: the l1 coherence of the channel image.
double l1_lower_bound(const DensityMatrix& rho);

/// Relative entropy of coherence of (1 - p) I/d + p |Phi_d><Phi_d| in closed
/// form. Throws ParamOutOfRange unless p is in [-1/(d-1), 1] (within tol).
double rel_ent_lower_bound_from_weight(std::size_t d, double p,
                                       double tol = kDefaultTol);
double rel_ent_lower_bound(const DensityMatrix& rho);

double coherence_lower_bound(const DensityMatrix& rho, CoherenceMeasure m);

struct CoherenceReport {
  CoherenceMeasure measure = CoherenceMeasure::L1;
  double value = 0.0;
  double lower_bound = 0.0;
  double gap = 0.0;  // value - lower_bound, never below -1e-10
};

CoherenceReport coherence_report(const DensityMatrix& rho, CoherenceMeasure m);

/// Coherence of a pure state given by its (not necessarily normalized)
/// amplitude vector, weighted by its squared norm: ||v||^2 C(v / ||v||).
double weighted_pure_coherence(std::span<const cplx> v, CoherenceMeasure m);

/// Lower estimate of the coherence of assistance: the best average pure-state
/// coherence found among `samples` decompositions of rho. The first
/// decomposition is the spectral one; the rest are rho = sum_j |w_j><w_j|
/// with w_j = sum_i V_ji sqrt(lambda_i) |v_i> for Haar-random isometries V of
/// k rows, k cycling through rank(rho) .. d + 2. A fixed seed yields a fixed
/// stream, so the value never decreases as `samples` grows.
struct AssistanceEstimate {
  CoherenceMeasure measure = CoherenceMeasure::L1;
  double value = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

AssistanceEstimate assistance_estimate(const DensityMatrix& rho, CoherenceMeasure m,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace permutwirl
