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

#include "permutwirl/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "permutwirl/error.hpp"
#include "permutwirl/random.hpp"

namespace permutwirl {

namespace {

void require_single_system(const DensityMatrix& rho, const char* op) {
  if (rho.is_bipartite()) {
    throw Error(ErrorCode::DimMismatch,
                std::string(op) + " expects a single-system state");
  }
}

double xlogx(double x) { return x <= 0.0 ? 0.0 : x * std::log(x); }

// Eigenvalue threshold below which a direction is treated as outside the
// support when building decompositions.
constexpr double kRankTol = 1e-12;

constexpr double kLocalSteps[] = {0.3, 0.1, 0.03, 0.01};

// Modified Gram-Schmidt on the columns, in place.
void orthonormalize_columns(ComplexMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx dot{};
      for (std::size_t r = 0; r < v.rows(); ++r) dot += std::conj(v(r, prev)) * v(r, c);
      for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) -= dot * v(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < v.rows(); ++r) norm += std::norm(v(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) /= norm;
  }
}

}  // namespace

std::string_view to_string(CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? "l1" : "relent";
}

DensityMatrix dephase(const DensityMatrix& rho) {
  require_single_system(rho, "dephase");
  const std::size_t d = rho.dim();
  ComplexMatrix diag(d, d);
  for (std::size_t i = 0; i < d; ++i) diag(i, i) = rho.matrix()(i, i).real();
  return validate_density(diag, rho.dims());
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < -kEntropyZeroTol) {
      throw Error(ErrorCode::NotPositive,
                  "negative probability " + std::to_string(p) + " in entropy");
    }
    s -= xlogx(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto values = hermitian_eigenvalues(rho.matrix());
  return shannon_entropy(values);
}

double l1_coherence(const DensityMatrix& rho) {
  require_single_system(rho, "l1_coherence");
  const auto& m = rho.matrix();
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::abs(m(i, j));
  return s;
}

double rel_ent_coherence(const DensityMatrix& rho) {
  require_single_system(rho, "rel_ent_coherence");
  std::vector<double> diag(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) diag[i] = rho.matrix()(i, i).real();
  return shannon_entropy(diag) - von_neumann_entropy(rho);
}

double coherence(const DensityMatrix& rho, CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? l1_coherence(rho) : rel_ent_coherence(rho);
}

double l1_lower_bound(const DensityMatrix& rho) {
  require_single_system(rho, "l1_lower_bound");
  const TwirlSummary s = twirl_params(rho);
  const double d = static_cast<double>(s.d);
  return d * (d - 1.0) * std::abs(s.a);
}

double rel_ent_lower_bound_from_weight(std::size_t d, double p, double tol) {
  if (d == 0) throw Error(ErrorCode::ParamOutOfRange, "d must be >= 1");
  if (d == 1) return 0.0;
  const double dd = static_cast<double>(d);
  const double lo = -1.0 / (dd - 1.0);
  if (p < lo - tol || p > 1.0 + tol) {
    throw Error(ErrorCode::ParamOutOfRange,
                "p = " + std::to_string(p) + " outside [" + std::to_string(lo) + ", 1]");
  }
  p = std::clamp(p, lo, 1.0);
  const double big = (dd - 1.0) * p + 1.0;  // d times the top eigenvalue
  const double small = 1.0 - p;             // d times each remaining eigenvalue
  return (1.0 - 1.0 / dd) * xlogx(small) + xlogx(big) / dd;
}

double rel_ent_lower_bound(const DensityMatrix& rho) {
  require_single_system(rho, "rel_ent_lower_bound");
  const TwirlSummary s = twirl_params(rho);
  return rel_ent_lower_bound_from_weight(s.d, s.p);
}

double coherence_lower_bound(const DensityMatrix& rho, CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? l1_lower_bound(rho) : rel_ent_lower_bound(rho);
}

CoherenceReport coherence_report(const DensityMatrix& rho, CoherenceMeasure m) {
  CoherenceReport r;
  r.measure = m;
  r.value = coherence(rho, m);
  r.lower_bound = coherence_lower_bound(rho, m);
  r.gap = r.value - r.lower_bound;
  return r;
}

double weighted_pure_coherence(std::span<const cplx> v, CoherenceMeasure m) {
  if (m == CoherenceMeasure::L1) {
    // ||v||^2 ((sum_i |v_i| / ||v||)^2 - 1)
    double abs_sum = 0.0;
    double norm2 = 0.0;
    for (const auto& z : v) {
      abs_sum += std::abs(z);
      norm2 += std::norm(z);
    }
    return abs_sum * abs_sum - norm2;
  }
  double norm2 = 0.0;
  for (const auto& z : v) norm2 += std::norm(z);
  if (norm2 <= 0.0) return 0.0;
  double s = 0.0;
  for (const auto& z : v) s -= xlogx(std::norm(z) / norm2);
  return norm2 * s;
}

AssistanceEstimate assistance_estimate(const DensityMatrix& rho, CoherenceMeasure m,
                                       std::size_t samples, std::uint64_t seed) {
  require_single_system(rho, "assistance_estimate");
  if (samples == 0) {
    throw Error(ErrorCode::SampleCountZero, "assistance_estimate needs samples >= 1");
  }
  const std::size_t d = rho.dim();
  const auto eig = hermitian_eigen(rho.matrix());

  // Columns sqrt(lambda_i) |v_i> over the support.
  std::vector<std::vector<cplx>> support;
  for (std::size_t i = 0; i < d; ++i) {
    if (eig.values[i] <= kRankTol) continue;
    const double amp = std::sqrt(eig.values[i]);
    std::vector<cplx> w(d);
    for (std::size_t r = 0; r < d; ++r) w[r] = amp * eig.vectors(r, i);
    support.push_back(std::move(w));
  }
  const std::size_t rank = support.size();

  auto average_coherence = [&](const ComplexMatrix* isometry) {
    const std::size_t k = isometry ? isometry->rows() : rank;
    double total = 0.0;
    std::vector<cplx> w(d);
    for (std::size_t j = 0; j < k; ++j) {
      if (isometry) {
        std::fill(w.begin(), w.end(), cplx{});
        for (std::size_t i = 0; i < rank; ++i) {
          const cplx coeff = (*isometry)(j, i);
          for (std::size_t r = 0; r < d; ++r) w[r] += coeff * support[i][r];
        }
        total += weighted_pure_coherence(w, m);
      } else {
        total += weighted_pure_coherence(support[j], m);
      }
    }
    return total;
  };

  AssistanceEstimate est{m, average_coherence(nullptr), samples, seed};
  Rng rng(seed);
  const std::size_t kmax = d + 2;
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix best;  // best sampled isometry so far, empty until one wins
  std::size_t fresh = 0;
  for (std::size_t s = 1; s < samples; ++s) {
    ComplexMatrix isometry;
    if (s % 2 == 0 && best.rows() > 0) {
      // Local move around the incumbent; pure Haar sampling alone converges
      // slowly once the optimum sits in a thin region of the Stiefel manifold.
      const double step = kLocalSteps[(s / 2) % std::size(kLocalSteps)];
      isometry = best;
      for (auto& z : isometry.entries()) z += step * cplx(normal(rng), normal(rng));
      orthonormalize_columns(isometry);
    } else {
      const std::size_t k = rank + fresh++ % (kmax - rank + 1);
      const ComplexMatrix u = haar_unitary(k, rng);
      isometry = ComplexMatrix(k, rank);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < rank; ++i) isometry(j, i) = u(j, i);
    }
    const double value = average_coherence(&isometry);
    if (value > est.value) {
      est.value = value;
      best = std::move(isometry);
    }
  }
  return est;
}

}  // namespace permutwirl
