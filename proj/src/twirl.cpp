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

#include "permutwirl/twirl.hpp"

#include <cmath>
#include <string>

#include "permutwirl/error.hpp"

namespace permutwirl {

namespace {

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

void require_square(const ComplexMatrix& x, const char* op) {
  if (!x.is_square()) {
    throw Error(ErrorCode::NonSquare, std::string(op) + ": matrix is " +
                                          std::to_string(x.rows()) + "x" +
                                          std::to_string(x.cols()));
  }
}

void require_dims(const ComplexMatrix& x, BipartiteDims dims, const char* op) {
  if (!x.is_square() || x.rows() != dims.total() || dims.total() == 0) {
    throw Error(ErrorCode::DimMismatch,
                std::string(op) + ": matrix " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + " does not match dims (" +
                    std::to_string(dims.dA) + "," + std::to_string(dims.dB) + ")");
  }
}

// E - I
ComplexMatrix off_diagonal_ones(std::size_t d) {
  return all_ones_projector(d) - ComplexMatrix::identity(d);
}

// Sum of the off-diagonal entries, i.e. Tr(x (E - I)).
cplx off_diagonal_sum(const ComplexMatrix& x) {
  cplx s{};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (i != j) s += x(i, j);
  return s;
}

// Guard against group averages that would run for hours: |G| conjugations
// of an n x n matrix cost about |G| n^3 multiply-adds.
void require_affordable(double group_order, std::size_t n, const char* op) {
  const double nn = static_cast<double>(n);
  if (group_order * nn * nn * nn > kMaxBruteForceWork) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::string(op) + ": " + std::to_string(static_cast<long long>(group_order)) +
                    " conjugations of a " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix exceed the brute-force budget");
  }
}

}  // namespace

ComplexMatrix twirl_bruteforce(const ComplexMatrix& x) {
  require_square(x, "twirl_bruteforce");
  const std::size_t d = x.rows();
  if (d > kMaxBruteForceDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "twirl_bruteforce: d = " + std::to_string(d) + " exceeds " +
                    std::to_string(kMaxBruteForceDim));
  }
  ComplexMatrix acc(d, d);
  // (P x P^dagger)(pi(i), pi(j)) = x(i, j)
  for_each_permutation(d, [&](const Permutation& pi) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) acc(pi(i), pi(j)) += x(i, j);
  });
  return acc / factorial(d);
}

ComplexMatrix twirl_closed_form(const ComplexMatrix& x) {
  require_square(x, "twirl_closed_form");
  const std::size_t d = x.rows();
  if (d <= 1) return x;
  const double dd = static_cast<double>(d);
  const cplx diag = trace(x) / dd;
  const cplx off = off_diagonal_sum(x) / (dd * (dd - 1.0));
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = (i == j) ? diag : off;
  return out;
}

TwirlSummary twirl_params(const DensityMatrix& rho, double tol) {
  if (rho.is_bipartite()) {
    throw Error(ErrorCode::DimMismatch, "twirl_params expects a single-system state");
  }
  const std::size_t d = rho.dim();
  if (d == 1) return {0.0, 0.0, 1};
  const cplx sum = off_diagonal_sum(rho.matrix());
  if (std::abs(sum.imag()) > tol) {
    throw Error(ErrorCode::NonRealSum,
                "off-diagonal sum has imaginary part " + std::to_string(sum.imag()));
  }
  const double dd = static_cast<double>(d);
  const double a = sum.real() / (dd * (dd - 1.0));
  return {a, dd * a, d};
}

DensityMatrix reconstruct_output_state(const TwirlSummary& s, double tol) {
  if (s.d == 0) throw Error(ErrorCode::ParamOutOfRange, "d must be >= 1");
  if (s.d == 1) return validate_density(ComplexMatrix::identity(1), {1}, tol);
  const double dd = static_cast<double>(s.d);
  const double lo = -1.0 / (dd * (dd - 1.0));
  const double hi = 1.0 / dd;
  if (s.a < lo - tol || s.a > hi + tol) {
    throw Error(ErrorCode::ParamOutOfRange,
                "a = " + std::to_string(s.a) + " outside [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  }
  ComplexMatrix m(s.d, s.d);
  for (std::size_t i = 0; i < s.d; ++i)
    for (std::size_t j = 0; j < s.d; ++j) m(i, j) = (i == j) ? 1.0 / dd : s.a;
  return validate_density(m, {s.d}, tol);
}

ComplexMatrix twirl_one_sided(const ComplexMatrix& x, BipartiteDims dims, Side side) {
  require_dims(x, dims, "twirl_one_sided");
  const auto [dA, dB] = dims;
  if (side == Side::A) {
    if (dA <= 1) return x;
    const double d = static_cast<double>(dA);
    const ComplexMatrix f = off_diagonal_ones(dA);
    const ComplexMatrix idA = ComplexMatrix::identity(dA);
    const ComplexMatrix marginal = partial_trace(x, dims, Side::A);
    const ComplexMatrix weighted =
        partial_trace(x * kron(f, ComplexMatrix::identity(dB)), dims, Side::A);
    return kron(idA / d, marginal) + kron(f / (d * (d - 1.0)), weighted);
  }
  if (dB <= 1) return x;
  const double d = static_cast<double>(dB);
  const ComplexMatrix f = off_diagonal_ones(dB);
  const ComplexMatrix idB = ComplexMatrix::identity(dB);
  const ComplexMatrix marginal = partial_trace(x, dims, Side::B);
  const ComplexMatrix weighted =
      partial_trace(x * kron(ComplexMatrix::identity(dA), f), dims, Side::B);
  return kron(marginal, idB / d) + kron(weighted, f / (d * (d - 1.0)));
}

TwoSidedTwirl twirl_two_sided(const ComplexMatrix& x, BipartiteDims dims) {
  require_dims(x, dims, "twirl_two_sided");
  const auto [dA, dB] = dims;
  if (dA < 2 || dB < 2) {
    throw Error(ErrorCode::DimMismatch, "twirl_two_sided needs dA, dB >= 2");
  }
  const ComplexMatrix idA = ComplexMatrix::identity(dA);
  const ComplexMatrix idB = ComplexMatrix::identity(dB);
  const ComplexMatrix fA = off_diagonal_ones(dA);
  const ComplexMatrix fB = off_diagonal_ones(dB);
  const ComplexMatrix basis[4] = {kron(idA, idB), kron(idA, fB), kron(fA, idB),
                                  kron(fA, fB)};

  cplx c[4];
  for (int k = 0; k < 4; ++k) {
    c[k] = hs_inner(basis[k], x) / hs_inner(basis[k], basis[k]).real();
  }

  BipartiteTwirlCoefficients coeffs{
      c[0],
      c[1],
      c[2],
      c[3],
      trace(x * basis[2]),
      trace(x * basis[1]),
      trace(x * basis[3]),
  };
  ComplexMatrix out = c[0] * basis[0];
  for (int k = 1; k < 4; ++k) out += c[k] * basis[k];
  return {std::move(out), coeffs};
}

ComplexMatrix twirl_one_sided_bruteforce(const ComplexMatrix& x,
                                         BipartiteDims dims, Side side) {
  require_dims(x, dims, "twirl_one_sided_bruteforce");
  const std::size_t d = side == Side::A ? dims.dA : dims.dB;
  require_affordable(factorial(d), x.rows(), "twirl_one_sided_bruteforce");
  const ComplexMatrix idA = ComplexMatrix::identity(dims.dA);
  const ComplexMatrix idB = ComplexMatrix::identity(dims.dB);
  ComplexMatrix acc(x.rows(), x.cols());
  for_each_permutation(d, [&](const Permutation& pi) {
    const ComplexMatrix p = permutation_matrix(pi);
    const ComplexMatrix u = side == Side::A ? kron(p, idB) : kron(idA, p);
    acc += u * x * dagger(u);
  });
  return acc / factorial(d);
}

ComplexMatrix twirl_two_sided_bruteforce(const ComplexMatrix& x, BipartiteDims dims) {
  require_dims(x, dims, "twirl_two_sided_bruteforce");
  const double order = factorial(dims.dA) * factorial(dims.dB);
  require_affordable(order, x.rows(), "twirl_two_sided_bruteforce");
  const auto pb = enumerate_permutations(dims.dB);
  ComplexMatrix acc(x.rows(), x.cols());
  for_each_permutation(dims.dA, [&](const Permutation& pi) {
    const ComplexMatrix p = permutation_matrix(pi);
    for (const auto& sigma : pb) {
      const ComplexMatrix u = kron(p, permutation_matrix(sigma));
      acc += u * x * dagger(u);
    }
  });
  return acc / order;
}

ComplexMatrix collective_twirl_bruteforce(const ComplexMatrix& x, std::size_t d) {
  if (d == 0 || d > kMaxCollectiveDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "collective_twirl_bruteforce: d = " + std::to_string(d) +
                    " outside [1, " + std::to_string(kMaxCollectiveDim) + "]");
  }
  require_dims(x, {d, d}, "collective_twirl_bruteforce");
  // (P x P) acts on |i j> as |pi(i) pi(j)>, so conjugation moves entry
  // (i d + j, k d + l) to (pi(i) d + pi(j), pi(k) d + pi(l)).
  const std::size_t n = d * d;
  ComplexMatrix acc(n, n);
  for_each_permutation(d, [&](const Permutation& pi) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t r2 = pi(r / d) * d + pi(r % d);
      for (std::size_t c = 0; c < n; ++c) {
        acc(r2, pi(c / d) * d + pi(c % d)) += x(r, c);
      }
    }
  });
  return acc / factorial(d);
}

DensityMatrix choi_matrix(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::DimMismatch, "choi_matrix needs d >= 2");
  const DensityMatrix omega = maximally_entangled_state(d);
  return validate_density(twirl_one_sided(omega.matrix(), {d, d}, Side::A), {d, d});
}

ComplexMatrix SeparableDecomposition::assembled() const {
  return weight_phi * kron(phi, phi) + weight_complement * kron(complement, complement);
}

SeparableDecomposition choi_separable_decomposition(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::DimMismatch, "decomposition needs d >= 2");
  const double dd = static_cast<double>(d);
  ComplexMatrix phi = maximally_coherent_state(d).matrix();
  ComplexMatrix complement = (ComplexMatrix::identity(d) - phi) / (dd - 1.0);
  return {1.0 / dd, 1.0 - 1.0 / dd, std::move(phi), std::move(complement)};
}

EntanglementBreakingReport entanglement_breaking_certificate(std::size_t d, double tol) {
  EntanglementBreakingReport report;
  report.d = d;
  report.tol = tol;
  report.decomposition = choi_separable_decomposition(d);
  const ComplexMatrix choi = choi_matrix(d).matrix();
  report.residual = max_abs_diff(choi, report.decomposition.assembled());
  if (!report.passed()) {
    throw Error(ErrorCode::CertificateFailed,
                "d = " + std::to_string(d) + ": residual " +
                    std::to_string(report.residual) + " > " + std::to_string(tol));
  }
  return report;
}

}  // namespace permutwirl
