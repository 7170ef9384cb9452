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

#include <cmath>

#include "permutwirl/coherence.hpp"
#include "permutwirl/error.hpp"
#include "test_util.hpp"

namespace permutwirl {
namespace {

using Catch::Approx;

double binary_entropy(double x) {
  auto h = [](double v) { return v <= 0.0 ? 0.0 : -v * std::log(v); };
  return h(x) + h(1.0 - x);
}

ComplexMatrix diagonal_phase(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  ComplexMatrix dmat(d, d);
  for (std::size_t k = 0; k < d; ++k) dmat(k, k) = std::polar(1.0, angle(rng));
  return dmat;
}

TEST_CASE("dephasing", "[coherence]") {
  const auto diag = validate_density(ComplexMatrix{{0.7, 0.0}, {0.0, 0.3}});
  CHECK_MAT_CLOSE(dephase(diag).matrix(), diag.matrix(), 0.0);
  CHECK_MAT_CLOSE(dephase(maximally_coherent_state(3)).matrix(),
                  ComplexMatrix::identity(3) / 3.0, 1e-16);
  CHECK_MAT_CLOSE(dephase(qubit_from_bloch({0.3, -0.5, 0.4})).matrix(),
                  qubit_from_bloch({0, 0, 0.4}).matrix(), 1e-16);
  CHECK_THROWS_AS(dephase(bell_diagonal_state({0, 0, 0})), Error);
}

TEST_CASE("entropies", "[coherence][entropy]") {
  CHECK(von_neumann_entropy(maximally_coherent_state(4)) == Approx(0.0).margin(1e-12));
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto mixed = validate_density(ComplexMatrix::identity(d) / static_cast<double>(d));
    CHECK(von_neumann_entropy(mixed) == Approx(std::log(static_cast<double>(d))).margin(1e-12));
  }
  // Eigenvalues of the image state at d = 3, p = 0.4 are (0.6, 0.2, 0.2).
  const auto star = maximally_coherent_mixed_state(3, 0.4);
  const double s_expected = -0.6 * std::log(0.6) - 2 * 0.2 * std::log(0.2);
  CHECK(von_neumann_entropy(star) == Approx(s_expected).margin(1e-12));
  CHECK(s_expected == Approx(0.950271).margin(1e-6));

  const std::vector<double> with_zero{0.5, 0.5, 0.0, -1e-13};
  CHECK(shannon_entropy(with_zero) == Approx(std::log(2.0)).margin(1e-15));
  const std::vector<double> negative{0.5, 0.6, -0.1};
  try {
    (void)shannon_entropy(negative);
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }
}

TEST_CASE("l1 coherence", "[coherence][l1]") {
  CHECK(l1_coherence(validate_density(ComplexMatrix{{0.2, 0.0}, {0.0, 0.8}})) == 0.0);
  for (std::size_t d = 1; d <= 6; ++d)
    CHECK(l1_coherence(maximally_coherent_state(d)) ==
          Approx(static_cast<double>(d) - 1.0).margin(1e-14));
  for (const BlochVector r : {BlochVector{0.6, 0.1, 0.1}, BlochVector{-0.3, 0.4, 0.0},
                              BlochVector{0.0, 0.0, 1.0}}) {
    CHECK(l1_coherence(qubit_from_bloch(r)) ==
          Approx(std::hypot(r.r1, r.r2)).margin(1e-15));
  }
  CHECK_THROWS_AS(l1_coherence(bell_diagonal_state({0, 0, 0})), Error);
}

TEST_CASE("relative entropy of coherence", "[coherence][relent]") {
  CHECK(rel_ent_coherence(validate_density(ComplexMatrix{{0.2, 0.0}, {0.0, 0.8}})) ==
        Approx(0.0).margin(1e-12));
  for (std::size_t d = 2; d <= 6; ++d)
    CHECK(rel_ent_coherence(maximally_coherent_state(d)) ==
          Approx(std::log(static_cast<double>(d))).margin(1e-11));

  const double s_star = -0.6 * std::log(0.6) - 0.4 * std::log(0.2);
  CHECK(rel_ent_coherence(maximally_coherent_mixed_state(3, 0.4)) ==
        Approx(std::log(3.0) - s_star).margin(1e-12));
  CHECK(std::log(3.0) - s_star == Approx(0.148341).margin(1e-6));

  // Qubit: h((1 + r3)/2) - h((1 + |r|)/2).
  auto rng = test::make_rng(50);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_bloch(rng);
    const double expected =
        binary_entropy((1.0 + r.r3) / 2.0) - binary_entropy((1.0 + r.norm()) / 2.0);
    CHECK(rel_ent_coherence(qubit_from_bloch(r)) == Approx(expected).margin(1e-11));
  }
}

TEST_CASE("lower bounds on fixed inputs", "[coherence][bound]") {
  CHECK(l1_lower_bound(maximally_coherent_state(3)) == Approx(2.0).margin(1e-14));
  CHECK(l1_lower_bound(qubit_from_bloch({-0.45, 0.2, 0.3})) == Approx(0.45).margin(1e-15));

  CHECK(rel_ent_lower_bound_from_weight(4, 0.0) == 0.0);
  for (std::size_t d = 2; d <= 6; ++d) {
    const double dd = static_cast<double>(d);
    CHECK(rel_ent_lower_bound_from_weight(d, 1.0) == Approx(std::log(dd)).margin(1e-14));
    // Lower endpoint: rho_star = (I - Phi)/(d-1), entropy ln(d-1).
    CHECK(rel_ent_lower_bound_from_weight(d, -1.0 / (dd - 1.0)) ==
          Approx(std::log(dd) - std::log(dd - 1.0)).margin(1e-14));
  }
  CHECK(rel_ent_lower_bound_from_weight(3, 0.4) ==
        Approx(rel_ent_coherence(maximally_coherent_mixed_state(3, 0.4))).margin(1e-12));
  CHECK(rel_ent_lower_bound_from_weight(1, 0.0) == 0.0);

  try {
    (void)rel_ent_lower_bound_from_weight(3, 1.2);
    FAIL("expected ParamOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamOutOfRange);
  }
  CHECK_THROWS_AS(rel_ent_lower_bound_from_weight(3, -0.6), Error);
}

TEST_CASE("coherence reports", "[coherence][report]") {
  for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelEnt}) {
    const auto r = coherence_report(maximally_coherent_state(4), m);
    CHECK(std::abs(r.gap) <= 1e-10);
    CHECK(r.measure == m);
  }
  const auto q = coherence_report(qubit_from_bloch({0.6, 0.1, 0.1}), CoherenceMeasure::L1);
  CHECK(q.value == Approx(std::sqrt(0.37)).margin(1e-15));
  CHECK(q.lower_bound == Approx(0.6).margin(1e-15));
  CHECK(q.gap == Approx(std::sqrt(0.37) - 0.6).margin(1e-15));
  CHECK(to_string(CoherenceMeasure::L1) == "l1");
  CHECK(to_string(CoherenceMeasure::RelEnt) == "relent");
}

TEST_CASE("lower bounds hold on random states", "[coherence][bound][property]") {
  auto rng = test::make_rng(51);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto rho = random_density(d, rng);
      for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelEnt})
        CHECK(coherence_report(rho, m).gap >= -1e-10);

      const auto s = twirl_params(rho);
      const auto star = validate_density(twirl_closed_form(rho.matrix()));
      CHECK(std::abs(l1_lower_bound(rho) - l1_coherence(star)) <= 1e-12);
      CHECK(std::abs(l1_lower_bound(rho) -
                     static_cast<double>(d * (d - 1)) * std::abs(s.a)) == 0.0);
      CHECK(std::abs(rel_ent_lower_bound(rho) -
                     rel_ent_coherence(reconstruct_output_state(s))) <= 1e-9);
    }
  }
}

TEST_CASE("l1 bound is tight for sign-uniform real states", "[coherence][bound]") {
  auto rng = test::make_rng(52);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_nonnegative_real_density(d, rng);
      CHECK(coherence_report(rho, CoherenceMeasure::L1).gap <= 1e-10);
      // Flipping every off-diagonal sign keeps uniformity; conjugating by
      // diag(1, -1, ...) would not, so use the transpose-free negation.
      ComplexMatrix flipped = rho.matrix();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (i != j) flipped(i, j) = -flipped(i, j) / static_cast<double>(d);
      if (hermitian_eigenvalues(flipped).front() < 0.0) continue;
      const auto neg = validate_density(flipped);
      CHECK(std::abs(coherence_report(neg, CoherenceMeasure::L1).gap) <= 1e-10);
    }
  }
  // Mixed signs: the bound is strict.
  const auto mixed_sign = validate_density(ComplexMatrix{
      {1.0 / 3, 0.1, -0.1}, {0.1, 1.0 / 3, 0.1}, {-0.1, 0.1, 1.0 / 3}});
  CHECK(coherence_report(mixed_sign, CoherenceMeasure::L1).gap > 0.3);
}

TEST_CASE("coherence invariances", "[coherence][property]") {
  auto rng = test::make_rng(53);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto rho = random_density(d, rng);
      const auto p = permutation_matrix(random_permutation(d, rng));
      const auto dm = diagonal_phase(d, rng);
      const auto permuted = validate_density(p * rho.matrix() * dagger(p));
      const auto phased = validate_density(dm * rho.matrix() * dagger(dm));
      for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelEnt}) {
        CHECK(std::abs(coherence(permuted, m) - coherence(rho, m)) <= 1e-10);
        CHECK(std::abs(coherence(phased, m) - coherence(rho, m)) <= 1e-10);
        CHECK(coherence(dephase(rho), m) == Approx(0.0).margin(1e-10));
      }
      CHECK_MAT_CLOSE(dephase(dephase(rho)).matrix(), dephase(rho).matrix(), 0.0);
    }
  }
}

TEST_CASE("weighted pure-state coherence", "[coherence][assist]") {
  // Unnormalized v = sqrt(w) psi gives w * C(psi).
  const double w = 0.3;
  const std::vector<cplx> plus{std::sqrt(w / 2), std::sqrt(w / 2)};
  CHECK(weighted_pure_coherence(plus, CoherenceMeasure::L1) == Approx(w).margin(1e-15));
  CHECK(weighted_pure_coherence(plus, CoherenceMeasure::RelEnt) ==
        Approx(w * std::log(2.0)).margin(1e-15));
  const std::vector<cplx> zero{0.0, 0.0};
  CHECK(weighted_pure_coherence(zero, CoherenceMeasure::RelEnt) == 0.0);
}

TEST_CASE("assistance estimator", "[coherence][assist]") {
  const auto pure = maximally_coherent_state(3);
  for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelEnt}) {
    for (std::size_t samples : {1, 10, 200}) {
      const auto est = assistance_estimate(pure, m, samples, 7);
      CHECK(est.value == Approx(coherence(pure, m)).margin(1e-10));
      CHECK(est.samples == samples);
      CHECK(est.seed == 7);
    }
  }

  // The |+>, |-> decomposition of I/2 reaches the qubit maximum 1.
  const auto mixed = validate_density(ComplexMatrix::identity(2) * 0.5);
  const auto est = assistance_estimate(mixed, CoherenceMeasure::L1, 2000, 11);
  CHECK(est.value <= 1.0 + 1e-12);
  CHECK(est.value >= 0.97);

  try {
    (void)assistance_estimate(mixed, CoherenceMeasure::L1, 0, 1);
    FAIL("expected SampleCountZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SampleCountZero);
  }
}

TEST_CASE("assistance estimator properties", "[coherence][assist][property]") {
  auto rng = test::make_rng(54);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_density(d, rng);
      const std::uint64_t seed = 100 + trial;
      double prev = -1.0;
      for (std::size_t samples : {1, 5, 50, 300}) {
        const double v = assistance_estimate(rho, CoherenceMeasure::L1, samples, seed).value;
        CHECK(v >= prev);
        prev = v;
      }
      CHECK(assistance_estimate(rho, CoherenceMeasure::L1, 50, seed).value ==
            assistance_estimate(rho, CoherenceMeasure::L1, 50, seed).value);

      // Convexity gives C <= any decomposition average. Upper bounds:
      // sum_{i != k} sqrt(rho_ii rho_kk) for l1, S(diag rho) for relent.
      double l1_cap = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          if (i != k)
            l1_cap += std::sqrt(rho.matrix()(i, i).real() * rho.matrix()(k, k).real());
      const double l1 = assistance_estimate(rho, CoherenceMeasure::L1, 100, seed).value;
      CHECK(l1 >= l1_coherence(rho) - 1e-10);
      CHECK(l1 <= l1_cap + 1e-10);
      const double re = assistance_estimate(rho, CoherenceMeasure::RelEnt, 100, seed).value;
      CHECK(re >= rel_ent_coherence(rho) - 1e-10);
      CHECK(re <= von_neumann_entropy(dephase(rho)) + 1e-10);
    }
  }
}

}  // namespace
}  // namespace permutwirl
