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

#include "permutwirl/entanglement.hpp"
#include "permutwirl/error.hpp"
#include "permutwirl/twirl.hpp"
#include "test_util.hpp"

namespace permutwirl {
namespace {

using Catch::Approx;

TEST_CASE("PPT on fixed states", "[entanglement][ppt]") {
  auto rng = test::make_rng(60);
  const auto product = validate_density(
      kron(random_density(2, rng).matrix(), random_density(3, rng).matrix()), {2, 3});
  const auto r = is_ppt(product);
  CHECK(r.is_ppt);
  CHECK(r.min_eig_pt >= 0.0);
  CHECK(separable_verdict(product) == SeparabilityVerdict::Separable);

  // Partial transpose of |Omega><Omega| is SWAP/2, spectrum {1/2 x3, -1/2}.
  const auto omega = maximally_entangled_state(2);
  for (Side side : {Side::A, Side::B}) {
    const auto rep = is_ppt(omega, kDefaultTol, side);
    CHECK_FALSE(rep.is_ppt);
    CHECK_FALSE(rep.boundary);
    CHECK(rep.side == side);
    CHECK(rep.min_eig_pt == Approx(-0.5).margin(1e-12));
  }
  CHECK(separable_verdict(omega) == SeparabilityVerdict::Entangled);
  CHECK(separable_verdict(maximally_entangled_state(3)) == SeparabilityVerdict::Entangled);

  const auto mixed9 = validate_density(ComplexMatrix::identity(9) / 9.0, {3, 3});
  CHECK(separable_verdict(mixed9) == SeparabilityVerdict::Undecided);

  CHECK_THROWS_AS(is_ppt(random_density(4, rng)), Error);
  CHECK(to_string(SeparabilityVerdict::Separable) == "separable");
  CHECK(to_string(SeparabilityVerdict::Entangled) == "entangled");
  CHECK(to_string(SeparabilityVerdict::Undecided) == "undecided");
}

TEST_CASE("PPT boundary flag", "[entanglement][ppt]") {
  // Bell-diagonal face |t1|+|t2|+|t3| = 1 has a zero PT eigenvalue.
  const auto edge = bell_diagonal_state({-0.5, -0.3, -0.2});
  const auto r = is_ppt(edge);
  CHECK(r.is_ppt);
  CHECK(r.boundary);
}

TEST_CASE("PPT verdict does not depend on side", "[entanglement][ppt][property]") {
  auto rng = test::make_rng(61);
  for (const BipartiteDims dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3},
                                   BipartiteDims{3, 2}, BipartiteDims{3, 3}}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto rho = random_bipartite_density(dims, rng);
      const auto a = is_ppt(rho, kDefaultTol, Side::A);
      const auto b = is_ppt(rho, kDefaultTol, Side::B);
      CHECK(a.is_ppt == b.is_ppt);
      CHECK(std::abs(a.min_eig_pt - b.min_eig_pt) <= 1e-10);
    }
  }
}

TEST_CASE("twirled two-qubit states are separable", "[entanglement][property]") {
  auto rng = test::make_rng(62);
  int entangled_inputs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Mix in a Bell projector so a good share of inputs start entangled.
    const double w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto base = random_bipartite_density({2, 2}, rng).matrix();
    const auto rho = validate_density(
        (1.0 - w) * base + w * maximally_entangled_state(2).matrix(), {2, 2});
    if (separable_verdict(rho) == SeparabilityVerdict::Entangled) ++entangled_inputs;
    for (Side side : {Side::A, Side::B}) {
      const auto one = validate_density(twirl_one_sided(rho.matrix(), {2, 2}, side), {2, 2});
      CHECK(separable_verdict(one) == SeparabilityVerdict::Separable);
    }
    const auto two = validate_density(twirl_two_sided(rho.matrix(), {2, 2}).output, {2, 2});
    CHECK(separable_verdict(two) == SeparabilityVerdict::Separable);
  }
  CHECK(entangled_inputs > 50);
}

TEST_CASE("Choi matrices are PPT", "[entanglement][choi]") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto j = choi_matrix(d);
    const auto r = is_ppt(j);
    CHECK(r.is_ppt);
    CHECK(max_abs_diff(choi_separable_decomposition(d).assembled(), j.matrix()) <= 1e-12);
    if (d <= 2) CHECK(separable_verdict(j) == SeparabilityVerdict::Separable);
  }
}

TEST_CASE("Bell octahedron", "[entanglement][bell]") {
  CHECK(bell_octahedron_member({0, 0, 0}));
  CHECK_FALSE(bell_octahedron_member({-1, -1, -1}));
  CHECK(bell_octahedron_member({0.5, -0.5, 0.0}));
  CHECK_FALSE(bell_octahedron_member({0.5, -0.5, 0.01}));

  // 21^3 grid on [-1, 1]^3 kept inside the tetrahedron.
  const int n = 21;
  int in_tetra = 0;
  int separable = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const BellDiagonalParams t{-1.0 + 0.1 * i, -1.0 + 0.1 * j, -1.0 + 0.1 * k};
        if (!bell_params_valid(t, 1e-12)) continue;
        ++in_tetra;
        const auto rho = bell_diagonal_state(t, 1e-12);
        const bool member = bell_octahedron_member(t, 1e-9);
        CHECK(member == is_ppt(rho, 1e-9).is_ppt);
        if (member) ++separable;

        const auto image = twirl_one_sided(rho.matrix(), {2, 2}, Side::A);
        CHECK_MAT_CLOSE(image, bell_diagonal_state({t.t1, 0, 0}).matrix(), 1e-12);
      }
  CHECK(in_tetra > 1000);
  CHECK(separable < in_tetra);
}

}  // namespace
}  // namespace permutwirl
