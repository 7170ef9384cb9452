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

#include "permutwirl/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "permutwirl/coherence.hpp"
#include "permutwirl/entanglement.hpp"
#include "permutwirl/error.hpp"
#include "permutwirl/random.hpp"
#include "permutwirl/twirl.hpp"

namespace permutwirl::cli {

namespace {

using ClosedForm = std::function<ComplexMatrix(const ComplexMatrix&)>;

// The closed form with the off-diagonal denominator d(d-1) replaced by d^2.
ComplexMatrix faulty_closed_form(const ComplexMatrix& x) {
  const std::size_t n = x.rows();
  if (n <= 1) return x;
  const double d = static_cast<double>(n);
  const ComplexMatrix f = all_ones_projector(n) - ComplexMatrix::identity(n);
  return trace(x) / d * ComplexMatrix::identity(n) + trace(x * f) / (d * d) * f;
}

// Tracks the worst residual of one check.
class Check {
 public:
  Check(std::string name, double tol) : result_{std::move(name), 0.0, tol, {}} {}
  void see(double residual) {
    if (std::isnan(residual)) residual = INFINITY;
    result_.residual = std::max(result_.residual, residual);
  }
  CheckResult done(std::string detail) {
    result_.detail = std::move(detail);
    return result_;
  }

 private:
  CheckResult result_;
};

std::string range_detail(std::size_t lo, std::size_t hi, std::size_t per_d) {
  if (lo > hi) return "no dimensions in range";
  return "d = " + std::to_string(lo) + ".." + std::to_string(hi) + ", " +
         std::to_string(per_d) + " samples per d";
}

void oracle_and_properties(const VerifyOptions& o, const ClosedForm& delta,
                           std::vector<CheckResult>& out) {
  Rng rng(o.seed + 1);
  Check oracle("oracle-equivalence", 1e-10);
  Check idem("idempotence", 1e-10);
  Check unital("unitality", 1e-10);
  Check adjoint("self-adjointness", 1e-10);
  Check transpose("transpose-covariance", 1e-10);
  Check perm("permutation-invariance", 1e-10);
  for (std::size_t d = 1; d <= o.dmax; ++d) {
    unital.see(max_abs_diff(delta(ComplexMatrix::identity(d)), ComplexMatrix::identity(d)));
    for (std::size_t s = 0; s < o.samples; ++s) {
      for (const auto& x : {random_density(d, rng).matrix(), random_hermitian(d, rng)}) {
        const auto dx = delta(x);
        oracle.see(max_abs_diff(twirl_bruteforce(x), dx));
        idem.see(max_abs_diff(delta(dx), dx));
        transpose.see(max_abs_diff(dx.transpose(), delta(x.transpose())));
        const auto p = permutation_matrix(random_permutation(d, rng));
        perm.see(max_abs_diff(p * dx * dagger(p), dx));
        const auto y = random_hermitian(d, rng);
        adjoint.see(std::abs(hs_inner(dx, y) - hs_inner(x, delta(y))));
      }
    }
  }
  const auto detail = range_detail(1, o.dmax, 2 * o.samples);
  for (auto* c : {&oracle, &idem, &unital, &adjoint, &transpose, &perm})
    out.push_back(c->done(detail));
}

void qubit_image(const VerifyOptions& o, const ClosedForm& delta,
                 std::vector<CheckResult>& out) {
  Rng rng(o.seed + 2);
  Check c("qubit-image", 1e-12);
  const std::size_t n = 10 * o.samples;
  for (std::size_t s = 0; s < n; ++s) {
    const auto r = random_bloch(rng);
    const auto img = delta(qubit_from_bloch(r).matrix());
    c.see(max_abs_diff(img, qubit_from_bloch({r.r1, 0.0, 0.0}).matrix()));
  }
  out.push_back(c.done(std::to_string(n) + " Bloch vectors"));
}

void image_state(const VerifyOptions& o, const ClosedForm& delta,
                 std::vector<CheckResult>& out) {
  Rng rng(o.seed + 3);
  Check recon("image-state-reconstruction", 1e-12);
  Check spectrum("image-state-spectrum", 1e-10);
  Check range("twirl-parameter-range", 1e-12);
  for (std::size_t d = 2; d <= o.dmax; ++d) {
    const double dd = static_cast<double>(d);
    for (std::size_t s = 0; s < o.samples; ++s) {
      const auto rho = random_density(d, rng);
      const auto t = twirl_params(rho);
      const auto star = reconstruct_output_state(t);
      recon.see(max_abs_diff(star.matrix(), twirl_bruteforce(rho.matrix())));

      std::vector<double> expected(d, (1.0 - t.p) / dd);
      expected.back() = t.p + (1.0 - t.p) / dd;
      std::sort(expected.begin(), expected.end());
      const auto ev = hermitian_eigenvalues(delta(rho.matrix()));
      for (std::size_t k = 0; k < d; ++k) spectrum.see(std::abs(ev[k] - expected[k]));

      range.see(std::max(-1.0 / (dd * (dd - 1.0)) - t.a, 0.0));
      range.see(std::max(t.a - 1.0 / dd, 0.0));
    }
  }
  const auto detail = range_detail(2, o.dmax, o.samples);
  for (auto* c : {&recon, &spectrum, &range}) out.push_back(c->done(detail));
}

void coherence_bounds(const VerifyOptions& o, const ClosedForm& delta,
                      std::vector<CheckResult>& out) {
  Rng rng(o.seed + 4);
  Check gap("coherence-gap", 1e-10);
  Check l1("l1-bound-closed-form", 1e-12);
  Check relent("relent-bound-formula", 1e-9);
  Check tight("real-state-tightness", 1e-10);
  const std::size_t n = 10 * o.samples;
  for (std::size_t d = 2; d <= o.dmax; ++d) {
    const double dd = static_cast<double>(d);
    for (std::size_t s = 0; s < n; ++s) {
      const auto rho = random_density(d, rng);
      const auto star = validate_density(delta(rho.matrix()));
      for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelEnt})
        gap.see(coherence(star, m) - coherence(rho, m));
      const auto t = twirl_params(rho);
      l1.see(std::abs(l1_lower_bound(rho) - dd * (dd - 1.0) * std::abs(t.a)));
      l1.see(std::abs(l1_lower_bound(rho) - l1_coherence(star)));
      relent.see(std::abs(rel_ent_lower_bound(rho) - rel_ent_coherence(star)));
    }
    for (std::size_t s = 0; s < o.samples; ++s) {
      const auto rho = random_nonnegative_real_density(d, rng);
      const auto star = validate_density(delta(rho.matrix()));
      tight.see(std::abs(l1_coherence(rho) - l1_coherence(star)));
    }
  }
  const auto detail = range_detail(2, o.dmax, n);
  for (auto* c : {&gap, &l1, &relent}) out.push_back(c->done(detail));
  out.push_back(tight.done(range_detail(2, o.dmax, o.samples)));
}

void qubit_sweep(const ClosedForm& delta, std::vector<CheckResult>& out) {
  Check l1("qubit-sweep-l1", 1e-10);
  Check order("qubit-sweep-relent-order", 1e-10);
  const std::size_t steps = 200;
  const double r2 = 0.1, r3 = 0.1;
  const double rmax = std::sqrt(1.0 - r2 * r2 - r3 * r3);
  double prev_rho = -INFINITY, prev_star = -INFINITY;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double r1 = rmax * static_cast<double>(i) / static_cast<double>(steps);
    const auto rho = qubit_from_bloch({r1, r2, r3});
    const auto star = validate_density(delta(rho.matrix()));
    l1.see(std::abs(l1_coherence(rho) - std::sqrt(r1 * r1 + r2 * r2)));
    l1.see(std::abs(l1_coherence(star) - r1));
    const double c_rho = rel_ent_coherence(rho);
    const double c_star = rel_ent_coherence(star);
    order.see(c_star - c_rho);
    order.see(prev_rho - c_rho);
    order.see(prev_star - c_star);
    prev_rho = c_rho;
    prev_star = c_star;
  }
  out.push_back(l1.done("r2 = r3 = 0.1, 200 steps"));
  out.push_back(order.done("monotone in r1 and C_r(rho) >= C_r(rho_star)"));
}

void bipartite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Rng rng(o.seed + 5);
  Check one("one-sided-closed-form", 1e-10);
  Check two("two-sided-closed-form", 1e-10);
  Check spectrum("two-qubit-spectrum", 1e-10);
  const std::size_t n = std::max<std::size_t>(o.samples / 2, 1);
  for (const BipartiteDims dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3},
                                   BipartiteDims{3, 3}, BipartiteDims{3, 4}}) {
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = random_bipartite_density(dims, rng).matrix();
      for (Side side : {Side::A, Side::B})
        one.see(max_abs_diff(twirl_one_sided(x, dims, side),
                             twirl_one_sided_bruteforce(x, dims, side)));
      const auto t = twirl_two_sided(x, dims);
      two.see(max_abs_diff(t.output, twirl_two_sided_bruteforce(x, dims)));
      if (dims.dA == 2 && dims.dB == 2) {
        const auto& c = t.coefficients;
        std::vector<double> expected{
            (c.c0 + c.c1 + c.c2 + c.c3).real(), (c.c0 + c.c1 - c.c2 - c.c3).real(),
            (c.c0 - c.c1 + c.c2 - c.c3).real(), (c.c0 - c.c1 - c.c2 + c.c3).real()};
        std::sort(expected.begin(), expected.end());
        const auto ev = hermitian_eigenvalues(t.output);
        for (std::size_t k = 0; k < 4; ++k) spectrum.see(std::abs(ev[k] - expected[k]));
      }
    }
  }
  const auto detail = "dims 2x2, 2x3, 3x3, 3x4, " + std::to_string(n) + " states each";
  out.push_back(one.done(detail));
  out.push_back(two.done(detail));
  out.push_back(spectrum.done(std::to_string(n) + " two-qubit states"));
}

void erasure(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Rng rng(o.seed + 6);
  Check c("entanglement-erasure", 1e-10);
  const std::size_t n = 5 * o.samples;
  std::size_t not_separable = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto rho = random_bipartite_density({2, 2}, rng).matrix();
    for (const auto& img : {twirl_one_sided(rho, {2, 2}, Side::A),
                            twirl_two_sided(rho, {2, 2}).output}) {
      const auto state = validate_density(img, {2, 2});
      c.see(-is_ppt(state).min_eig_pt);
      if (separable_verdict(state) != SeparabilityVerdict::Separable) ++not_separable;
    }
  }
  c.see(not_separable > 0 ? INFINITY : 0.0);
  out.push_back(c.done(std::to_string(n) + " two-qubit states, residual = -min PT eigenvalue"));
}

void choi(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Check cert("eb-certificate", 1e-12);
  Check ppt("choi-ppt", 1e-10);
  for (std::size_t d = 2; d <= o.dmax; ++d) {
    const auto report = entanglement_breaking_certificate(d, INFINITY);
    cert.see(report.residual);
    ppt.see(-is_ppt(choi_matrix(d)).min_eig_pt);
  }
  out.push_back(cert.done(range_detail(2, o.dmax, 1)));
  out.push_back(ppt.done(range_detail(2, o.dmax, 1)));
}

void bell_geometry(std::vector<CheckResult>& out) {
  Check member("bell-octahedron-ppt", 0.0);
  Check image("bell-one-sided-image", 1e-12);
  const int n = 21;
  std::size_t points = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double step = 2.0 / (n - 1);
        const BellDiagonalParams t{-1.0 + step * i, -1.0 + step * j, -1.0 + step * k};
        if (!bell_params_valid(t, 1e-12)) continue;
        ++points;
        const auto rho = bell_diagonal_state(t, 1e-12);
        if (bell_octahedron_member(t, 1e-9) != is_ppt(rho, 1e-9).is_ppt) member.see(1.0);
        image.see(max_abs_diff(twirl_one_sided(rho.matrix(), {2, 2}, Side::A),
                               bell_diagonal_state({t.t1, 0.0, 0.0}).matrix()));
      }
  out.push_back(member.done(std::to_string(points) +
                            " tetrahedron grid points, residual = disagreements"));
  out.push_back(image.done(std::to_string(points) + " tetrahedron grid points"));
}

}  // namespace

bool VerifySummary::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::optional<std::string> VerifySummary::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed()) return c.name;
  return std::nullopt;
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.dmax == 0)
    throw Error(ErrorCode::FlagOutOfRange, "--dmax must be at least 1");
  if (options.dmax > kMaxBruteForceDim)
    throw Error(ErrorCode::DimensionTooLarge,
                "--dmax " + std::to_string(options.dmax) + " exceeds the brute-force limit " +
                    std::to_string(kMaxBruteForceDim));
  if (options.samples == 0)
    throw Error(ErrorCode::FlagOutOfRange, "--samples must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  const ClosedForm delta = options.inject_fault ? ClosedForm(faulty_closed_form)
                                                : ClosedForm(twirl_closed_form);
  VerifySummary summary;
  summary.options = options;
  // A check group that throws (e.g. a corrupted channel producing a
  // non-state) is recorded as a failure instead of aborting the run.
  auto guarded = [&](const char* group, const std::function<void()>& run) {
    try {
      run();
    } catch (const Error& e) {
      summary.checks.push_back({group, INFINITY, 0.0, e.what()});
    }
  };
  auto& out = summary.checks;
  guarded("oracle-and-properties", [&] { oracle_and_properties(options, delta, out); });
  guarded("qubit-image", [&] { qubit_image(options, delta, out); });
  guarded("image-state", [&] { image_state(options, delta, out); });
  guarded("coherence-bounds", [&] { coherence_bounds(options, delta, out); });
  guarded("qubit-sweep", [&] { qubit_sweep(delta, out); });
  guarded("bipartite", [&] { bipartite(options, out); });
  guarded("entanglement-erasure", [&] { erasure(options, out); });
  guarded("choi", [&] { choi(options, out); });
  guarded("bell-geometry", [&] { bell_geometry(out); });
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace permutwirl::cli
