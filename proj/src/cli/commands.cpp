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

#include "permutwirl/cli/commands.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "permutwirl/cli/state_io.hpp"
#include "permutwirl/coherence.hpp"
#include "permutwirl/entanglement.hpp"
#include "permutwirl/twirl.hpp"

namespace permutwirl::cli {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json coefficients_json(const BipartiteTwirlCoefficients& c) {
  return {{"c0", complex_json(c.c0)},         {"c1", complex_json(c.c1)},
          {"c2", complex_json(c.c2)},         {"c3", complex_json(c.c3)},
          {"gamma1", complex_json(c.gamma1)}, {"gamma2", complex_json(c.gamma2)},
          {"gamma3", complex_json(c.gamma3)}};
}

CoherenceMeasure parse_measure(const std::string& name) {
  if (name == "l1") return CoherenceMeasure::L1;
  if (name == "relent") return CoherenceMeasure::RelEnt;
  throw Error(ErrorCode::FlagOutOfRange, "unknown measure '" + name + "'");
}

// Relative entropy values are in nats unless bits were asked for.
double in_units(double v, CoherenceMeasure m, bool bits) {
  return bits && m == CoherenceMeasure::RelEnt ? v / std::log(2.0) : v;
}

std::string resolve_side(const std::string& side, bool bipartite) {
  if (side == "auto") return bipartite ? "both" : "none";
  if (side == "none" || side == "A" || side == "B" || side == "both") {
    if (!bipartite && side != "none")
      throw Error(ErrorCode::FlagOutOfRange,
                  "--side " + side + " needs a bipartite input (dims of length 2)");
    return side;
  }
  throw Error(ErrorCode::FlagOutOfRange, "unknown side '" + side + "'");
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooLarge: return kExitDimensionGuard;
    case ErrorCode::CertificateFailed: return kExitVerifyFailed;
    default: return kExitInvalid;
  }
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("PERMUTWIRL_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-')
    throw Error(ErrorCode::FlagOutOfRange,
                std::string("PERMUTWIRL_SEED is not an unsigned integer: '") + env + "'");
  return v;
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CommandResult run_twirl(const TwirlOptions& o) {
  if (o.method != "closed" && o.method != "brute")
    throw Error(ErrorCode::FlagOutOfRange, "unknown method '" + o.method + "'");
  const bool brute = o.method == "brute";
  const StateFile in = read_state(o.input);
  if (!o.raw) (void)to_density(in);
  const std::string side = resolve_side(o.side, in.dims.size() == 2);

  json report{{"method", o.method}, {"side", side}, {"dims", in.dims}};
  StateFile result{in.dims, {}, std::nullopt};
  if (side == "none") {
    // A bipartite input twirled as a whole is a single system of size dA dB.
    result.matrix = brute ? twirl_bruteforce(in.matrix) : twirl_closed_form(in.matrix);
    if (!o.raw) {
      const auto s = twirl_params(validate_density(in.matrix));
      report["summary"] = {{"a", s.a}, {"p", s.p}, {"d", s.d}};
    }
  } else {
    const BipartiteDims dims{in.dims[0], in.dims[1]};
    if (side == "both") {
      result.matrix = brute ? twirl_two_sided_bruteforce(in.matrix, dims)
                            : twirl_two_sided(in.matrix, dims).output;
      // Twirling is idempotent, so projecting the output recovers the
      // coefficients of the input whichever method produced it.
      report["coefficients"] = coefficients_json(twirl_two_sided(result.matrix, dims).coefficients);
    } else {
      const Side s = side == "A" ? Side::A : Side::B;
      result.matrix = brute ? twirl_one_sided_bruteforce(in.matrix, dims, s)
                            : twirl_one_sided(in.matrix, dims, s);
    }
  }
  if (!o.raw) (void)validate_density(result.matrix, result.dims);
  result.label = "twirl(side=" + side + ", method=" + o.method + ")" +
                 (in.label ? " of " + *in.label : std::string());

  CommandResult r;
  if (!o.out) {
    report["state"] = json::parse(dump_state(result));
    r.out = report.dump(2) + "\n";
  } else if (*o.out == "-") {
    r.out = dump_state(result);
    r.err = report.dump(2) + "\n";
  } else {
    write_text(*o.out, dump_state(result));
    report["output_file"] = *o.out;
    r.out = report.dump(2) + "\n";
  }
  return r;
}

CommandResult run_coherence(const CoherenceOptions& o) {
  std::vector<CoherenceMeasure> measures;
  if (o.measure == "both")
    measures = {CoherenceMeasure::L1, CoherenceMeasure::RelEnt};
  else
    measures = {parse_measure(o.measure)};

  const StateFile in = read_state(o.input);
  const DensityMatrix rho = to_density(in);
  if (rho.is_bipartite())
    throw Error(ErrorCode::DimMismatch, "coherence expects a single-system state");
  const TwirlSummary t = twirl_params(rho);

  json report{{"dim", rho.dim()},
              {"units", o.bits ? "bits" : "nats"},
              {"twirl", {{"a", t.a}, {"p", t.p}}}};
  if (in.label) report["label"] = *in.label;
  json reports = json::array();
  for (auto m : measures) {
    const auto c = coherence_report(rho, m);
    reports.push_back({{"measure", to_string(m)},
                       {"value", in_units(c.value, m, o.bits)},
                       {"lower_bound", in_units(c.lower_bound, m, o.bits)},
                       {"gap", in_units(c.gap, m, o.bits)}});
  }
  report["reports"] = std::move(reports);

  if (o.assist_samples > 0) {
    const std::uint64_t seed = resolve_seed(o.seed);
    const DensityMatrix star = reconstruct_output_state(t);
    json assist = json::array();
    for (auto m : measures) {
      // Same seed on both sides: matched sampling budgets.
      const auto a = assistance_estimate(rho, m, o.assist_samples, seed);
      const auto b = assistance_estimate(star, m, o.assist_samples, seed);
      assist.push_back({{"measure", to_string(m)},
                        {"samples", o.assist_samples},
                        {"seed", seed},
                        {"rho", in_units(a.value, m, o.bits)},
                        {"rho_star", in_units(b.value, m, o.bits)}});
    }
    report["assistance"] = std::move(assist);
  }
  return {report.dump(2) + "\n", "", kExitOk};
}

CommandResult run_sweep_qubit(const SweepQubitOptions& o) {
  if (!std::isfinite(o.r2) || !std::isfinite(o.r3) || o.r2 * o.r2 + o.r3 * o.r3 > 1.0)
    throw Error(ErrorCode::FlagOutOfRange, "need r2^2 + r3^2 <= 1");
  if (o.steps == 0) throw Error(ErrorCode::FlagOutOfRange, "--steps must be at least 1");

  const double rmax = std::sqrt(1.0 - o.r2 * o.r2 - o.r3 * o.r3);
  const double scale = o.bits ? 1.0 / std::log(2.0) : 1.0;
  std::ostringstream csv;
  csv << "r1,l1_rho,l1_rho_star,relent_rho,relent_rho_star\n";
  for (std::size_t i = 0; i <= o.steps; ++i) {
    // Clamp so rounding never pushes the last point outside the ball.
    const double r1 = std::min(rmax * static_cast<double>(i) / static_cast<double>(o.steps), rmax);
    const auto rho = qubit_from_bloch({r1, o.r2, o.r3});
    const auto star = reconstruct_output_state(twirl_params(rho));
    csv << csv_number(r1) << ',' << csv_number(l1_coherence(rho)) << ','
        << csv_number(l1_coherence(star)) << ','
        << csv_number(scale * rel_ent_coherence(rho)) << ','
        << csv_number(scale * rel_ent_coherence(star)) << '\n';
  }
  write_text(o.out, csv.str());
  return {};
}

CommandResult run_sweep_bell(const SweepBellOptions& o) {
  if (o.grid < 2) throw Error(ErrorCode::FlagOutOfRange, "--grid must be at least 2");
  if (o.grid > 201) throw Error(ErrorCode::DimensionTooLarge, "--grid above 201");

  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  std::ostringstream csv;
  csv << "t1,t2,t3,in_octahedron,ppt_before,ppt_after_one_sided,t1_image\n";
  const double step = 2.0 / static_cast<double>(o.grid - 1);
  for (std::size_t i = 0; i < o.grid; ++i)
    for (std::size_t j = 0; j < o.grid; ++j)
      for (std::size_t k = 0; k < o.grid; ++k) {
        const BellDiagonalParams t{-1.0 + step * static_cast<double>(i),
                                   -1.0 + step * static_cast<double>(j),
                                   -1.0 + step * static_cast<double>(k)};
        if (!bell_params_valid(t, 1e-12)) continue;
        const auto rho = bell_diagonal_state(t, 1e-12);
        const auto image =
            validate_density(twirl_one_sided(rho.matrix(), {2, 2}, Side::A), {2, 2});
        csv << csv_number(t.t1) << ',' << csv_number(t.t2) << ',' << csv_number(t.t3) << ','
            << bell_octahedron_member(t) << ',' << is_ppt(rho).is_ppt << ','
            << is_ppt(image).is_ppt << ','
            << csv_number(trace(image.matrix() * xx).real()) << '\n';
      }
  write_text(o.out, csv.str());
  return {};
}

CommandResult run_verify_command(const VerifyCommandOptions& o) {
  VerifyOptions v;
  v.dmax = o.dmax;
  v.samples = o.samples;
  v.seed = resolve_seed(o.seed);
  v.inject_fault = o.inject_fault;
  const auto summary = run_verify(v);

  json checks = json::array();
  for (const auto& c : summary.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"max_residual", std::isfinite(c.residual) ? json(c.residual) : json("inf")},
                      {"tol", c.tol},
                      {"detail", c.detail}});
  const auto failure = summary.first_failure();
  json report{{"passed", summary.passed()},
              {"dmax", v.dmax},
              {"samples", v.samples},
              {"seed", v.seed},
              {"elapsed_seconds", summary.elapsed_seconds},
              {"first_failure", failure ? json(*failure) : json(nullptr)},
              {"checks", std::move(checks)}};
  CommandResult r{report.dump(2) + "\n", "", kExitOk};
  if (failure) {
    r.err = "verify: check '" + *failure + "' failed\n";
    r.exit_code = kExitVerifyFailed;
  }
  return r;
}

}  // namespace permutwirl::cli
