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

#include <CLI11.hpp>
#include <iostream>

#include "permutwirl/cli/commands.hpp"

namespace {

using namespace permutwirl::cli;

int emit(const CommandResult& r) {
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-permutation channel toolkit: twirls, coherence bounds, sweeps."};
  app.require_subcommand(1);

  TwirlOptions tw;
  auto* twirl = app.add_subcommand("twirl", "Apply the channel to a state file");
  twirl->add_option("input", tw.input, "State JSON file, '-' for stdin")->required();
  twirl->add_option("--side", tw.side, "none, A, B or both (default: by input dims)")
      ->check(CLI::IsMember({"auto", "none", "A", "B", "both"}));
  twirl->add_option("--method", tw.method, "closed or brute")
      ->check(CLI::IsMember({"closed", "brute"}));
  twirl->add_option("--out", tw.out, "Write the output state here ('-' for stdout)");
  twirl->add_flag("--raw", tw.raw, "Operator mode: skip density validation");

  CoherenceOptions co;
  auto* coh = app.add_subcommand("coherence", "Coherence values and channel lower bounds");
  coh->add_option("input", co.input, "State JSON file, '-' for stdin")->required();
  coh->add_option("--measure", co.measure, "l1, relent or both")
      ->check(CLI::IsMember({"l1", "relent", "both"}));
  coh->add_option("--assist", co.assist_samples,
                  "Also estimate coherence of assistance with this many decompositions");
  coh->add_option("--seed", co.seed, "Sampling seed (default $PERMUTWIRL_SEED or 2026)");
  coh->add_flag("--bits", co.bits, "Report relative entropy in bits");

  SweepQubitOptions sq;
  auto* sweep_q = app.add_subcommand("sweep-qubit", "CSV of qubit coherence vs r1");
  sweep_q->add_option("--r2", sq.r2, "Fixed Bloch component r2");
  sweep_q->add_option("--r3", sq.r3, "Fixed Bloch component r3");
  sweep_q->add_option("--steps", sq.steps, "Intervals over [0, sqrt(1 - r2^2 - r3^2)]");
  sweep_q->add_option("--out", sq.out, "CSV path, '-' for stdout");
  sweep_q->add_flag("--bits", sq.bits, "Relative entropy columns in bits");

  SweepBellOptions sb;
  auto* sweep_b = app.add_subcommand("sweep-bell", "CSV over the Bell-diagonal tetrahedron");
  sweep_b->add_option("--grid", sb.grid, "Grid points per axis on [-1, 1]");
  sweep_b->add_option("--out", sb.out, "CSV path, '-' for stdout");

  VerifyCommandOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the oracle and invariant suite");
  verify->add_option("--dmax", vo.dmax, "Largest single-system dimension");
  verify->add_option("--samples", vo.samples, "Random states per dimension");
  verify->add_option("--seed", vo.seed, "Seed (default $PERMUTWIRL_SEED or 2026)");
  verify->add_flag("--inject-fault", vo.inject_fault, "Corrupt the closed form (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*twirl) return emit(run_twirl(tw));
    if (*coh) return emit(run_coherence(co));
    if (*sweep_q) return emit(run_sweep_qubit(sq));
    if (*sweep_b) return emit(run_sweep_bell(sb));
    if (*verify) return emit(run_verify_command(vo));
  } catch (const permutwirl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInvalid;
}
