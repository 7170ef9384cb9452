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

#include <cstdint>
#include <optional>
#include <string>

#include "permutwirl/cli/verify.hpp"
#include "permutwirl/error.hpp"

namespace permutwirl::cli {

inline constexpr std::uint64_t kDefaultSeed = 2026;

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitDimensionGuard = 2;
inline constexpr int kExitVerifyFailed = 3;

int exit_code_for(ErrorCode code);

/// Explicit flag, else $PERMUTWIRL_SEED, else kDefaultSeed. A malformed
/// environment value is a FlagOutOfRange error rather than silently ignored.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// What a command produced. Files named by --out are already written.
struct CommandResult {
  std::string out;  // for stdout
  std::string err;  // for stderr
  int exit_code = kExitOk;
};

struct TwirlOptions {
  std::string input = "-";
  std::string side = "auto";  // auto | none | A | B | both
  std::string method = "closed";  // closed | brute
  std::optional<std::string> out;
  bool raw = false;
};
CommandResult run_twirl(const TwirlOptions& o);

struct CoherenceOptions {
  std::string input = "-";
  std::string measure = "both";  // l1 | relent | both
  std::size_t assist_samples = 0;  // 0 disables the assistance estimate
  std::optional<std::uint64_t> seed;
  bool bits = false;
};
CommandResult run_coherence(const CoherenceOptions& o);

struct SweepQubitOptions {
  double r2 = 0.1;
  double r3 = 0.1;
  std::size_t steps = 200;
  std::string out = "-";
  bool bits = false;
};
CommandResult run_sweep_qubit(const SweepQubitOptions& o);

struct SweepBellOptions {
  std::size_t grid = 21;
  std::string out = "-";
};
CommandResult run_sweep_bell(const SweepBellOptions& o);

struct VerifyCommandOptions {
  std::size_t dmax = 5;
  std::size_t samples = 100;
  std::optional<std::uint64_t> seed;
  bool inject_fault = false;
};
CommandResult run_verify_command(const VerifyCommandOptions& o);

/// Fixed-width CSV field: 12 significant digits, '.' decimal point.
std::string csv_number(double v);

}  // namespace permutwirl::cli
