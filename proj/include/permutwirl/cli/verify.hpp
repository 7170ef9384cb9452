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
#include <optional>
#include <string>
#include <vector>

namespace permutwirl::cli {

struct VerifyOptions {
  std::size_t dmax = 5;      // largest d in the single-system and Choi sweeps
  std::size_t samples = 100; // random states per dimension (scaled per check)
  std::uint64_t seed = 2026;
  // Negative control: swaps d(d-1) for d^2 in the closed form under test.
  bool inject_fault = false;
};

/// One named check. It passes iff `residual <= tol`; the residual is the
/// worst deviation (or violation count) seen over the sample set.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  std::string detail;
  bool passed() const { return residual <= tol; }
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;
  bool passed() const;
  std::optional<std::string> first_failure() const;
};

/// Runs every check; never stops early so the summary is complete. Throws
/// DimensionTooLarge for dmax above the brute-force limit and FlagOutOfRange
/// for dmax == 0 or samples == 0.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace permutwirl::cli
