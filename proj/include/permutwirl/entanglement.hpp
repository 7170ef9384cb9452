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

#include <string_view>

#include "permutwirl/states.hpp"

namespace permutwirl {

struct PptReport {
  double min_eig_pt = 0.0;
  bool is_ppt = false;
  /// min eigenvalue within [-tol, tol]: PPT, but only marginally.
  bool boundary = false;
  Side side = Side::A;
};

/// Partial transpose on `side`, then the smallest eigenvalue. The verdict
/// does not depend on the side. Throws DimMismatch for single-system input.
PptReport is_ppt(const DensityMatrix& rho, double tol = kDefaultTol,
                 Side side = Side::A);

enum class SeparabilityVerdict { Separable, Entangled, Undecided };

std::string_view to_string(SeparabilityVerdict v);

/// Peres-Horodecki: decisive when dA * dB <= 6, otherwise only NPT is
/// conclusive.
SeparabilityVerdict separable_verdict(const DensityMatrix& rho,
                                      double tol = kDefaultTol);

/// |t1| + |t2| + |t3| <= 1 + tol.
bool bell_octahedron_member(const BellDiagonalParams& t, double tol = kDefaultTol);

}  // namespace permutwirl
