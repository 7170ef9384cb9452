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

#include "permutwirl/entanglement.hpp"

#include <cmath>

#include "permutwirl/error.hpp"

namespace permutwirl {

PptReport is_ppt(const DensityMatrix& rho, double tol, Side side) {
  const BipartiteDims dims = rho.bipartite_dims();
  const ComplexMatrix pt = partial_transpose(rho.matrix(), dims, side);
  PptReport r;
  r.side = side;
  r.min_eig_pt = hermitian_eigenvalues(pt).front();
  r.is_ppt = r.min_eig_pt >= -tol;
  r.boundary = std::abs(r.min_eig_pt) <= tol;
  return r;
}

std::string_view to_string(SeparabilityVerdict v) {
  switch (v) {
    case SeparabilityVerdict::Separable: return "separable";
    case SeparabilityVerdict::Entangled: return "entangled";
    case SeparabilityVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

SeparabilityVerdict separable_verdict(const DensityMatrix& rho, double tol) {
  const BipartiteDims dims = rho.bipartite_dims();
  if (!is_ppt(rho, tol).is_ppt) return SeparabilityVerdict::Entangled;
  return dims.total() <= 6 ? SeparabilityVerdict::Separable
                           : SeparabilityVerdict::Undecided;
}

bool bell_octahedron_member(const BellDiagonalParams& t, double tol) {
  return std::abs(t.t1) + std::abs(t.t2) + std::abs(t.t3) <= 1.0 + tol;
}

}  // namespace permutwirl
