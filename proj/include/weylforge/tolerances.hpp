// Copyright 2026 The Weylforge Authors
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

namespace weylforge {

// All numerical thresholds live here so property tests have one knob to turn.
struct Tolerances {
  double unitarity = 1e-9;     // max |U^dag U - I| entry accepted at construction
  double diagonality = 1e-9;   // off-diagonal residual after joint diagonalisation
  double commutation = 1e-8;   // max |XY - YX| entry accepted by the pair solver
  double comparison = 1e-8;    // coordinate / invariant equality
  double extraction = 1e-7;    // invariant match when selecting a chamber representative
  double chamber_slack = 1e-9; // boundary slack before snapping into the Weyl chamber
  double hull = 1e-9;          // perfect-entangler convex-hull boundary band
  double spe = 1e-9;           // |expr + 1| threshold for the SPE condition
  double state = 1e-9;         // separable / maximal thresholds on magic coefficients
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace weylforge
