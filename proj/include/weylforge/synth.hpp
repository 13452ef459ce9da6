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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylforge/coords.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/spe.hpp"

namespace weylforge {

enum class Branch { sols1, sols2 };
enum class WireOrder { printed, swapped };

/// Which of the quadrant variants of a (a0, -a0, pi/2 - a0, a0 - pi/2) and sign of b were used.
struct SignChoice {
  int a_variant = 0;
  int b_sign = 1;
};

/// Parameters of C[phi] . (e^{-i c1 Y} x e^{-i a Z} e^{-i b Y} e^{-i a Z}) . C[phi].
struct SynthesisSolution {
  double phi = 0;
  double a = 0;
  double b = 0;
  Branch branch = Branch::sols2;
  SignChoice sign_choice;
  double cos2b = 1;
  double cos2a_squared = 1;
};

struct NonlocalLayer {
  double phi = 0;
};

struct LocalLayer {
  Mat2d top = Mat2d::Identity();
  Mat2d bottom = Mat2d::Identity();
};

using Layer = std::variant<NonlocalLayer, LocalLayer>;

/// Layers in time order: layers.front() acts first.
struct Circuit {
  std::vector<Layer> layers;
  double global_phase = 0;

  int nonlocal_count() const;
};

Mat4d layer_matrix(const Layer& layer);
Gate circuit_matrix(const Circuit& c);

struct BGateParams {
  double a = 0;
  double b = 0;
};

/// Angles for the phi = pi/8 circuit reaching (c1, c2, c3). a is free (set to 0) when both
/// sides of the sin 2a relation vanish; a zero denominator with a nonzero numerator throws
/// DegenerateTarget.
BGateParams b_gate_params(double c2, double c3);

/// Candidates from the two closed-form branches, each expanded into its 8 sign choices, in
/// enumeration order (branch, a variant, b sign). Throws UnsupportedPhi for phi in {0, pi/4}.
std::vector<SynthesisSolution> spe_params(const SpeParams<double>& p, const Coords& target);

/// Two-application circuit for the given candidate (no outer locals).
Circuit assemble(const SynthesisSolution& s, double c1, WireOrder wires);

struct SynthesisResult {
  std::optional<Circuit> circuit;
  std::optional<SynthesisSolution> solution;
  WireOrder wires = WireOrder::printed;
  Coords target;
  std::vector<SynthesisSolution> scanned;
  int closed_form_mismatches = 0;  // candidates inside the admissible ranges that failed verification

  bool feasible() const { return circuit.has_value(); }
};

SynthesisResult synthesize(const Coords& target, const SpeParams<double>& p);

/// Full-matrix target: the circuit additionally carries outer local layers and a global phase
/// so that circuit_matrix reproduces the input.
SynthesisResult synthesize(const Gate& target, const SpeParams<double>& p);

/// Local invariants within 1e-8 and extracted coordinates within 1e-7 of the chamber target.
bool verify_equivalence(const Circuit& c, const Coords& target);

enum class SpecialKind { cnot, dcnot };

/// CNOT class for 0 < phi < pi/4, DCNOT class for pi/8 <= phi < pi/4.
Circuit special_circuit(SpecialKind kind, const SpeParams<double>& p);

struct PhiFeasibility {
  double phi = 0;
  bool feasible = false;
};

bool phi_feasible(const Coords& target, double phi);

/// Grid phi_k = k pi / (4 (n + 1)), k = 1..n.
std::vector<PhiFeasibility> feasible_phi_profile(const Coords& target, int grid_size);

inline constexpr int kAutoPhiGrid = 63;

/// Feasible grid phi closest to pi/8, if any.
std::optional<double> auto_phi(const Coords& target, int grid_size = kAutoPhiGrid);

std::string to_string(Branch b);
std::string to_string(WireOrder w);

}  // namespace weylforge
