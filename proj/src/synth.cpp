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


#include "weylforge/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylforge/canonical.hpp"
#include "weylforge/invariants.hpp"

namespace weylforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdge = 1e-12;

Mat2d rot(int axis, double angle) { return axis_rotation<double>(axis, angle); }

Mat2d triple_rotation(double a, double b) { return rot(3, a) * rot(2, b) * rot(3, a); }

bool within(double v, double lo, double hi) { return v >= lo - kEdge && v <= hi + kEdge; }

bool invariants_match(const Mat4d& m, const Coords& chamber_target) {
  return max_abs_difference(local_invariants(m), invariants_from_coords(chamber_target)) <= 1e-8;
}

Circuit sandwich(double phi, const Mat2d& top, const Mat2d& bottom) {
  Circuit c;
  c.layers = {NonlocalLayer{phi}, LocalLayer{top, bottom}, NonlocalLayer{phi}};
  return c;
}

}  // namespace

int Circuit::nonlocal_count() const {
  return static_cast<int>(std::count_if(layers.begin(), layers.end(),
                                        [](const Layer& l) { return std::holds_alternative<NonlocalLayer>(l); }));
}

Mat4d layer_matrix(const Layer& layer) {
  if (const auto* n = std::get_if<NonlocalLayer>(&layer)) return canonical_gate(kQuarterPi<double>, n->phi, 0.0);
  const auto& l = std::get<LocalLayer>(layer);
  return kron2(l.top, l.bottom);
}

Gate circuit_matrix(const Circuit& c) {
  Mat4d m = Mat4d::Identity();
  for (const auto& layer : c.layers) m = layer_matrix(layer) * m;
  return Gate(std::exp(std::complex<double>(0, c.global_phase)) * m);
}

BGateParams b_gate_params(double c2, double c3) {
  const double s = std::sin(c2), k = std::cos(c3);
  const double cos2b = 1 - 4 * s * s * k * k;
  const double num = std::cos(2 * c2) * std::cos(2 * c3);
  const double den = 1 - 2 * s * s * k * k;
  if (!within(cos2b, -1, 1)) throw InvalidInput("b_gate_params: cos 2b outside [-1, 1]");

  BGateParams out;
  out.b = std::acos(std::clamp(cos2b, -1.0, 1.0)) / 2;
  if (std::abs(den) <= kEdge) {
    if (std::abs(num) > kEdge) throw DegenerateTarget("b_gate_params: vanishing denominator");
    out.a = 0;
    return out;
  }
  const double sq = num / den;
  if (!within(sq, 0, 1)) throw InvalidInput("b_gate_params: sin^2 2a outside [0, 1]");
  out.a = std::asin(std::sqrt(std::clamp(sq, 0.0, 1.0))) / 2;
  return out;
}

std::vector<SynthesisSolution> spe_params(const SpeParams<double>& p, const Coords& target) {
  const double phi = p.phi();
  if (phi <= kEdge || phi >= kQuarterPi<double> - kEdge)
    throw UnsupportedPhi("phi must differ from 0 and pi/4 for two-application synthesis");

  const double x = std::cos(2 * target.c2), z = std::cos(2 * target.c3);
  const double k = 1 - std::cos(4 * phi);
  const double t2 = std::pow(std::tan(2 * phi), 2);

  std::vector<SynthesisSolution> out;
  for (Branch br : {Branch::sols1, Branch::sols2}) {
    double cos2b, num, den;
    if (br == Branch::sols1) {
      cos2b = 1 - (1 - z) * (1 + x) / k;
      num = (1 + z) * (1 - x) * t2;
      den = 1 + z - x - x * z;
    } else {
      cos2b = 1 - (1 + z) * (1 - x) / k;
      num = (1 - z) * (1 + x) * t2;
      den = 1 - z + x + x * z;
    }
    double ca2;
    if (std::abs(den) <= kEdge) {
      if (std::abs(num) > kEdge) continue;
      ca2 = 1;  // 0/0: a is unconstrained by this relation
    } else {
      ca2 = num / den;
    }
    if (!within(cos2b, -1, 1) || !within(ca2, 0, 1)) continue;
    cos2b = std::clamp(cos2b, -1.0, 1.0);
    ca2 = std::clamp(ca2, 0.0, 1.0);

    const double b0 = std::acos(cos2b) / 2;
    const double a0 = std::acos(std::sqrt(ca2)) / 2;
    const double a_variants[4] = {a0, -a0, kPi / 2 - a0, a0 - kPi / 2};
    for (int av = 0; av < 4; ++av) {
      for (int bs : {1, -1}) {
        SynthesisSolution s;
        s.phi = phi;
        s.a = a_variants[av];
        s.b = bs * b0;
        s.branch = br;
        s.sign_choice = {av, bs};
        s.cos2b = cos2b;
        s.cos2a_squared = ca2;
        out.push_back(s);
      }
    }
  }
  return out;
}

Circuit assemble(const SynthesisSolution& s, double c1, WireOrder wires) {
  const Mat2d first = rot(2, c1), second = triple_rotation(s.a, s.b);
  return wires == WireOrder::printed ? sandwich(s.phi, first, second) : sandwich(s.phi, second, first);
}

bool verify_equivalence(const Circuit& c, const Coords& target) {
  const Coords t = reduce_to_weyl(target);
  const Mat4d m = circuit_matrix(c).matrix();
  if (!invariants_match(m, t)) return false;
  try {
    return chamber_distance(extract_coordinates(m), t) <= 1e-7;
  } catch (const InternalConsistencyError&) {
    return false;
  }
}

SynthesisResult synthesize(const Coords& target, const SpeParams<double>& p) {
  SynthesisResult r;
  r.target = reduce_to_weyl(target);
  r.scanned = spe_params(p, r.target);
  for (WireOrder w : {WireOrder::printed, WireOrder::swapped}) {
    for (const auto& s : r.scanned) {
      Circuit c = assemble(s, r.target.c1, w);
      if (verify_equivalence(c, r.target)) {
        r.circuit = std::move(c);
        r.solution = s;
        r.wires = w;
        return r;
      }
    }
  }
  r.closed_form_mismatches = static_cast<int>(r.scanned.size());
  return r;
}

SynthesisResult synthesize(const Gate& target, const SpeParams<double>& p) {
  const Coords t = extract_coordinates(target);
  SynthesisResult r = synthesize(t, p);
  if (!r.feasible()) return r;

  const auto kt = kak_decompose_with_core<double>(target.matrix(), t);
  const auto km = kak_decompose_with_core<double>(circuit_matrix(*r.circuit).matrix(), t);

  Circuit full;
  full.layers.push_back(LocalLayer{km.a2.adjoint() * kt.a2, km.b2.adjoint() * kt.b2});
  full.layers.insert(full.layers.end(), r.circuit->layers.begin(), r.circuit->layers.end());
  full.layers.push_back(LocalLayer{kt.a1 * km.a1.adjoint(), kt.b1 * km.b1.adjoint()});
  full.global_phase = kt.global_phase - km.global_phase;

  const double residual = (circuit_matrix(full).matrix() - target.matrix()).cwiseAbs().maxCoeff();
  if (residual > 1e-7) throw InternalConsistencyError("synthesize: dressed circuit does not reproduce the target");
  r.circuit = std::move(full);
  return r;
}

Circuit special_circuit(SpecialKind kind, const SpeParams<double>& p) {
  const double phi = p.phi();
  const double q = kQuarterPi<double>;
  if (kind == SpecialKind::cnot) {
    if (phi <= kEdge || phi >= q - kEdge) throw RangeError("CNOT circuit requires 0 < phi < pi/4");
    return sandwich(phi, rot(2, q), rot(3, 2 * q));
  }
  if (phi < q / 2 - kEdge || phi >= q - kEdge) throw RangeError("DCNOT circuit requires pi/8 <= phi < pi/4");
  const double cot = 1 / std::tan(2 * phi);
  const double b = std::acos(std::clamp(-cot * cot, -1.0, 1.0)) / 2;
  return sandwich(phi, rot(2, q), triple_rotation(q, b));
}

bool phi_feasible(const Coords& target, double phi) {
  return synthesize(target, SpeParams<double>(phi)).feasible();
}

std::vector<PhiFeasibility> feasible_phi_profile(const Coords& target, int grid_size) {
  if (grid_size < 2) throw InvalidInput("feasible_phi_profile: grid size must be at least 2");
  std::vector<PhiFeasibility> out;
  out.reserve(grid_size);
  for (int k = 1; k <= grid_size; ++k) {
    const double phi = k * kPi / (4.0 * (grid_size + 1));
    out.push_back({phi, phi_feasible(target, phi)});
  }
  return out;
}

std::optional<double> auto_phi(const Coords& target, int grid_size) {
  std::optional<double> best;
  for (const auto& f : feasible_phi_profile(target, grid_size)) {
    if (!f.feasible) continue;
    if (!best || std::abs(f.phi - kPi / 8) < std::abs(*best - kPi / 8)) best = f.phi;
  }
  return best;
}

std::string to_string(Branch b) { return b == Branch::sols1 ? "sols1" : "sols2"; }
std::string to_string(WireOrder w) { return w == WireOrder::printed ? "printed" : "swapped"; }

}  // namespace weylforge
