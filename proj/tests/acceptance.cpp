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


// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "test_support.hpp"
#include "weylforge/canonical.hpp"
#include "weylforge/cli.hpp"
#include "weylforge/entangle.hpp"
#include "weylforge/io.hpp"
#include "weylforge/spe.hpp"
#include "weylforge/synth.hpp"

using namespace weylforge;
using namespace wf_test;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct Row {
  std::string gate;
  Coords coords;
  C g1;
  double g2, ep;
};

Outcome table_reproduction() {
  Outcome o;
  const double t0 = kPi / 8;
  // Expected values per reference gate. sqrt(SWAP): G1 = -i/4 from its literal matrix.
  const std::vector<Row> rows{{"cnot", {kQ, 0, 0}, 0, 1, 2.0 / 9},
                              {"dcnot", {kQ, kQ, 0}, 0, -1, 2.0 / 9},
                              {"b", {kQ, t0, 0}, 0, 0, 2.0 / 9},
                              {"swap", {kQ, kQ, kQ}, -1, -3, 0},
                              {"sqrtswap", {t0, t0, t0}, C(0, -0.25), 0, 1.0 / 6},
                              {"identity", {0, 0, 0}, 1, 3, 0}};
  const auto check = [&](const std::string& name, const Gate& g, const Row& want) {
    const auto r = analyze(g, name);
    o.require(chamber_distance(r.coords, want.coords) <= 1e-9, name + " coords");
    o.require(std::abs(r.invariants.g1 - want.g1) <= 1e-9, name + " G1");
    o.require(std::abs(r.invariants.g2 - want.g2) <= 1e-9, name + " G2");
    o.require(std::abs(r.ep_closed - want.ep) <= 1e-9, name + " e_p");
  };
  for (const auto& row : rows) check(row.gate, *builtin_gate(row.gate), row);

  std::mt19937_64 rng(2024);
  for (int t = 0; t < 5; ++t) check("A x B", Gate(random_local(rng)), rows.back());

  for (double theta : {0.0, 0.3, 0.9, 1.2, kPi / 2}) {
    const double x = theta / 2;
    const auto r = analyze(controlled_u(theta, 0.7), "controlled_u");
    o.require(chamber_distance(r.coords, Coords{x, 0, 0}) <= 1e-9, "controlled-U coords");
    o.require(std::abs(r.invariants.g1 - C(std::pow(std::cos(theta), 2))) <= 1e-9, "controlled-U G1");
    o.require(std::abs(r.invariants.g2 - (2 * r.invariants.g1.real() + 1)) <= 1e-9, "controlled-U G2 = 2G1+1");
    o.require(std::abs(r.ep_closed - (1 - std::cos(4 * x)) / 9) <= 1e-9, "controlled-U e_p");
  }
  o.detail << "7 reference classes within 1e-9";
  return o;
}

Outcome entangling_power_consistency() {
  Outcome o;
  const unsigned shards = std::max(1u, std::thread::hardware_concurrency());
  std::mt19937_64 rng(7);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const Mat4d g = random_unitary(rng);
    const auto est = entangling_power_mc(g, 1000000, 500 + t, shards);
    const double closed = entangling_power_closed(extract_coordinates(g));
    const double bound = std::max(3 * est.std_error, 2e-3);
    worst = std::max(worst, std::abs(est.mean - closed) / bound);
    o.require(std::abs(est.mean - closed) <= bound, "gate " + std::to_string(t));
  }
  o.detail << "20 gates, n=1e6, worst |MC-closed|/bound = " << worst;
  return o;
}

Outcome spe_characterization() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::vector<Coords> points;
  for (int t = 0; t < 10000; ++t) points.push_back(random_chamber(rng));
  for (int k = 0; k <= 16; ++k) points.push_back({kQ, k * kPi / 64, 0});
  int counterexamples = 0, spe = 0;
  for (const auto& c : points) {
    const bool a = is_spe(c);
    const bool b = std::abs(entangling_power_closed(c) - 2.0 / 9) <= 1e-9;
    const bool f = spe_family_phi(c).has_value();
    counterexamples += !(a == b && b == f);
    spe += a;
  }
  o.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
  o.detail << points.size() << " points, " << spe << " on the family, " << counterexamples << " counterexamples";
  return o;
}

Outcome witness_soundness() {
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double theta = i * kPi / 19, phi = j * kQ / 19;
      const auto w = witness_basis(theta, SpeParams<double>(phi));
      for (double c : check_basis_images<double>(canonical_gate(0.0, kQ, phi), w.states))
        worst = std::max(worst, std::abs(c - 1));
    }
  }
  o.require(worst <= 1e-9, "witness grid");

  std::mt19937_64 rng(4);
  const Mat4d g = canonical_gate(kPi / 8, kPi / 8, kPi / 8);
  int all_max = 0;
  for (int t = 0; t < 10000; ++t) {
    const Mat2d a = random_su2(rng), b = random_su2(rng), c = random_su2(rng);
    const auto prod = [](const Eigen::Vector2cd& x, const Eigen::Vector2cd& y) {
      return State::normalized(Vec4d(x(0) * y(0), x(0) * y(1), x(1) * y(0), x(1) * y(1)));
    };
    std::array<State, 4> basis{prod(a.col(0), b.col(0)), prod(a.col(0), b.col(1)), prod(a.col(1), c.col(0)),
                               prod(a.col(1), c.col(1))};
    if (t % 2) {
      basis = {prod(b.col(0), a.col(0)), prod(b.col(1), a.col(0)), prod(c.col(0), a.col(1)), prod(c.col(1), a.col(1))};
    }
    const auto conc = check_basis_images<double>(g, basis);
    all_max += std::all_of(conc.begin(), conc.end(), [](double x) { return x >= 1 - 1e-9; });
  }
  o.require(all_max == 0, "sqrt(SWAP) control");
  o.detail << "400 grid cases, worst |C-1| = " << worst << "; sqrt(SWAP) fully maximal bases: " << all_max << "/10000";
  return o;
}

Outcome perfect_entangler_hull() {
  Outcome o;
  int flagged = 0;
  for (int k = 0; k < 100; ++k) {
    const double x = k * kQ / 99;
    const bool pe = is_perfect_entangler(controlled_u(2 * x).matrix());
    flagged += pe;
    o.require(pe == (k == 99), "controlled-U at x=" + std::to_string(x));
  }
  for (const char* name : {"cnot", "dcnot", "b", "sqrtswap"})
    o.require(is_perfect_entangler(builtin_gate(name)->matrix()), std::string(name) + " should be PE");
  for (const char* name : {"swap", "identity"})
    o.require(!is_perfect_entangler(builtin_gate(name)->matrix()), std::string(name) + " should not be PE");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) o.require(!is_perfect_entangler(random_local(rng)), "random local");
  o.detail << "controlled-U sweep flagged " << flagged << "/100 (only x = pi/4 expected)";
  return o;
}

Outcome b_gate_universality() {
  Outcome o;
  std::mt19937_64 rng(6);
  int ok = 0;
  const SpeParams<double> p(kPi / 8);
  for (int t = 0; t < 1000; ++t) {
    const Coords c = random_chamber(rng);
    const auto r = synthesize(c, p);
    const bool pass = r.feasible() && r.circuit->nonlocal_count() == 2 && verify_equivalence(*r.circuit, c);
    ok += pass;
  }
  o.require(ok == 1000, std::to_string(1000 - ok) + " targets failed");
  o.detail << ok << "/1000 targets verified at phi = pi/8";
  return o;
}

Outcome phi_restriction() {
  Outcome o;
  for (double phi : {0.0, kQ}) {
    bool rejected = false;
    try {
      synthesize(Coords{kQ, 0, 0}, SpeParams<double>(phi));
    } catch (const UnsupportedPhi&) {
      rejected = true;
    }
    o.require(rejected, "phi endpoint accepted");
  }
  const std::vector<Coords> targets{{0.6, 0.5, 0.45}, {0.7, 0.3, -0.2}, {0.5, 0.4, 0.1}};
  int witnesses = 0;
  for (const auto& c : targets) {
    bool eighth = false, other_fails = false;
    for (const auto& f : feasible_phi_profile(c, kAutoPhiGrid)) {
      if (std::abs(f.phi - kPi / 8) < 1e-12) eighth = f.feasible;
      else other_fails = other_fails || !f.feasible;
    }
    witnesses += eighth && other_fails;
  }
  o.require(witnesses > 0, "no target separates pi/8 from the other grid values");
  o.detail << "endpoints rejected; " << witnesses << "/" << targets.size()
           << " targets feasible at pi/8 with an infeasible grid phi";
  return o;
}

Outcome special_circuits() {
  Outcome o;
  for (int k = 1; k <= 10; ++k) {
    const double phi = k * kQ / 11;
    o.require(verify_equivalence(special_circuit(SpecialKind::cnot, SpeParams<double>(phi)), Coords{kQ, 0, 0}),
              "CNOT circuit at phi=" + std::to_string(phi));
  }
  for (int k = 0; k < 10; ++k) {
    const double phi = kPi / 8 + k * (kQ - kPi / 8) / 10;
    o.require(verify_equivalence(special_circuit(SpecialKind::dcnot, SpeParams<double>(phi)), Coords{kQ, kQ, 0}),
              "DCNOT circuit at phi=" + std::to_string(phi));
  }
  const auto rejects = [](SpecialKind kind, double phi) {
    try {
      special_circuit(kind, SpeParams<double>(phi));
    } catch (const RangeError&) {
      return true;
    }
    return false;
  };
  o.require(rejects(SpecialKind::cnot, 0) && rejects(SpecialKind::cnot, kQ), "CNOT range");
  o.require(rejects(SpecialKind::dcnot, kPi / 16) && rejects(SpecialKind::dcnot, kQ), "DCNOT range");
  o.detail << "10 CNOT and 10 DCNOT circuits verified; out-of-range phi rejected";
  return o;
}

Outcome extraction_round_trip() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  double worst_c = 0, worst_r = 0;
  for (int t = 0; t < 1000; ++t) {
    const Coords c = random_chamber(rng);
    const Mat4d g = std::exp(C(0, phase(rng))) * random_local(rng) * canonical_gate(c) * random_local(rng);
    worst_c = std::max(worst_c, chamber_distance(extract_coordinates(g), c));
    worst_r = std::max(worst_r, max_diff(kak_decompose(g).reassemble(), g));
  }
  o.require(worst_c <= 1e-8, "coordinates");
  o.require(worst_r < 1e-7, "reassembly");
  o.detail << "worst coordinate error " << worst_c << ", worst reassembly residual " << worst_r;
  return o;
}

Outcome magic_preimages_and_probe() {
  Outcome o;
  std::mt19937_64 rng(10);
  const Mat4d magic = magic_basis<double>();
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const Mat4d inv = canonical_gate(random_chamber(rng)).adjoint();
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(concurrence_pure(State::normalized(inv * magic.col(k))) - 1));
  }
  o.require(worst <= 1e-10, "magic preimages");
  const double swap = separability_preservation_probe(builtin_gate("swap")->matrix(), 10000, 1);
  const double local = separability_preservation_probe(random_local(rng), 10000, 1);
  const double cnot = separability_preservation_probe(builtin_gate("cnot")->matrix(), 10000, 1);
  const double b = separability_preservation_probe(builtin_gate("b")->matrix(), 10000, 1);
  o.require(swap == 1.0 && local == 1.0, "SWAP/local probe");
  o.require(cnot < 0.01 && b < 0.01, "CNOT/B probe");
  o.detail << "worst preimage |C-1| = " << worst << "; probe SWAP " << swap << ", local " << local << ", CNOT "
           << cnot << ", B " << b;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
    double budget_s;
  };
  const std::vector<Criterion> criteria{
      {1, "reference table", table_reproduction, 1},
      {2, "entangling power MC vs closed form", entangling_power_consistency, 120},
      {3, "maximal-power family characterization", spe_characterization, 0},
      {4, "witness product bases", witness_soundness, 0},
      {5, "perfect-entangler hull test", perfect_entangler_hull, 0},
      {6, "B gate two-application synthesis", b_gate_universality, 60},
      {7, "phi restriction", phi_restriction, 0},
      {8, "special CNOT/DCNOT circuits", special_circuits, 0},
      {9, "extraction and KAK round trip", extraction_round_trip, 0},
      {10, "magic-basis preimages and separability probe", magic_preimages_and_probe, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail << "; over time budget " << c.budget_s << " s";
    }
    failed += !o.pass;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
