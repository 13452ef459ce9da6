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


#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "weylforge/canonical.hpp"
#include "weylforge/cli.hpp"
#include "weylforge/io.hpp"
#include "weylforge/synth.hpp"

namespace weylforge {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEYLFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("WEYLFORGE_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

Coords parse_coords(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("--coords expects c1,c2,c3 (got \"" + text + "\")");
    }
  }
  if (v.size() != 3) throw InvalidInput("--coords expects exactly three values");
  return {v[0], v[1], v[2]};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f || !(f << content)) throw InvalidInput("cannot write " + path);
}

void print_profile(std::ostream& out, const std::vector<PhiFeasibility>& profile) {
  out << "phi profile (feasible grid points marked +):\n";
  for (const auto& p : profile) out << "  " << std::setprecision(12) << p.phi << ' ' << (p.feasible ? '+' : '-') << '\n';
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 0;
  unsigned shards = 1;
  double tolerance = kDefaultTolerances.unitarity;
  std::string gate;
  std::string coords;
  std::string phi = "auto";
  std::string out;
  std::string svg;
  std::string csv;
  double theta = 1.0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto g = load_gate(o.gate, o.tolerance);
  std::optional<McRequest> mc;
  if (o.mc_samples > 0) mc = McRequest{o.mc_samples, o.seed, o.shards};
  const auto report = analyze(g.gate, g.name, mc);
  if (o.json)
    out << report_to_json(report).dump(2) << '\n';
  else
    print_report(out, report);
  return kOk;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  std::optional<NamedGate> gate;
  Coords target;
  if (!o.coords.empty()) {
    if (!o.gate.empty()) throw InvalidInput("give either a gate or --coords, not both");
    target = reduce_to_weyl(parse_coords(o.coords));
  } else if (!o.gate.empty()) {
    gate = load_gate(o.gate, o.tolerance);
    target = extract_coordinates(gate->gate);
  } else {
    throw InvalidInput("synthesize needs a gate or --coords");
  }

  double phi;
  if (o.phi == "auto") {
    const auto picked = auto_phi(target);
    if (!picked) {
      out << "infeasible: no grid value of phi reaches the target\n";
      print_profile(out, feasible_phi_profile(target, kAutoPhiGrid));
      return kInfeasible;
    }
    phi = *picked;
  } else {
    try {
      std::size_t used = 0;
      phi = std::stod(o.phi, &used);
      if (used != o.phi.size()) throw std::invalid_argument(o.phi);
    } catch (const std::exception&) {
      throw InvalidInput("--phi expects a number or 'auto'");
    }
  }

  const SpeParams<double> p(phi);
  const auto result = gate ? synthesize(gate->gate, p) : synthesize(target, p);
  if (!result.feasible()) {
    out << std::setprecision(12) << "infeasible at phi=" << phi << " (" << result.scanned.size()
        << " candidates scanned)\n";
    print_profile(out, feasible_phi_profile(target, kAutoPhiGrid));
    return kInfeasible;
  }

  const auto& s = *result.solution;
  const bool verified = verify_equivalence(*result.circuit, target);
  const json circuit = circuit_to_json(*result.circuit);
  if (!o.out.empty()) write_file(o.out, circuit.dump(2) + "\n");
  if (o.json) {
    json j{{"target", {target.c1, target.c2, target.c3}},
           {"phi", phi},
           {"a", s.a},
           {"b", s.b},
           {"branch", to_string(s.branch)},
           {"wires", to_string(result.wires)},
           {"nonlocal_layers", result.circuit->nonlocal_count()},
           {"verified", verified},
           {"circuit", circuit}};
    out << j.dump(2) << '\n';
  } else {
    out << std::setprecision(12) << "target      " << target.c1 << ' ' << target.c2 << ' ' << target.c3 << '\n'
        << "phi         " << phi << '\n'
        << "a, b        " << s.a << ' ' << s.b << '\n'
        << "branch      " << to_string(s.branch) << " (" << to_string(result.wires) << " wires)\n"
        << "nonlocal    " << result.circuit->nonlocal_count() << '\n'
        << "verify      " << (verified ? "PASS" : "FAIL") << '\n';
    if (!o.out.empty()) out << "circuit     " << o.out << '\n';
  }
  return verified ? kOk : kInternal;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rows = reference_table(o.theta);
  if (o.json) {
    json j = json::array();
    for (const auto& r : rows) {
      json row = report_to_json(r.report);
      row["label"] = r.label;
      j.push_back(row);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::ostringstream s;
  s << std::setprecision(12) << std::left;
  s << std::setw(14) << "operator" << std::setw(52) << "[c1, c2, c3]" << std::setw(34) << "G1" << std::setw(18)
    << "G2"
    << "e_p\n";
  for (const auto& r : rows) {
    const auto& rep = r.report;
    std::ostringstream c;
    c << '[' << format_real(rep.coords.c1) << ", " << format_real(rep.coords.c2) << ", " << format_real(rep.coords.c3)
      << ']';
    s << std::setw(14) << r.label << std::setw(52) << c.str() << std::setw(34) << format_complex(rep.invariants.g1) << std::setw(18)
      << format_real(rep.invariants.g2) << format_real(rep.ep_closed) << '\n';
  }
  out << s.str();
  return kOk;
}

int cmd_chamber(const Options& o, std::ostream& out) {
  if (!o.svg.empty()) write_file(o.svg, chamber_svg());
  if (!o.csv.empty()) write_file(o.csv, chamber_csv());
  if (o.svg.empty() && o.csv.empty()) out << chamber_csv();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit gate analysis and two-application synthesis", "weylforge"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--tolerance", o.tolerance, "unitarity tolerance for gate files")->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "coordinates, invariants and entangling power of a gate");
  analyze_cmd->add_option("gate", o.gate, "gate file or built-in name")->required();
  analyze_cmd->add_option("--mc-samples", o.mc_samples, "Monte Carlo samples for e_p (0 = skip)");
  analyze_cmd->add_option("--seed", o.seed, "RNG seed (default: $WEYLFORGE_SEED or 1)");
  analyze_cmd->add_option("--shards", o.shards, "worker threads for Monte Carlo")->check(CLI::PositiveNumber);
  add_common(analyze_cmd);

  auto* synth_cmd = app.add_subcommand("synthesize", "two-application circuit for a target");
  synth_cmd->add_option("gate", o.gate, "gate file or built-in name");
  synth_cmd->add_option("--coords", o.coords, "target coordinates c1,c2,c3");
  synth_cmd->add_option("--phi", o.phi, "phi of C[phi], or 'auto'");
  synth_cmd->add_option("--out", o.out, "write the circuit JSON here");
  add_common(synth_cmd);

  auto* table_cmd = app.add_subcommand("table", "reference gates");
  table_cmd->add_option("--theta", o.theta, "rotation angle of the controlled-U row");
  table_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* chamber_cmd = app.add_subcommand("chamber", "Weyl chamber figure data");
  chamber_cmd->add_option("--svg", o.svg, "write SVG here");
  chamber_cmd->add_option("--csv", o.csv, "write CSV here (stdout when neither is given)");

  try {
    o.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (synth_cmd->parsed()) return cmd_synthesize(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    return cmd_chamber(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DegenerateTarget& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace weylforge
