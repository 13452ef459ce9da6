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


#include <cmath>
#include <iomanip>
#include <sstream>

#include "weylforge/canonical.hpp"
#include "weylforge/cli.hpp"
#include "weylforge/io.hpp"
#include "weylforge/spe.hpp"

namespace weylforge {

using nlohmann::json;

AnalysisReport analyze(const Gate& g, const std::string& name, const std::optional<McRequest>& mc,
                       const Tolerances& tol) {
  AnalysisReport r;
  r.name = name;
  r.coords = extract_coordinates(g, tol);
  r.invariants = local_invariants(g.matrix());
  r.ep_closed = entangling_power_closed(r.coords);
  if (mc) r.ep_mc = entangling_power_mc(g.matrix(), mc->samples, mc->seed, mc->shards);
  r.perfect_entangler = is_perfect_entangler(g.matrix(), tol);
  r.spe = is_spe(r.coords, tol.spe);
  if (r.spe) r.spe_phi = spe_family_phi(r.coords, tol.spe * 100);
  if (r.spe && !r.perfect_entangler)
    throw InternalConsistencyError("analyze: gate flagged maximal-power but not a perfect entangler");
  return r;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["coords"] = {r.coords.c1, r.coords.c2, r.coords.c3};
  j["invariants"] = {{"g1_re", r.invariants.g1.real()}, {"g1_im", r.invariants.g1.imag()}, {"g2", r.invariants.g2}};
  j["ep"] = r.ep_closed;
  if (r.ep_mc) {
    j["ep_mc"] = {{"mean", r.ep_mc->mean},
                  {"std_error", r.ep_mc->std_error},
                  {"samples", r.ep_mc->samples},
                  {"seed", r.ep_mc->seed}};
  }
  j["perfect_entangler"] = r.perfect_entangler;
  j["spe"] = r.spe;
  j["spe_phi"] = r.spe_phi ? json(*r.spe_phi) : json(nullptr);
  return j;
}

std::string format_real(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << (std::abs(x) < kDisplayZero ? 0.0 : x);
  return s.str();
}

std::string format_complex(std::complex<double> z) {
  const double im = std::abs(z.imag()) < kDisplayZero ? 0.0 : z.imag();
  return format_real(z.real()) + (im < 0 ? " - " : " + ") + format_real(std::abs(im)) + 'i';
}

void print_report(std::ostream& os, const AnalysisReport& r) {
  std::ostringstream s;
  s << std::setprecision(12);
  if (!r.name.empty()) s << "gate        " << r.name << '\n';
  s << "coords      " << format_real(r.coords.c1) << ' ' << format_real(r.coords.c2) << ' '
    << format_real(r.coords.c3) << '\n';
  s << "G1          " << format_complex(r.invariants.g1) << '\n';
  s << "G2          " << format_real(r.invariants.g2) << '\n';
  s << "e_p         " << format_real(r.ep_closed) << '\n';
  if (r.ep_mc) {
    s << "e_p (MC)    " << r.ep_mc->mean << " +- " << r.ep_mc->std_error << "  (n=" << r.ep_mc->samples
      << ", seed=" << r.ep_mc->seed << ")\n";
  }
  s << "perfect     " << (r.perfect_entangler ? "yes" : "no") << '\n';
  s << "spe         " << (r.spe ? "yes" : "no");
  if (r.spe_phi) s << "  phi=" << *r.spe_phi;
  s << '\n';
  os << s.str();
}

std::vector<TableRow> reference_table(double controlled_theta) {
  const Gate local(kron2(Mat2d(axis_rotation<double>(1, 0.4) * axis_rotation<double>(3, 1.2)),
                         Mat2d(axis_rotation<double>(2, -0.9))));
  std::vector<TableRow> rows;
  for (const auto& [label, name] : std::vector<std::pair<std::string, std::string>>{
           {"CNOT", "cnot"}, {"DCNOT", "dcnot"}, {"B", "b"}, {"SWAP", "swap"}, {"sqrt(SWAP)", "sqrtswap"}}) {
    rows.push_back({label, analyze(*builtin_gate(name), name)});
  }
  rows.push_back({"controlled-U", analyze(controlled_u(controlled_theta), "controlled_u")});
  rows.push_back({"A x B", analyze(local, "local")});
  return rows;
}

}  // namespace weylforge
