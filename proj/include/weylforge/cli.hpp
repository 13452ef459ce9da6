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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylforge/coords.hpp"
#include "weylforge/entangle.hpp"
#include "weylforge/invariants.hpp"
#include "weylforge/linalg.hpp"

namespace weylforge {

struct McRequest {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

struct AnalysisReport {
  std::string name;
  Coords coords;
  LocalInvariants<double> invariants;
  double ep_closed = 0;
  std::optional<EpEstimate> ep_mc;
  bool perfect_entangler = false;
  bool spe = false;
  std::optional<double> spe_phi;
};

AnalysisReport analyze(const Gate& g, const std::string& name = "", const std::optional<McRequest>& mc = std::nullopt,
                       const Tolerances& tol = kDefaultTolerances);
nlohmann::json report_to_json(const AnalysisReport& r);
void print_report(std::ostream& os, const AnalysisReport& r);

/// "re + im i" with 12 significant digits and no negative zeros.
/// Text output prints magnitudes below this as 0; JSON output keeps raw values.
inline constexpr double kDisplayZero = 1e-12;

std::string format_real(double x);
std::string format_complex(std::complex<double> z);

/// One row per reference gate, computed from its literal matrix.
struct TableRow {
  std::string label;
  AnalysisReport report;
};

std::vector<TableRow> reference_table(double controlled_theta = 1.0);

/// Weyl-chamber figure in a fixed oblique projection (x, y) of (c1, c2, c3).
struct ChamberElement {
  std::string element;  // vertex, edge, spe_segment, point
  std::string label;
  Coords c;
  double x = 0, y = 0;
};

std::pair<double, double> chamber_projection(const Coords& c);
std::vector<ChamberElement> chamber_elements();
std::string chamber_csv();
std::string chamber_svg();

/// Command-line entry point; returns the process exit code (0 ok, 1 infeasible synthesis,
/// 2 invalid input, 3 internal error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylforge
