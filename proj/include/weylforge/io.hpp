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
#include <vector>

#include <nlohmann/json.hpp>

#include "weylforge/linalg.hpp"
#include "weylforge/synth.hpp"

namespace weylforge {

struct NamedGate {
  std::string name;
  Gate gate;
};

/// Literal matrices for cnot, dcnot, swap, sqrtswap, b, identity; nullopt for other names.
std::optional<Gate> builtin_gate(const std::string& name);
std::vector<std::string> builtin_gate_names();

/// |0><0| x I + |1><1| x [[cos t, sin t e^{-i p}], [-sin t e^{i p}, cos t]]; class [t/2, 0, 0].
Gate controlled_u(double theta, double phi = 0);

nlohmann::json matrix_to_json(const Mat2d& m);
nlohmann::json matrix_to_json(const Mat4d& m);
Mat2d mat2_from_json(const nlohmann::json& j);
Mat4d mat4_from_json(const nlohmann::json& j);

nlohmann::json gate_to_json(const NamedGate& g);
NamedGate gate_from_json(const nlohmann::json& j, double tolerance = kDefaultTolerances.unitarity);

/// Reads a gate file; if `spec` is not an existing path it is looked up as a built-in name.
NamedGate load_gate(const std::string& spec, double tolerance = kDefaultTolerances.unitarity);
void save_gate(const std::string& path, const NamedGate& g);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace weylforge
