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


#include "weylforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>

#include "weylforge/coords.hpp"

namespace weylforge {

using nlohmann::json;
using C = std::complex<double>;

namespace {

Mat4d permutation(const std::array<int, 4>& image) {
  Mat4d p = Mat4d::Zero();
  for (int k = 0; k < 4; ++k) p(image[k], k) = 1;
  return p;
}

C complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <int N>
Eigen::Matrix<C, N, N> square_from_json(const json& j) {
  if (!j.is_array() || j.size() != N) throw InvalidInput("matrix must have " + std::to_string(N) + " rows");
  Eigen::Matrix<C, N, N> m;
  for (int r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N)
      throw InvalidInput("matrix row must have " + std::to_string(N) + " entries");
    for (int c = 0; c < N; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

template <typename M>
json square_to_json(const M& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Gate controlled_u(double theta, double phi) {
  Mat4d m = Mat4d::Identity();
  m(2, 2) = std::cos(theta);
  m(2, 3) = std::sin(theta) * std::exp(C(0, -phi));
  m(3, 2) = -std::sin(theta) * std::exp(C(0, phi));
  m(3, 3) = std::cos(theta);
  return Gate(m);
}

std::optional<Gate> builtin_gate(const std::string& name) {
  const Mat4d cnot12 = permutation({0, 1, 3, 2});
  const Mat4d cnot21 = permutation({0, 3, 2, 1});
  if (name == "cnot") return Gate(cnot12);
  if (name == "dcnot") return Gate(cnot21 * cnot12);
  if (name == "swap") return Gate(permutation({0, 2, 1, 3}));
  if (name == "identity") return Gate(Mat4d::Identity());
  if (name == "b") return Gate(canonical_gate(kQuarterPi<double>, kQuarterPi<double> / 2, 0.0));
  if (name == "sqrtswap") {
    Mat4d m = Mat4d::Identity();
    m(1, 1) = m(2, 2) = C(0.5, 0.5);
    m(1, 2) = m(2, 1) = C(0.5, -0.5);
    return Gate(m);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_gate_names() { return {"cnot", "dcnot", "swap", "sqrtswap", "b", "identity"}; }

json matrix_to_json(const Mat2d& m) { return square_to_json(m); }
json matrix_to_json(const Mat4d& m) { return square_to_json(m); }
Mat2d mat2_from_json(const json& j) { return square_from_json<2>(j); }
Mat4d mat4_from_json(const json& j) { return square_from_json<4>(j); }

json gate_to_json(const NamedGate& g) {
  json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["matrix"] = matrix_to_json(g.gate.matrix());
  return j;
}

NamedGate gate_from_json(const json& j, double tolerance) {
  if (!j.is_object() || !j.contains("matrix")) throw InvalidInput("gate file needs a \"matrix\" field");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("gate \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  const Gate loaded(mat4_from_json(j["matrix"]), tolerance);
  // Accepted only under a loosened tolerance: analyze the closest unitary instead.
  if (loaded.unitarity_residual() > kDefaultTolerances.unitarity) return {name, Gate(nearest_unitary(loaded.matrix()))};
  return {name, loaded};
}

NamedGate load_gate(const std::string& spec, double tolerance) {
  if (!std::filesystem::exists(spec)) {
    if (auto g = builtin_gate(spec)) return {spec, *g};
    throw InvalidInput("no such gate file or built-in gate: " + spec);
  }
  std::ifstream in(spec);
  if (!in) throw InvalidInput("cannot read " + spec);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(spec + ": " + e.what());
  }
  return gate_from_json(j, tolerance);
}

void save_gate(const std::string& path, const NamedGate& g) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << gate_to_json(g).dump(2) << '\n';
}

json circuit_to_json(const Circuit& c) {
  json layers = json::array();
  for (const auto& layer : c.layers) {
    if (const auto* n = std::get_if<NonlocalLayer>(&layer)) {
      layers.push_back({{"kind", "nonlocal"}, {"phi", n->phi}});
    } else {
      const auto& l = std::get<LocalLayer>(layer);
      layers.push_back({{"kind", "local"}, {"top", matrix_to_json(l.top)}, {"bottom", matrix_to_json(l.bottom)}});
    }
  }
  return {{"layers", layers}, {"global_phase", c.global_phase}};
}

Circuit circuit_from_json(const json& j) {
  if (!j.is_object() || !j.contains("layers") || !j["layers"].is_array())
    throw InvalidInput("circuit file needs a \"layers\" array");
  Circuit c;
  if (j.contains("global_phase")) c.global_phase = j["global_phase"].get<double>();
  for (const auto& l : j["layers"]) {
    const std::string kind = l.value("kind", "");
    if (kind == "nonlocal") {
      c.layers.push_back(NonlocalLayer{l.at("phi").get<double>()});
    } else if (kind == "local") {
      c.layers.push_back(LocalLayer{mat2_from_json(l.at("top")), mat2_from_json(l.at("bottom"))});
    } else {
      throw InvalidInput("unknown layer kind: " + kind);
    }
  }
  return c;
}

}  // namespace weylforge
