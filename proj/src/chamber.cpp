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


#include <iomanip>
#include <sstream>

#include "weylforge/cli.hpp"

namespace weylforge {

namespace {

constexpr double kScale = 360;
constexpr double kOriginX = 40;
constexpr double kOriginY = 260;

ChamberElement make(const std::string& element, const std::string& label, const Coords& c) {
  const auto [x, y] = chamber_projection(c);
  return {element, label, c, x, y};
}

}  // namespace

std::pair<double, double> chamber_projection(const Coords& c) {
  return {c.c1 + 0.5 * c.c2, 0.6 * c.c2 + c.c3};
}

std::vector<ChamberElement> chamber_elements() {
  const double q = kQuarterPi<double>;
  const std::vector<std::pair<std::string, Coords>> vertices{
      {"O", {0, 0, 0}}, {"A1", {q, 0, 0}}, {"A2", {q, q, 0}}, {"A3", {q, q, q}}, {"A3'", {q, q, -q}}};
  static constexpr std::pair<int, int> edges[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  std::vector<ChamberElement> out;
  for (const auto& [label, c] : vertices) out.push_back(make("vertex", label, c));
  for (const auto& [a, b] : edges) {
    const std::string label = vertices[a].first + "-" + vertices[b].first;
    out.push_back(make("edge", label, vertices[a].second));
    out.push_back(make("edge", label, vertices[b].second));
  }
  out.push_back(make("spe_segment", "A1-A2", vertices[1].second));
  out.push_back(make("spe_segment", "A1-A2", vertices[2].second));
  out.push_back(make("point", "A1 (CNOT)", {q, 0, 0}));
  out.push_back(make("point", "B", {q, q / 2, 0}));
  out.push_back(make("point", "A2 (DCNOT)", {q, q, 0}));
  return out;
}

std::string chamber_csv() {
  std::ostringstream s;
  s << std::setprecision(12) << "element,label,c1,c2,c3,x,y\n";
  for (const auto& e : chamber_elements())
    s << e.element << ",\"" << e.label << "\"," << e.c.c1 << ',' << e.c.c2 << ',' << e.c.c3 << ',' << e.x << ','
      << e.y << '\n';
  return s.str();
}

std::string chamber_svg() {
  const auto px = [](double x) { return kOriginX + kScale * x; };
  const auto py = [](double y) { return kOriginY - kScale * y; };
  const auto data = [](const ChamberElement& e, const char* suffix) {
    std::ostringstream s;
    s << std::setprecision(12) << " data-c1" << suffix << "=\"" << e.c.c1 << "\" data-c2" << suffix << "=\"" << e.c.c2
      << "\" data-c3" << suffix << "=\"" << e.c.c3 << "\" data-x" << suffix << "=\"" << e.x << "\" data-y" << suffix
      << "=\"" << e.y << '"';
    return s.str();
  };

  const auto elements = chamber_elements();
  std::ostringstream s;
  s << std::setprecision(12);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"440\" viewBox=\"0 0 520 440\">\n"
    << "  <g fill=\"none\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    if (e.element != "edge" && e.element != "spe_segment") continue;
    const auto& f = elements[++i];
    const bool spe = e.element == "spe_segment";
    s << "    <line class=\"" << e.element << "\" data-label=\"" << e.label << '"' << data(e, "-from") << data(f, "-to")
      << " x1=\"" << px(e.x) << "\" y1=\"" << py(e.y) << "\" x2=\"" << px(f.x) << "\" y2=\"" << py(f.y)
      << "\" stroke=\"" << (spe ? "#c0392b" : "#555555") << "\" stroke-width=\"" << (spe ? 3 : 1) << "\"/>\n";
  }
  s << "  </g>\n";
  for (const auto& e : elements) {
    if (e.element != "vertex" && e.element != "point") continue;
    const bool point = e.element == "point";
    s << "  <circle class=\"" << e.element << "\" data-label=\"" << e.label << '"' << data(e, "") << " cx=\""
      << px(e.x) << "\" cy=\"" << py(e.y) << "\" r=\"" << (point ? 4 : 2) << "\" fill=\""
      << (point ? "#c0392b" : "#555555") << "\"/>\n";
    s << "  <text class=\"" << e.element << "-label\" x=\"" << px(e.x) + 6 << "\" y=\"" << py(e.y) - 6
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << e.label << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace weylforge
