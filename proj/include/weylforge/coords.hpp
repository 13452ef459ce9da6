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

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "weylforge/linalg.hpp"

namespace weylforge {

/// Nonlocal coordinates (c1, c2, c3) of exp(-i(c1 XX + c2 YY + c3 ZZ)), radians.
template <typename Real>
struct CanonicalCoords {
  Real c1 = 0, c2 = 0, c3 = 0;

  Real operator[](int k) const { return k == 0 ? c1 : (k == 1 ? c2 : c3); }
  std::array<Real, 3> array() const { return {c1, c2, c3}; }

  /// pi/4 >= c1 >= c2 >= |c3|, with optional slack.
  bool in_chamber(Real slack = 0) const {
    return c1 <= kQuarterPi<Real> + slack && c2 <= c1 + slack && std::abs(c3) <= c2 + slack;
  }

  friend bool operator==(const CanonicalCoords&, const CanonicalCoords&) = default;
};

using Coords = CanonicalCoords<double>;

template <typename Real>
Real max_abs_difference(const CanonicalCoords<Real>& a, const CanonicalCoords<Real>& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2), std::abs(a.c3 - b.c3)});
}

template <typename Real>
std::ostream& operator<<(std::ostream& os, const CanonicalCoords<Real>& c) {
  return os << '[' << c.c1 << ", " << c.c2 << ", " << c.c3 << ']';
}

/// Eigenphases of the canonical gate in the magic basis; the gate acts as e^{-i lambda_k}.
template <typename Real>
struct SpectralPhases {
  std::array<Real, 4> lambda{};
};

template <typename Real>
SpectralPhases<Real> spectral_phases(const CanonicalCoords<Real>& c) {
  return {{c.c1 - c.c2 + c.c3, -c.c1 + c.c2 + c.c3, -(c.c1 + c.c2 + c.c3), c.c1 + c.c2 - c.c3}};
}

/// Inverse of spectral_phases restricted to (lambda1, lambda2, lambda4).
template <typename Real>
CanonicalCoords<Real> coords_from_phases(Real l1, Real l2, Real l4) {
  return {(l1 + l4) / 2, (l2 + l4) / 2, (l1 + l2) / 2};
}

/// exp(-i(c1 XX + c2 YY + c3 ZZ)) written out in the computational basis.
template <typename Real>
Mat4<Real> canonical_gate(const CanonicalCoords<Real>& c) {
  using C = Complex<Real>;
  const Real cm = std::cos(c.c1 - c.c2), cp = std::cos(c.c1 + c.c2);
  const Real sm = std::sin(c.c1 - c.c2), sp = std::sin(c.c1 + c.c2);
  const C e = std::exp(C(0, -c.c3)), f = std::exp(C(0, c.c3));
  const C mi(0, -1);
  Mat4<Real> u = Mat4<Real>::Zero();
  u(0, 0) = e * cm;
  u(0, 3) = mi * e * sm;
  u(1, 1) = f * cp;
  u(1, 2) = mi * f * sp;
  u(2, 1) = mi * f * sp;
  u(2, 2) = f * cp;
  u(3, 0) = mi * e * sm;
  u(3, 3) = e * cm;
  return u;
}

template <typename Real>
Mat4<Real> canonical_gate(Real c1, Real c2, Real c3) {
  return canonical_gate(CanonicalCoords<Real>{c1, c2, c3});
}

namespace detail {

// Lexicographic a > b where entries closer than tol compare equal.
template <typename Real>
bool lex_greater(const std::array<Real, 3>& a, const std::array<Real, 3>& b, Real tol) {
  for (int k = 0; k < 3; ++k) {
    if (a[k] > b[k] + tol) return true;
    if (a[k] < b[k] - tol) return false;
  }
  return false;
}

}  // namespace detail

/// Chamber representative of the class of c.
///
/// The local freedoms are: shifting any coordinate by a multiple of pi/2, permuting the
/// coordinates, and flipping the signs of any two. The search is exhaustive over one period.
/// Among admissible candidates the one with the smallest chamber violation wins; near-ties
/// (the c1 = pi/4 face, where (pi/4, c2, c3) ~ (pi/4, c2, -c3)) go to the lexicographically
/// greatest triple. The result is snapped so the chamber inequalities hold exactly.
template <typename Real>
CanonicalCoords<Real> reduce_to_weyl(const CanonicalCoords<Real>& c, Real slack = Real(1e-9)) {
  constexpr Real half_pi = std::numbers::pi_v<Real> / 2;
  constexpr Real quarter_pi = kQuarterPi<Real>;
  std::array<Real, 3> base{};
  for (int k = 0; k < 3; ++k) {
    Real r = std::fmod(c[k], half_pi);
    if (r < 0) r += half_pi;
    if (r >= half_pi) r -= half_pi;
    base[k] = r;
  }

  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static constexpr std::array<std::array<int, 3>, 4> flips{{{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};

  bool found = false;
  Real best_violation = 0;
  std::array<Real, 3> best{};
  for (const auto& p : perms) {
    for (const auto& f : flips) {
      std::array<Real, 3> v{f[0] * base[p[0]], f[1] * base[p[1]], f[2] * base[p[2]]};
      for (int s0 = -1; s0 <= 1; ++s0) {
        for (int s1 = -1; s1 <= 1; ++s1) {
          for (int s2 = -1; s2 <= 1; ++s2) {
            const std::array<Real, 3> t{v[0] + s0 * half_pi, v[1] + s1 * half_pi, v[2] + s2 * half_pi};
            const Real violation =
                std::max({Real(0), t[0] - quarter_pi, t[1] - t[0], std::abs(t[2]) - t[1]});
            if (violation > slack) continue;
            const bool better = !found || violation < best_violation - Real(1e-12) ||
                                (violation <= best_violation + Real(1e-12) && detail::lex_greater(t, best, Real(1e-12)));
            if (better) {
              found = true;
              best_violation = violation;
              best = t;
            }
          }
        }
      }
    }
  }
  if (!found) throw InternalConsistencyError("reduce_to_weyl: no chamber representative found");

  CanonicalCoords<Real> out{best[0], best[1], best[2]};
  out.c1 = std::clamp(out.c1, Real(0), quarter_pi);
  out.c2 = std::clamp(out.c2, Real(0), out.c1);
  out.c3 = std::clamp(out.c3, -out.c2, out.c2);
  return out;
}

}  // namespace weylforge
