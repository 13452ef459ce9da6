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
#include <vector>

#include "weylforge/coords.hpp"
#include "weylforge/joint_eigen.hpp"
#include "weylforge/linalg.hpp"

namespace weylforge {

template <typename Real>
struct LocalInvariants {
  Complex<Real> g1;
  Real g2 = 0;
};

template <typename Real>
Real max_abs_difference(const LocalInvariants<Real>& a, const LocalInvariants<Real>& b) {
  return std::max(std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2));
}

/// Magic-basis change of frame Q. Columns are Phi+, i Psi+, Psi-, i Phi-; in this frame
/// SU(2) x SU(2) becomes SO(4) and canonical gates are diagonal.
template <typename Real = double>
Mat4<Real> magic_frame() {
  using C = Complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  Mat4<Real> q;
  q << C(1), C(0), C(0), C(0, 1),
       C(0), C(0, 1), C(1), C(0),
       C(0), C(0, 1), C(-1), C(0),
       C(1), C(0), C(0), C(0, -1);
  return q * C(r);
}

/// Position of lambda_k (k = 0..3 for lambda1..lambda4) on the diagonal of Q^dag U(c) Q.
inline constexpr std::array<int, 4> kMagicDiagonalSlot{0, 3, 2, 1};

/// m(U) = U_B^T U_B with U_B = Q^dag U Q.
template <typename Derived>
auto m_matrix(const Eigen::MatrixBase<Derived>& u) {
  using Real = typename Derived::Scalar::value_type;
  const Mat4<Real> q = magic_frame<Real>();
  const Mat4<Real> ub = q.adjoint() * u * q;
  return Mat4<Real>(ub.transpose() * ub);
}

template <typename Derived>
auto local_invariants(const Eigen::MatrixBase<Derived>& u) {
  using Real = typename Derived::Scalar::value_type;
  const Mat4<Real> m = m_matrix(u);
  const Complex<Real> det = u.determinant();
  const Complex<Real> tr = m.trace();
  const Complex<Real> tr2 = (m * m).trace();
  LocalInvariants<Real> out;
  out.g1 = tr * tr / (Real(16) * det);
  out.g2 = ((tr * tr - tr2) / (Real(4) * det)).real();
  return out;
}

template <typename Real>
LocalInvariants<Real> invariants_from_coords(const CanonicalCoords<Real>& c) {
  using C = Complex<Real>;
  const C bracket = std::exp(C(0, -2 * c.c3)) * std::cos(2 * (c.c1 - c.c2)) +
                    std::exp(C(0, 2 * c.c3)) * std::cos(2 * (c.c1 + c.c2));
  LocalInvariants<Real> out;
  out.g1 = bracket * bracket / Real(4);
  out.g2 = std::cos(4 * c.c1) + std::cos(4 * c.c2) + std::cos(4 * c.c3);
  return out;
}

/// Joint eigen-decomposition of m = X + iY: values x_k + i y_k on the unit circle and the real
/// orthogonal frame diagonalising m.
template <typename Real>
JointEigen<Real> m_eigen(const Mat4<Real>& m, const Tolerances& tol = kDefaultTolerances) {
  // m is symmetric and unitary, so Re m and Im m are real symmetric and commute.
  const Mat4<Real> sym = (m + m.transpose()) / Real(2);
  return eig_commuting_symmetric_pair<Real>(sym.real(), sym.imag(), tol);
}

template <typename Real>
std::array<Complex<Real>, 4> m_eigenvalues(const Mat4<Real>& m, const Tolerances& tol = kDefaultTolerances) {
  const auto je = m_eigen(m, tol);
  std::array<Complex<Real>, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = {je.values[k].first, je.values[k].second};
  return out;
}

namespace detail {

template <typename Real>
Real cross(const Complex<Real>& o, const Complex<Real>& a, const Complex<Real>& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

template <typename Real>
Real distance_to_segment(const Complex<Real>& p, const Complex<Real>& a, const Complex<Real>& b) {
  const Complex<Real> ab = b - a;
  const Real len2 = std::norm(ab);
  if (len2 == 0) return std::abs(p - a);
  const Real t = std::clamp(((p - a) * std::conj(ab)).real() / len2, Real(0), Real(1));
  return std::abs(p - (a + t * ab));
}

}  // namespace detail

/// Whether the origin lies in the convex hull of a small planar point set, counting a band of
/// width `band` around the hull boundary as inside.
template <typename Real>
bool hull_contains_origin(const std::vector<Complex<Real>>& points, Real band) {
  const Complex<Real> origin(0);
  std::vector<Complex<Real>> pts;
  for (const auto& p : points) {
    const bool duplicate = std::any_of(pts.begin(), pts.end(), [&](const auto& q) { return std::abs(p - q) <= band; });
    if (!duplicate) pts.push_back(p);
  }
  if (pts.size() == 1) return std::abs(pts.front()) <= band;

  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  // Monotone chain; nearly collinear middle points are dropped so a flat set collapses to a segment.
  const auto turn = [band](const auto& o, const auto& a, const auto& b) {
    return detail::cross(o, a, b) > band * std::max(std::abs(a - o), std::abs(b - o));
  };
  const std::size_t n = pts.size();
  std::vector<Complex<Real>> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  if (hull.size() <= 2) return detail::distance_to_segment(origin, pts.front(), pts.back()) <= band;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    // counter-clockwise hull: inside means left of, or within band of, every edge
    if (detail::cross(a, b, origin) / std::abs(b - a) < -band) return false;
  }
  return true;
}

/// Perfect entangler iff 0 lies in the convex hull of the eigenvalues of m(U).
template <typename Derived>
bool is_perfect_entangler(const Eigen::MatrixBase<Derived>& u, const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::Scalar::value_type;
  const auto ev = m_eigenvalues<Real>(m_matrix(su4_normalize(u)), tol);
  return hull_contains_origin<Real>({ev.begin(), ev.end()}, Real(tol.hull));
}

}  // namespace weylforge
