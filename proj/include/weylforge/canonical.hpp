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
#include <limits>
#include <numeric>
#include <utility>

#include "weylforge/coords.hpp"
#include "weylforge/invariants.hpp"
#include "weylforge/linalg.hpp"

namespace weylforge {

/// Canonical decomposition g = e^{i global_phase} (a1 x b1) U(core) (a2 x b2) with SU(2) locals.
template <typename Real>
struct KakFactors {
  Mat2<Real> a1, b1, a2, b2;
  CanonicalCoords<Real> core;
  Real global_phase = 0;
  Real residual = 0;  // max entry deviation of the reassembled product from the input

  Mat4<Real> left() const { return kron2(a1, b1); }
  Mat4<Real> right() const { return kron2(a2, b2); }
  Mat4<Real> reassemble() const {
    return std::exp(Complex<Real>(0, global_phase)) * left() * canonical_gate(core) * right();
  }
};

/// Distance between the chamber representatives of a and b. Points within `face` of the
/// c1 = pi/4 face are also compared against the mirror image (pi/4, c2, -c3).
template <typename Real>
Real chamber_distance(const CanonicalCoords<Real>& a, const CanonicalCoords<Real>& b, Real face = Real(1e-7)) {
  const auto ra = reduce_to_weyl(a), rb = reduce_to_weyl(b);
  Real d = max_abs_difference(ra, rb);
  if (std::abs(ra.c1 - kQuarterPi<Real>) <= face && std::abs(rb.c1 - kQuarterPi<Real>) <= face)
    d = std::min(d, max_abs_difference(ra, CanonicalCoords<Real>{rb.c1, rb.c2, -rb.c3}));
  return d;
}

/// True iff a and b name the same local-equivalence class.
template <typename Real>
bool coords_equivalent(const CanonicalCoords<Real>& a, const CanonicalCoords<Real>& b, Real tol = Real(1e-9)) {
  const auto ra = reduce_to_weyl(a), rb = reduce_to_weyl(b);
  const bool coords_match = chamber_distance(ra, rb) <= tol;
  const bool invariants_match =
      max_abs_difference(invariants_from_coords(ra), invariants_from_coords(rb)) <= Real(10) * tol;
  return coords_match && invariants_match;
}

/// Projection of a 2x2 matrix onto SU(2) along the quaternion components.
template <typename Real>
Mat2<Real> project_su2(const Mat2<Real>& x) {
  const Complex<Real> alpha = (x(0, 0) + std::conj(x(1, 1))) / Real(2);
  const Complex<Real> beta = (x(1, 0) - std::conj(x(0, 1))) / Real(2);
  const Real n = std::sqrt(std::norm(alpha) + std::norm(beta));
  Mat2<Real> p;
  p << alpha / n, -std::conj(beta) / n, beta / n, std::conj(alpha) / n;
  return p;
}

/// Splits a local 4x4 unitary into a x b with a, b in SU(2). Overall sign of the pair is arbitrary.
template <typename Real>
std::pair<Mat2<Real>, Mat2<Real>> kron_factor(const Mat4<Real>& m) {
  int bi = 0, bj = 0;
  Real best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Real n = m.template block<2, 2>(2 * i, 2 * j).squaredNorm();
      if (n > best) best = n, bi = i, bj = j;
    }
  Mat2<Real> b = m.template block<2, 2>(2 * bi, 2 * bj);
  b /= std::sqrt(b.determinant());
  Mat2<Real> a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = (b.adjoint() * m.template block<2, 2>(2 * i, 2 * j)).trace() / Real(2);
  return {project_su2(a), project_su2(b)};
}

namespace detail {

template <typename Real>
std::array<Real, 4> half_phases(const Mat4<Real>& u, const Tolerances& tol) {
  const auto ev = m_eigenvalues<Real>(m_matrix(su4_normalize(u)), tol);
  std::array<Real, 4> lambda{};
  for (int k = 0; k < 4; ++k) lambda[k] = -std::arg(ev[k]) / 2;
  return lambda;
}

}  // namespace detail

/// Chamber coordinates of the class of u.
///
/// The eigenvalues of m(U) for det U = 1 are e^{-2i lambda_k}; halving their phases gives the
/// lambdas mod pi. Every assignment of the four phases to lambda1..lambda4 is tried and reduced
/// into the chamber, and the candidate whose invariants agree with the matrix invariants wins.
/// Mod-pi branch shifts of a lambda move two coordinates by pi/2 each, which the chamber
/// reduction already absorbs, so they are not enumerated separately.
template <typename Derived>
auto extract_coordinates(const Eigen::MatrixBase<Derived>& u, const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::Scalar::value_type;
  const Mat4<Real> g = u;
  const auto lambda = detail::half_phases<Real>(g, tol);
  const auto target = local_invariants(g);

  std::array<int, 4> order{0, 1, 2, 3};
  CanonicalCoords<Real> best{};
  Real best_distance = std::numeric_limits<Real>::infinity();
  do {
    const auto c = coords_from_phases(lambda[order[0]], lambda[order[1]], lambda[order[3]]);
    const auto r = reduce_to_weyl(c, Real(tol.chamber_slack));
    const Real d = max_abs_difference(invariants_from_coords(r), target);
    if (d < best_distance - Real(1e-12) ||
        (d <= best_distance + Real(1e-12) && detail::lex_greater(r.array(), best.array(), Real(1e-12)))) {
      best_distance = std::min(best_distance, d);
      best = r;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (!(best_distance <= tol.extraction))
    throw InternalConsistencyError("extract_coordinates: no candidate reproduces the local invariants");
  return best;
}

template <typename Real>
CanonicalCoords<Real> extract_coordinates(const GateMatrix<Real>& g, const Tolerances& tol = kDefaultTolerances) {
  return extract_coordinates(g.matrix(), tol);
}

/// Canonical decomposition of u around a prescribed core that must lie in u's class.
///
/// In the magic frame U_B = K1 D O^T with D = Q^dag U(core) Q diagonal, O the real orthogonal
/// eigenframe of m(U) = O D^2 O^T, and K1 = U_B O D^{-1} orthogonal by construction.
template <typename Real>
KakFactors<Real> kak_decompose_with_core(const Mat4<Real>& u, const CanonicalCoords<Real>& core,
                                         const Tolerances& tol = kDefaultTolerances) {
  using C = Complex<Real>;
  const Mat4<Real> q = magic_frame<Real>();
  const C det = u.determinant();
  const C root = std::pow(std::abs(det), Real(0.25)) * std::exp(C(0, std::arg(det) / 4));
  Mat4<Real> us = u / root;

  Eigen::Matrix<C, 4, 1> d = (q.adjoint() * canonical_gate(core) * q).diagonal();
  const auto je = m_eigen<Real>(m_matrix(us), tol);

  // Match the spectrum of m(us) (or of -m(us), i.e. of m(i us)) to d^2 slot by slot.
  std::array<int, 4> order{0, 1, 2, 3}, best_order = order;
  Real best_cost = std::numeric_limits<Real>::infinity();
  int best_sign = 1;
  for (int sign : {1, -1}) {
    std::sort(order.begin(), order.end());
    do {
      Real cost = 0;
      for (int j = 0; j < 4; ++j) {
        const C ev(je.values[order[j]].first, je.values[order[j]].second);
        cost = std::max(cost, std::abs(Real(sign) * ev - d(j) * d(j)));
      }
      if (cost < best_cost) best_cost = cost, best_order = order, best_sign = sign;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (best_sign < 0) us *= C(0, 1);

  RealMat4<Real> o;
  for (int j = 0; j < 4; ++j) o.col(j) = je.basis.col(best_order[j]);
  if (o.determinant() < 0) o.col(0) = -o.col(0);

  const Mat4<Real> ub = q.adjoint() * us * q;
  const Mat4<Real> oc = o.template cast<C>();
  const Mat4<Real> k1 = ub * oc * d.cwiseInverse().asDiagonal();

  KakFactors<Real> out;
  out.core = core;
  std::tie(out.a1, out.b1) = kron_factor<Real>(q * k1 * q.adjoint());
  std::tie(out.a2, out.b2) = kron_factor<Real>(q * oc.transpose() * q.adjoint());

  // Fold the residual sign ambiguity of the Kronecker split into the global phase.
  const Mat4<Real> bare = out.left() * canonical_gate(core) * out.right();
  const C overlap = (bare.adjoint() * u).trace();
  out.global_phase = std::arg(overlap);
  out.residual = (u - std::exp(C(0, out.global_phase)) * bare).cwiseAbs().maxCoeff();
  if (!(out.residual <= Real(1e-6)))
    throw InternalConsistencyError("kak_decompose: reassembly residual " + std::to_string(out.residual));
  return out;
}

/// Canonical decomposition with the chamber representative as core.
template <typename Derived>
auto kak_decompose(const Eigen::MatrixBase<Derived>& u, const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::Scalar::value_type;
  const Mat4<Real> g = u;
  return kak_decompose_with_core<Real>(g, extract_coordinates(g, tol), tol);
}

template <typename Real>
KakFactors<Real> kak_decompose(const GateMatrix<Real>& g, const Tolerances& tol = kDefaultTolerances) {
  return kak_decompose(g.matrix(), tol);
}

}  // namespace weylforge
