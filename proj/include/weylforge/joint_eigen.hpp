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

#include <array>
#include <cmath>
#include <utility>

#include "weylforge/linalg.hpp"

namespace weylforge {

template <typename Real>
struct JointEigen {
  std::array<std::pair<Real, Real>, 4> values;  // (x_k, y_k): O^T X O and O^T Y O diagonals
  RealMat4<Real> basis;                         // O, real orthogonal with det +1
};

namespace detail {

template <typename Real>
Real off_diagonal_max(const RealMat4<Real>& a) {
  Real m = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (p != q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

}  // namespace detail

/// Simultaneous diagonalisation of two commuting real symmetric 4x4 matrices.
///
/// Jacobi sweeps over (p, q) pivots; each rotation angle is the joint optimum for both
/// matrices (it maximises the combined diagonal spread, equivalently minimises the combined
/// off-diagonal mass), so degenerate clusters of one matrix are resolved by the other in the
/// same pass.
template <typename Real>
JointEigen<Real> eig_commuting_symmetric_pair(const RealMat4<Real>& x, const RealMat4<Real>& y,
                                              const Tolerances& tol = kDefaultTolerances) {
  if (!x.allFinite() || !y.allFinite()) throw PreconditionError("joint eigensolver: non-finite input");
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > tol.commutation ||
      (y - y.transpose()).cwiseAbs().maxCoeff() > tol.commutation)
    throw PreconditionError("joint eigensolver: inputs must be symmetric");
  if ((x * y - y * x).cwiseAbs().maxCoeff() > tol.commutation)
    throw PreconditionError("joint eigensolver: inputs do not commute");

  RealMat4<Real> a = x, b = y;
  RealMat4<Real> v = RealMat4<Real>::Identity();
  const Real scale = std::max<Real>(Real(1), std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()));
  const Real eps = std::numeric_limits<Real>::epsilon() * scale;

  for (int sweep = 0; sweep < 64; ++sweep) {
    if (std::max(detail::off_diagonal_max(a), detail::off_diagonal_max(b)) <= eps) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Real ha0 = a(p, p) - a(q, q), ha1 = 2 * a(p, q);
        const Real hb0 = b(p, p) - b(q, q), hb1 = 2 * b(p, q);
        const Real g11 = ha0 * ha0 + hb0 * hb0;
        const Real g12 = ha0 * ha1 + hb0 * hb1;
        const Real g22 = ha1 * ha1 + hb1 * hb1;
        if (std::abs(a(p, q)) <= eps && std::abs(b(p, q)) <= eps) continue;
        const Real theta = std::atan2(2 * g12, g11 - g22) / 4;
        const Real c = std::cos(theta), s = std::sin(theta);
        RealMat4<Real> j = RealMat4<Real>::Identity();
        j(p, p) = c;
        j(q, p) = s;
        j(p, q) = -s;
        j(q, q) = c;
        a = j.transpose() * a * j;
        b = j.transpose() * b * j;
        v = v * j;
      }
    }
  }

  const Real residual = std::max(detail::off_diagonal_max(a), detail::off_diagonal_max(b));
  if (residual > tol.diagonality)
    throw InternalConsistencyError("joint eigensolver did not converge (residual " + std::to_string(residual) + ")");

  if (v.determinant() < 0) v.col(0) = -v.col(0);

  JointEigen<Real> out;
  out.basis = v;
  for (int k = 0; k < 4; ++k) out.values[k] = {a(k, k), b(k, k)};
  return out;
}

}  // namespace weylforge
