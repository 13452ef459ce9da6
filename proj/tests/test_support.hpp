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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "weylforge/coords.hpp"
#include "weylforge/linalg.hpp"

namespace wf_test {

using weylforge::Coords;
using weylforge::Mat2d;
using weylforge::Mat4d;
using C = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQ = kPi / 4;

inline Mat2d pauli(int k) { return weylforge::pauli<double>(k); }
inline Mat4d kron(const Mat2d& a, const Mat2d& b) {
  Mat4d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

/// exp(-i H) for Hermitian H via its eigendecomposition.
template <int N>
Eigen::Matrix<C, N, N> expm_hermitian(const Eigen::Matrix<C, N, N>& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<C, N, N>> es(h);
  Eigen::Matrix<C, N, 1> phases;
  for (int k = 0; k < N; ++k) phases(k) = std::exp(C(0, -es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat4d canonical_by_expm(double c1, double c2, double c3) {
  const Mat4d h = c1 * kron(pauli(1), pauli(1)) + c2 * kron(pauli(2), pauli(2)) + c3 * kron(pauli(3), pauli(3));
  return expm_hermitian<4>(h);
}

/// Haar SU(2) via QR of a complex Ginibre matrix with the standard phase fix.
inline Mat2d random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat2d z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z(i, j) = C(n(rng), n(rng));
  Eigen::HouseholderQR<Mat2d> qr(z);
  Mat2d q = qr.householderQ();
  const Mat2d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q / std::sqrt(q.determinant());
}

inline Mat4d random_local(std::mt19937_64& rng) { return kron(random_su2(rng), random_su2(rng)); }

/// Uniform point of the chamber by rejection from the bounding box.
inline Coords random_chamber(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, kQ), v(-kQ, kQ);
  while (true) {
    const Coords c{u(rng), u(rng), v(rng)};
    if (c.c2 <= c.c1 && std::abs(c.c3) <= c.c2) return c;
  }
}

/// Random 4x4 unitary (QR of Ginibre).
inline Mat4d random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat4d z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z(i, j) = C(n(rng), n(rng));
  Eigen::HouseholderQR<Mat4d> qr(z);
  Mat4d q = qr.householderQ();
  const Mat4d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 4; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline double max_diff(const Mat4d& a, const Mat4d& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace wf_test
