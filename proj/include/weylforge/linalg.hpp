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
#include <string>

#include <Eigen/Dense>

#include "weylforge/errors.hpp"
#include "weylforge/tolerances.hpp"

namespace weylforge {

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using Mat2 = Eigen::Matrix<Complex<Real>, 2, 2>;
template <typename Real>
using Mat4 = Eigen::Matrix<Complex<Real>, 4, 4>;
template <typename Real>
using Vec4 = Eigen::Matrix<Complex<Real>, 4, 1>;
template <typename Real>
using RealMat4 = Eigen::Matrix<Real, 4, 4>;

using Mat2d = Mat2<double>;
using Mat4d = Mat4<double>;
using Vec4d = Vec4<double>;

template <typename Real>
inline constexpr Real kQuarterPi = std::numbers::pi_v<Real> / 4;

/// Pauli matrix sigma_k; k = 0 gives the identity.
template <typename Real = double>
Mat2<Real> pauli(int k) {
  using C = Complex<Real>;
  Mat2<Real> s;
  switch (k) {
    case 0: s << C(1), C(0), C(0), C(1); break;
    case 1: s << C(0), C(1), C(1), C(0); break;
    case 2: s << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: s << C(1), C(0), C(0), C(-1); break;
    default: throw InvalidInput("pauli index must be in 0..3");
  }
  return s;
}

/// exp(-i angle sigma_axis).
template <typename Real>
Mat2<Real> axis_rotation(int axis, Real angle) {
  return Complex<Real>(std::cos(angle)) * pauli<Real>(0) -
         Complex<Real>(0, std::sin(angle)) * pauli<Real>(axis);
}

/// Kronecker product with the first factor on the high-order qubit.
template <typename DerivedA, typename DerivedB>
auto kron2(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>);
  Eigen::Matrix<Scalar, 4, 4> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// max_ij |(U^dag U - I)_ij|.
template <typename Derived>
auto unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  const auto n = u.rows();
  auto gram = (u.adjoint() * u).eval();
  gram -= Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  return gram.cwiseAbs().maxCoeff();
}

/// A 4x4 unitary checked at construction.
template <typename Real>
class GateMatrix {
 public:
  explicit GateMatrix(const Mat4<Real>& m, double tolerance = kDefaultTolerances.unitarity)
      : matrix_(m) {
    if (!m.allFinite()) throw InvalidInput("gate matrix has non-finite entries");
    residual_ = weylforge::unitarity_residual(m);
    if (!(residual_ <= tolerance))
      throw InvalidInput("gate matrix is not unitary (residual " + std::to_string(residual_) + ")");
  }

  const Mat4<Real>& matrix() const { return matrix_; }
  Real unitarity_residual() const { return residual_; }
  operator const Mat4<Real>&() const { return matrix_; }

  GateMatrix adjoint() const { return GateMatrix(matrix_.adjoint(), 1e-6); }

 private:
  Mat4<Real> matrix_;
  Real residual_ = 0;
};

using Gate = GateMatrix<double>;

/// Unitary polar factor W V^dag of m = W S V^dag: the closest unitary in Frobenius norm.
template <typename Real>
Mat4<Real> nearest_unitary(const Mat4<Real>& m) {
  const Eigen::JacobiSVD<Mat4<Real>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Scales u by the principal fourth root of 1/det(u), giving det = 1.
template <typename Derived>
auto su4_normalize(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  const Scalar det = u.determinant();
  if (std::abs(det) < Real(1e-12)) throw InvalidInput("su4_normalize: determinant is numerically zero");
  // principal root: arg(det)/4 lies in (-pi/4, pi/4]
  const Scalar root = std::pow(std::abs(det), Real(0.25)) * std::exp(Scalar(0, std::arg(det) / 4));
  return Eigen::Matrix<Scalar, 4, 4>(u / root);
}

template <typename Real>
GateMatrix<Real> su4_normalize(const GateMatrix<Real>& g) {
  return GateMatrix<Real>(su4_normalize(g.matrix()), 1e-6);
}

/// |a - b| up to a global phase: min over phase of max entry deviation (phase fixed at the largest entry).
template <typename DerivedA, typename DerivedB>
auto phase_insensitive_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Scalar phase = a(r, c) / b(r, c);
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace weylforge
