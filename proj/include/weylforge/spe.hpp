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
#include <cstdint>
#include <optional>

#include "weylforge/canonical.hpp"
#include "weylforge/coords.hpp"
#include "weylforge/entangle.hpp"
#include "weylforge/linalg.hpp"

namespace weylforge {

/// Angle phi of the gate family [pi/4, phi, 0], restricted to [0, pi/4].
template <typename Real>
class SpeParams {
 public:
  explicit SpeParams(Real phi) : phi_(phi) {
    if (!std::isfinite(phi) || phi < 0 || phi > kQuarterPi<Real>)
      throw RangeError("phi must lie in [0, pi/4]");
  }
  Real phi() const { return phi_; }

 private:
  Real phi_;
};

/// exp(-i(pi/4 XX + phi YY)).
template <typename Real>
GateMatrix<Real> spe_gate(const SpeParams<Real>& p) {
  return GateMatrix<Real>(canonical_gate<Real>(kQuarterPi<Real>, p.phi(), 0));
}

/// cos4c1 cos4c2 + cos4c2 cos4c3 + cos4c3 cos4c1; equals -1 exactly on the maximal-power family.
template <typename Real>
Real spe_expression(const CanonicalCoords<Real>& c) {
  const Real x = std::cos(4 * c.c1), y = std::cos(4 * c.c2), z = std::cos(4 * c.c3);
  return x * y + y * z + z * x;
}

template <typename Real>
bool is_spe(const CanonicalCoords<Real>& c, Real tol = Real(1e-9)) {
  return std::abs(spe_expression(c) + Real(1)) <= tol;
}

/// phi such that c reduces to (pi/4, phi, 0), if any.
template <typename Real>
std::optional<Real> spe_family_phi(const CanonicalCoords<Real>& c, Real tol = Real(1e-9)) {
  const auto r = reduce_to_weyl(c);
  if (std::abs(r.c1 - kQuarterPi<Real>) <= tol && std::abs(r.c3) <= tol) return r.c2;
  return std::nullopt;
}

/// Four orthonormal product states that canonical_gate(0, pi/4, phi) maps to maximally
/// entangled states: |00>, |10>, (A|0> + B|1>)|1>, (-conj(B)|0> + conj(A)|1>)|1>
/// with A = cos(theta), B = e^{2i phi} sin(theta).
template <typename Real>
struct WitnessBasis {
  Real theta = 0;
  Real phi = 0;
  Complex<Real> A, B;
  std::array<PureState2Q<Real>, 4> states;
};

template <typename Real>
WitnessBasis<Real> witness_basis(Real theta, const SpeParams<Real>& p) {
  using C = Complex<Real>;
  const C a(std::cos(theta)), b = std::polar(std::sin(theta), 2 * p.phi());
  const Vec4<Real> s00(C(1), C(0), C(0), C(0));
  const Vec4<Real> s10(C(0), C(0), C(1), C(0));
  const Vec4<Real> s3(C(0), a, C(0), b);
  const Vec4<Real> s4(C(0), -std::conj(b), C(0), std::conj(a));
  return {theta, p.phi(), a, b,
          {PureState2Q<Real>(s00), PureState2Q<Real>(s10), PureState2Q<Real>(s3), PureState2Q<Real>(s4)}};
}

/// Witness basis for an arbitrary matrix in the family: the basis for the (0, pi/4, phi)
/// representative pulled back through the right-hand local factors of the gate.
template <typename Real>
std::array<PureState2Q<Real>, 4> witness_basis_for(const GateMatrix<Real>& g, Real theta,
                                                   const Tolerances& tol = kDefaultTolerances) {
  const auto c = extract_coordinates(g, tol);
  const auto phi = spe_family_phi(c, Real(tol.spe) * 100);
  if (!phi) throw InvalidInput("gate is not in the [pi/4, phi, 0] family");
  const auto kak = kak_decompose_with_core<Real>(g.matrix(), {0, kQuarterPi<Real>, *phi}, tol);
  const Mat4<Real> pull = kak.right().adjoint();
  const auto wb = witness_basis(theta, SpeParams<Real>(*phi));
  std::array<PureState2Q<Real>, 4> out = wb.states;
  for (int k = 0; k < 4; ++k) out[k] = PureState2Q<Real>::normalized(pull * wb.states[k].amplitudes());
  return out;
}

/// Concurrences of g|psi_k>; the basis must be orthonormal.
template <typename Real>
std::array<Real, 4> check_basis_images(const Mat4<Real>& g, const std::array<PureState2Q<Real>, 4>& basis,
                                       Real tol = Real(1e-9)) {
  Mat4<Real> b;
  for (int k = 0; k < 4; ++k) b.col(k) = basis[k].amplitudes();
  if ((b.adjoint() * b - Mat4<Real>::Identity()).cwiseAbs().maxCoeff() > tol)
    throw InvalidInput("check_basis_images: basis is not orthonormal");
  std::array<Real, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = concurrence_pure(PureState2Q<Real>::normalized(g * basis[k].amplitudes()));
  return out;
}

template <typename Real>
std::array<Real, 4> check_basis_images(const GateMatrix<Real>& g, const std::array<PureState2Q<Real>, 4>& basis,
                                       Real tol = Real(1e-9)) {
  return check_basis_images(g.matrix(), basis, tol);
}

/// Fraction of n Haar product states whose image under u is still product (concurrence <= 1e-7).
inline double separability_preservation_probe(const Mat4d& u, std::uint64_t n, std::uint64_t seed,
                                              unsigned shards = 1) {
  if (n == 0) throw InvalidInput("separability_preservation_probe: sample count must be positive");
  const auto moments = detail::sharded_moments(n, shards, [&](std::uint64_t i) {
    return concurrence_pure(haar_product_image(u, seed, i)) <= 1e-7 ? 1.0 : 0.0;
  });
  return moments.mean;
}

}  // namespace weylforge
