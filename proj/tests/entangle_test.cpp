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


#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weylforge/canonical.hpp"
#include "weylforge/entangle.hpp"

using namespace weylforge;
using namespace wf_test;

namespace {

State state(C a, C b, C c, C d) { return State::normalized(Vec4d(a, b, c, d)); }

State random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return state({n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)});
}

Mat4d swap_matrix() {
  Mat4d m = Mat4d::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

// Entangling power by deterministic quadrature over both Bloch spheres: Gauss-Legendre in
// cos(theta), trapezoid in the azimuth. The integrand is a low-degree polynomial in both Bloch
// vectors, so the rule is exact up to rounding.
double ep_quadrature(const Mat4d& u) {
  constexpr int kAz = 12;
  // 12-point Gauss-Legendre nodes and weights on [-1, 1].
  const double x[6] = {0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
                       0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
  const double w[6] = {0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                       0.1600783285433462, 0.1069393259953184, 0.0471753363865118};
  std::vector<std::pair<double, double>> gl;
  for (int k = 0; k < 6; ++k) gl.push_back({x[k], w[k]}), gl.push_back({-x[k], w[k]});
  std::vector<std::pair<Eigen::Vector2cd, double>> pts;
  for (const auto& [ct, wt] : gl) {
    for (int j = 0; j < kAz; ++j) {
      const double p = 2 * kPi * j / kAz;
      Eigen::Vector2cd q(std::sqrt((1 + ct) / 2), std::polar(std::sqrt((1 - ct) / 2), p));
      pts.push_back({q, wt / 2 / kAz});
    }
  }
  double total = 0;
  for (const auto& [a, wa] : pts) {
    for (const auto& [b, wb] : pts) {
      Vec4d v;
      v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
      const Vec4d o = u * v;
      Mat2d m;
      m << o(0), o(1), o(2), o(3);
      const Mat2d rho = m * m.adjoint();
      total += wa * wb * (1 - (rho * rho).trace().real());
    }
  }
  return total;
}

}  // namespace

TEST(PureState, RejectsUnnormalised) {
  EXPECT_THROW(State(Vec4d(1, 1, 0, 0)), InvalidInput);
  EXPECT_NO_THROW(State(Vec4d(1, 0, 0, 0)));
}

TEST(Concurrence, Examples) {
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(concurrence_pure(state(r, 0, 0, r)), 1, 1e-15);
  EXPECT_NEAR(concurrence_pure(state(0, 1, 0, 0)), 0, 1e-15);
  EXPECT_NEAR(concurrence_pure(state(r, 0, 0, C(0, -r))), 1, 1e-15);
}

TEST(LinearEntropy, ExamplesAndConcurrenceIdentity) {
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(linear_entropy(state(r, 0, 0, r)), 0.5, 1e-15);
  EXPECT_NEAR(linear_entropy(state(0, 1, 0, 0)), 0, 1e-15);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 2000; ++t) {
    const State s = random_state(rng);
    const double c = concurrence_pure(s);
    EXPECT_NEAR(linear_entropy(s), 0.5 * c * c, 1e-12);
    EXPECT_LE(c, 1 + 1e-12);
  }
}

TEST(MagicCoefficients, Examples) {
  const double r = 1 / std::sqrt(2.0);
  const auto phi_plus = magic_coefficients(state(r, 0, 0, r));
  EXPECT_LT(std::abs(phi_plus[0] - C(1)), 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_LT(std::abs(phi_plus[k]), 1e-15);

  const auto s00 = magic_coefficients(state(1, 0, 0, 0));
  EXPECT_LT(std::abs(s00[0] - C(r)), 1e-15);
  EXPECT_LT(std::abs(s00[1] - C(0, r)), 1e-15);
  EXPECT_LT(std::abs(s00[2]) + std::abs(s00[3]), 1e-15);

  const auto s01 = magic_coefficients(state(0, 1, 0, 0));
  EXPECT_LT(std::abs(s01[0]) + std::abs(s01[1]), 1e-15);
  EXPECT_LT(std::abs(s01[2] - C(r)), 1e-15);
  EXPECT_LT(std::abs(s01[3] - C(0, r)), 1e-15);
}

TEST(MagicCoefficients, NormPreservedAndSumOfSquaresGivesConcurrence) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 1000; ++t) {
    const State s = random_state(rng);
    const auto mu = magic_coefficients(s);
    double n = 0;
    C sq = 0;
    for (const auto& m : mu) n += std::norm(m), sq += m * m;
    EXPECT_NEAR(n, 1, 1e-12);
    EXPECT_NEAR(std::abs(sq), concurrence_pure(s), 1e-12);
  }
}

TEST(ClassifyState, Examples) {
  const double r = 1 / std::sqrt(2.0);
  EXPECT_EQ(classify_state(state(1, 0, 0, 0)), StateClass::separable);
  EXPECT_EQ(classify_state(state(r, 0, 0, r)), StateClass::maximal);
  EXPECT_EQ(classify_state(state(std::cos(kPi / 8), 0, 0, std::sin(kPi / 8))), StateClass::intermediate);
}

TEST(ClassifyState, AgreesWithConcurrenceOnConstructedFamilies) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int t = 0; t < 500; ++t) {
    const Mat2d a = random_su2(rng), b = random_su2(rng);
    const Eigen::Vector2cd x = a.col(0), y = b.col(0);
    const State product = state(x(0) * y(0), x(0) * y(1), x(1) * y(0), x(1) * y(1));
    EXPECT_EQ(classify_state(product), StateClass::separable);
    EXPECT_NEAR(concurrence_pure(product), 0, 1e-9);

    // Locally rotated Bell states with a random global phase are maximal.
    const State bell = State::normalized(std::polar(1.0, u(rng)) * kron(a, b) * Vec4d(1, 0, 0, 1));
    EXPECT_EQ(classify_state(bell), StateClass::maximal);
    EXPECT_NEAR(concurrence_pure(bell), 1, 1e-9);

    const double theta = 0.05 + 0.6 * (t % 7) / 7.0;
    const State mid = State::normalized(kron(a, b) * Vec4d(std::cos(theta), 0, 0, std::sin(theta)));
    EXPECT_EQ(classify_state(mid), StateClass::intermediate);
  }
}

TEST(EntanglingPowerClosed, TableValues) {
  EXPECT_NEAR(entangling_power_closed(Coords{kQ, 0, 0}), 2.0 / 9, 1e-15);
  EXPECT_NEAR(entangling_power_closed(Coords{kPi / 8, kPi / 8, kPi / 8}), 1.0 / 6, 1e-15);
  EXPECT_NEAR(entangling_power_closed(Coords{kQ, kQ, kQ}), 0, 1e-15);
}

TEST(EntanglingPowerClosed, RangeOverRandomTriples) {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int t = 0; t < 100000; ++t) {
    const double e = entangling_power_closed(Coords{u(rng), u(rng), u(rng)});
    ASSERT_GE(e, -1e-15);
    ASSERT_LE(e, 2.0 / 9 + 1e-15);
  }
}

TEST(EntanglingPowerClosed, MatchesQuadratureOracle) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 8; ++t) {
    const Coords c = random_chamber(rng);
    const Mat4d g = random_local(rng) * canonical_gate(c) * random_local(rng);
    EXPECT_NEAR(entangling_power_closed(c), ep_quadrature(g), 1e-9) << c;
  }
}

TEST(EntanglingPowerClosed, SymmetryProperties) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 300; ++t) {
    const Mat4d g = random_unitary(rng);
    const double e = entangling_power_closed(extract_coordinates(g));
    EXPECT_NEAR(entangling_power_closed(extract_coordinates(Mat4d(g.adjoint()))), e, 1e-9);
    EXPECT_NEAR(entangling_power_closed(extract_coordinates(Mat4d(swap_matrix() * g))), e, 1e-9);
    const Mat4d dressed = random_local(rng) * g * random_local(rng);
    EXPECT_NEAR(entangling_power_closed(extract_coordinates(dressed)), e, 1e-12);
  }
}

TEST(EntanglingPowerMc, RejectsZeroSamples) {
  EXPECT_THROW(entangling_power_mc(Mat4d::Identity(), 0, 1), InvalidInput);
}

TEST(EntanglingPowerMc, SwapAndLocalsGiveZero) {
  const auto s = entangling_power_mc(swap_matrix(), 20000, 3);
  EXPECT_LT(std::abs(s.mean), 1e-15);
  EXPECT_EQ(s.samples, 20000u);
  EXPECT_EQ(s.seed, 3u);
  std::mt19937_64 rng(57);
  EXPECT_LT(std::abs(entangling_power_mc(random_local(rng), 20000, 3).mean), 1e-15);
}

TEST(EntanglingPowerMc, DeterministicUnderSharding) {
  std::mt19937_64 rng(58);
  const Mat4d g = random_unitary(rng);
  const auto one = entangling_power_mc(g, 30001, 77, 1);
  for (unsigned shards : {2u, 3u, 8u}) {
    const auto many = entangling_power_mc(g, 30001, 77, shards);
    EXPECT_EQ(one.mean, many.mean);
    EXPECT_EQ(one.std_error, many.std_error);
  }
  EXPECT_EQ(one.mean, entangling_power_mc(g, 30001, 77, 1).mean);
  EXPECT_NE(one.mean, entangling_power_mc(g, 30001, 78, 1).mean);
}

TEST(EntanglingPowerMc, AgreesWithClosedForm) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 5; ++t) {
    const Coords c = random_chamber(rng);
    const Mat4d g = random_local(rng) * canonical_gate(c) * random_local(rng);
    const auto est = entangling_power_mc(g, 200000, 1000 + t, 4);
    EXPECT_NEAR(est.mean, entangling_power_closed(extract_coordinates(g)), 4 * est.std_error);
    EXPECT_LE(est.mean, 2.0 / 9 + 3 * est.std_error);
  }
}

TEST(EntanglingPowerMc, LocalInvarianceWithSharedStream) {
  std::mt19937_64 rng(60);
  const Mat4d g = random_unitary(rng);
  const Mat4d d = random_local(rng) * g * random_local(rng);
  const auto a = entangling_power_mc(g, 200000, 5, 4), b = entangling_power_mc(d, 200000, 5, 4);
  EXPECT_NEAR(a.mean, b.mean, 3 * std::hypot(a.std_error, b.std_error));
}
