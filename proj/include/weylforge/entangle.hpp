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
#include <cstdint>
#include <thread>
#include <vector>

#include "weylforge/coords.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/random.hpp"

namespace weylforge {

/// Normalised two-qubit pure state, amplitudes in the order |00>, |01>, |10>, |11>.
template <typename Real>
class PureState2Q {
 public:
  explicit PureState2Q(const Vec4<Real>& amplitudes, Real tolerance = Real(1e-12)) : amp_(amplitudes) {
    if (!amp_.allFinite() || std::abs(amp_.squaredNorm() - Real(1)) > tolerance)
      throw InvalidInput("pure state is not normalised");
  }

  /// Normalises the input instead of rejecting it.
  static PureState2Q normalized(const Vec4<Real>& v) { return PureState2Q(v / v.norm()); }

  static PureState2Q product(const Eigen::Matrix<Complex<Real>, 2, 1>& a, const Eigen::Matrix<Complex<Real>, 2, 1>& b) {
    Vec4<Real> v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return normalized(v);
  }

  const Vec4<Real>& amplitudes() const { return amp_; }
  const Complex<Real>& operator[](int k) const { return amp_(k); }

 private:
  Vec4<Real> amp_;
};

using State = PureState2Q<double>;

/// C = 2|ad - bc|.
template <typename Real>
Real concurrence_pure(const PureState2Q<Real>& s) {
  return 2 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

/// Linear entropy 1 - tr(rho_A^2) of the reduced state of the first qubit.
template <typename Real>
Real linear_entropy(const PureState2Q<Real>& s) {
  Mat2<Real> m;
  m << s[0], s[1], s[2], s[3];
  const Mat2<Real> rho = m * m.adjoint();
  const Real purity = (rho * rho).trace().real();
  return std::max(Real(0), Real(1) - purity);
}

/// Magic basis {Phi+, -i Phi-, Psi-, -i Psi+} as columns.
template <typename Real = double>
Mat4<Real> magic_basis() {
  using C = Complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  Mat4<Real> m;
  m << C(r), C(0, -r), C(0), C(0),
       C(0), C(0), C(r), C(0, -r),
       C(0), C(0), C(-r), C(0, -r),
       C(r), C(0, r), C(0), C(0);
  return m;
}

template <typename Real>
using MagicCoeffs = std::array<Complex<Real>, 4>;

template <typename Real>
MagicCoeffs<Real> magic_coefficients(const PureState2Q<Real>& s) {
  const Vec4<Real> mu = magic_basis<Real>().adjoint() * s.amplitudes();
  return {mu(0), mu(1), mu(2), mu(3)};
}

enum class StateClass { separable, maximal, intermediate };

/// Separable iff sum mu_k^2 = 0; maximal iff every mu_k^2 has the same phase.
template <typename Real>
StateClass classify_state(const PureState2Q<Real>& s, Real tol = Real(1e-9)) {
  const auto mu = magic_coefficients(s);
  Complex<Real> sum_sq(0);
  for (const auto& m : mu) sum_sq += m * m;
  if (std::abs(sum_sq) <= tol) return StateClass::separable;

  const auto ref = *std::max_element(mu.begin(), mu.end(), [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
  const Complex<Real> phase = ref * ref / std::norm(ref);
  const bool same_phase = std::all_of(mu.begin(), mu.end(), [&](const auto& m) {
    return std::abs(m * m - phase * std::norm(m)) <= tol;
  });
  return same_phase ? StateClass::maximal : StateClass::intermediate;
}

/// e_p = (1/18)[3 - (cos4c1 cos4c2 + cos4c2 cos4c3 + cos4c3 cos4c1)].
template <typename Real>
Real entangling_power_closed(const CanonicalCoords<Real>& c) {
  const Real x = std::cos(4 * c.c1), y = std::cos(4 * c.c2), z = std::cos(4 * c.c3);
  return (Real(3) - (x * y + y * z + z * x)) / Real(18);
}

struct EpEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Running mean / M2 (Welford), combined with Chan's pairwise update.
struct Moments {
  double n = 0, mean = 0, m2 = 0;

  void push(double x) {
    n += 1;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const double total = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / total;
    m2 += o.m2 + d * d * n * o.n / total;
    n = total;
  }
};

inline constexpr std::uint64_t kBlockSize = 4096;

// Splits [0, n) into fixed-size blocks, evaluates each block sequentially and merges the blocks
// in index order. The partition is independent of `shards`, so results are bit-identical for
// any shard count.
template <typename SampleFn>
Moments sharded_moments(std::uint64_t n, unsigned shards, SampleFn&& sample) {
  const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);
  const auto run = [&](unsigned worker) {
    for (std::uint64_t b = worker; b < blocks; b += shards) {
      Moments m;
      const std::uint64_t end = std::min(n, (b + 1) * kBlockSize);
      for (std::uint64_t i = b * kBlockSize; i < end; ++i) m.push(sample(i));
      partial[b] = m;
    }
  };
  shards = std::max(1u, shards);
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < shards; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Moments total;
  for (const auto& m : partial) total.merge(m);
  return total;
}

}  // namespace detail

/// Image of the i-th Haar product state of the (seed) stream under u.
inline State haar_product_image(const Mat4d& u, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  const Eigen::Vector2cd a = haar_qubit(rng);
  const Eigen::Vector2cd b = haar_qubit(rng);
  Vec4d v;
  v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return State::normalized(u * v);
}

/// Monte Carlo entangling power: mean linear entropy of u|psi>|phi> over Haar product inputs.
inline EpEstimate entangling_power_mc(const Mat4d& u, std::uint64_t n, std::uint64_t seed, unsigned shards = 1) {
  if (n == 0) throw InvalidInput("entangling_power_mc: sample count must be positive");
  const auto moments = detail::sharded_moments(n, shards, [&](std::uint64_t i) {
    return linear_entropy(haar_product_image(u, seed, i));
  });
  EpEstimate out;
  out.mean = moments.mean;
  out.samples = n;
  out.seed = seed;
  out.std_error = n > 1 ? std::sqrt(moments.m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  return out;
}

}  // namespace weylforge
