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
#include <numbers>

#include "weylforge/linalg.hpp"

namespace weylforge {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Pure function of
/// (counter, key); the output for a given counter never depends on how many draws came before,
/// which is what makes sharded Monte Carlo reproducible.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key) {
    constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }
};

/// Random stream addressed by (seed, index, stream). Each sample index owns an independent
/// sub-stream of 2^32 blocks.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index, std::uint32_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        ctr_{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), stream, 0} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      buffer_ = Philox4x32::block(ctr_, key_);
      ++ctr_[3];
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    const std::uint64_t hi = next_u32() >> 5;  // 27 bits
    const std::uint64_t lo = next_u32() >> 6;  // 26 bits
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter buffer_{};
  int pos_ = 4;
};

/// Haar-random single-qubit state (cos(t/2) e^{ip/2}, sin(t/2) e^{-ip/2}) with cos t uniform
/// on [-1, 1] and p uniform on [0, 2 pi).
inline Eigen::Vector2cd haar_qubit(CounterRng& rng) {
  const double cos_t = 2 * rng.uniform() - 1;
  const double p = 2 * std::numbers::pi * rng.uniform();
  const double c = std::sqrt((1 + cos_t) / 2), s = std::sqrt((1 - cos_t) / 2);
  return {std::polar(c, p / 2), std::polar(s, -p / 2)};
}

/// Haar-random SU(2) element from a uniform unit quaternion.
inline Mat2d haar_su2(CounterRng& rng) {
  // A normalised Gaussian 4-vector (two Box-Muller pairs) is uniform on S^3.
  std::array<double, 4> g{};
  for (int k = 0; k < 4; k += 2) {
    const double u1 = 1 - rng.uniform(), u2 = rng.uniform();
    const double r = std::sqrt(-2 * std::log(u1));
    g[k] = r * std::cos(2 * std::numbers::pi * u2);
    g[k + 1] = r * std::sin(2 * std::numbers::pi * u2);
  }
  const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
  const std::complex<double> alpha(g[0] / n, g[1] / n), beta(g[2] / n, g[3] / n);
  Mat2d u;
  u << alpha, -std::conj(beta), beta, std::conj(alpha);
  return u;
}

}  // namespace weylforge
