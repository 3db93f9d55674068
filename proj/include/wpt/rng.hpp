// Copyright 2026 The wptlink Authors
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
#include <cstdint>
#include <numbers>
#include <random>

namespace wpt {

/// Seeded RNG with explicit uniform and Gaussian transforms. The mt19937_64
/// engine is fully specified by the standard; the std:: distributions are
/// not, so Box-Muller is done by hand here. Given the same seed, every
/// platform produces the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + uniform() * (b - a); }

  /// Standard normal via Box-Muller; generates in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto [z0, z1] = normal_pair();
    spare_ = z1;
    have_spare_ = true;
    return z0;
  }

  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> normal_complex(double variance) {
    const auto [z0, z1] = normal_pair();
    const double s = std::sqrt(variance / 2.0);
    return {s * z0, s * z1};
  }

 private:
  std::pair<double, double> normal_pair() {
    // u1 in (0, 1] so the log is finite
    const double u1 =
        (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
  }

  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Stable per-index seed stream (splitmix64 finalizer). Used to hand each
/// Monte-Carlo trial its own independent seed from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace wpt
