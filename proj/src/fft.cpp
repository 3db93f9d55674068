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

#include "wpt/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace wpt::fft {

namespace {

void transform(std::complex<double>* x, std::size_t n, int sign) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft: length must be a power of two");
  }

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(x[i], x[j]);
    }
  }

  // twiddles for the largest stage; smaller stages stride through the table
  std::vector<std::complex<double>> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang =
        sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
        static_cast<double>(n);
    tw[k] = {std::cos(ang), std::sin(ang)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = x[i + j];
        const std::complex<double> v = x[i + j + len / 2] * tw[j * stride];
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
      }
    }
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= scale;
  }
}

}  // namespace

void forward(std::complex<double>* x, std::size_t n) { transform(x, n, -1); }
void inverse(std::complex<double>* x, std::size_t n) { transform(x, n, +1); }

void forward(std::vector<std::complex<double>>& x) {
  transform(x.data(), x.size(), -1);
}
void inverse(std::vector<std::complex<double>>& x) {
  transform(x.data(), x.size(), +1);
}

}  // namespace wpt::fft
