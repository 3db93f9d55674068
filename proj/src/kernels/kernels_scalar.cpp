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

#include <cmath>

#include "kernels_internal.hpp"

namespace wpt::kernels::scalar {

void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step) {
  // Phase is evaluated per sample from the index rather than by a running
  // rotator, so the accumulated signal stays accurate over long buffers.
  for (std::size_t k = 0; k < n; ++k) {
    const double ph = std::fma(static_cast<double>(k), step, phase0);
    dst[k] += w * std::complex<double>(std::cos(ph), std::sin(ph));
  }
}

void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a) {
  for (std::size_t k = 0; k < n; ++k) {
    dst[k] += a * src[k];
  }
}

Moments moments24(const std::complex<double>* z, std::size_t n) {
  double s2 = 0.0;
  double s4 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double p = std::norm(z[k]);
    s2 += p;
    s4 += p * p;
  }
  return {s2, s4};
}

}  // namespace wpt::kernels::scalar
