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

#include <complex>
#include <cstddef>

namespace wpt::kernels {

/// Sample-buffer inner loops shared by the signal, channel and rectenna
/// paths. Every kernel has a scalar reference implementation; on x86-64 an
/// AVX2+FMA variant is selected at runtime when the CPU supports it. The
/// variants are equivalence-tested against the scalar reference.
enum class Backend {
  kAuto,    // pick the best available at first use
  kScalar,  // portable reference
  kAvx2,    // AVX2 + FMA, x86-64 only
};

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Resolved backend currently in use (never kAuto).
Backend active_backend();

/// Force a backend. Returns false and leaves the selection unchanged when
/// the requested backend is unavailable on this machine.
bool set_backend(Backend b);

struct Moments {
  double sum_sq;    // sum of |z|^2
  double sum_quad;  // sum of |z|^4
};

/// dst[k] += w * exp(j*(phase0 + k*step)) for k in [0, n).
void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step);

/// dst[k] += a * src[k] for k in [0, n).
void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a);

/// Second and fourth absolute moments of a complex buffer.
Moments moments24(const std::complex<double>* z, std::size_t n);

// Scalar reference entry points, always available. The dispatching wrappers
// above forward here when no vector backend is active; tests compare vector
// backends against these.
namespace scalar {
void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step);
void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a);
Moments moments24(const std::complex<double>* z, std::size_t n);
}  // namespace scalar

}  // namespace wpt::kernels
