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

#include <atomic>

#include "kernels_internal.hpp"

namespace wpt::kernels {

namespace {

bool cpu_has_avx2() {
#if WPT_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Backend> g_backend{Backend::kAuto};

Backend resolve() {
  Backend b = g_backend.load(std::memory_order_relaxed);
  if (b == Backend::kAuto) {
    b = cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
    g_backend.store(b, std::memory_order_relaxed);
  }
  return b;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kAuto:
      return "auto";
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kAuto:
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active_backend() { return resolve(); }

bool set_backend(Backend b) {
  if (!backend_available(b)) {
    return false;
  }
  if (b == Backend::kAuto) {
    b = cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
  }
  g_backend.store(b, std::memory_order_relaxed);
  return true;
}

void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step) {
#if WPT_HAVE_AVX2
  if (resolve() == Backend::kAvx2) {
    avx2::tone_accumulate(dst, n, w, phase0, step);
    return;
  }
#endif
  scalar::tone_accumulate(dst, n, w, phase0, step);
}

void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a) {
#if WPT_HAVE_AVX2
  if (resolve() == Backend::kAvx2) {
    avx2::caxpy(dst, src, n, a);
    return;
  }
#endif
  scalar::caxpy(dst, src, n, a);
}

Moments moments24(const std::complex<double>* z, std::size_t n) {
#if WPT_HAVE_AVX2
  if (resolve() == Backend::kAvx2) {
    return avx2::moments24(z, n);
  }
#endif
  return scalar::moments24(z, n);
}

}  // namespace wpt::kernels
