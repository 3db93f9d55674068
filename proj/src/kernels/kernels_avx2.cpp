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

#include "kernels_internal.hpp"

#if WPT_HAVE_AVX2

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace wpt::kernels::avx2 {

namespace {

// A __m256d holds two interleaved complex doubles [re0 im0 re1 im1].

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  const __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

// (ar + j*ai) * v for two complex lanes. vswap must be v with re/im swapped.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v, __m256d vswap) {
  // even lanes: ar*re - ai*im, odd lanes: ar*im + ai*re
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap));
}

}  // namespace

void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* d = reinterpret_cast<double*>(dst);
  const double* s = reinterpret_cast<const double*>(src);
  std::size_t k = 0;
  const std::size_t n2 = n / 2 * 2;
  for (; k < n2; k += 2) {
    const __m256d v = _mm256_loadu_pd(s + 2 * k);
    const __m256d vswap = _mm256_permute_pd(v, 0x5);
    const __m256d acc =
        _mm256_add_pd(_mm256_loadu_pd(d + 2 * k), cmul(ar, ai, v, vswap));
    _mm256_storeu_pd(d + 2 * k, acc);
  }
  for (; k < n; ++k) {
    dst[k] += a * src[k];
  }
}

Moments moments24(const std::complex<double>* z, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(z);
  __m256d acc2a = _mm256_setzero_pd();
  __m256d acc2b = _mm256_setzero_pd();
  __m256d acc4a = _mm256_setzero_pd();
  __m256d acc4b = _mm256_setzero_pd();
  std::size_t k = 0;
  const std::size_t n4 = n / 4 * 4;
  for (; k < n4; k += 4) {
    const __m256d v0 = _mm256_loadu_pd(p + 2 * k);
    const __m256d v1 = _mm256_loadu_pd(p + 2 * k + 4);
    const __m256d sq0 = _mm256_mul_pd(v0, v0);
    const __m256d sq1 = _mm256_mul_pd(v1, v1);
    // hadd of the squares against itself duplicates |z|^2 into both lanes of
    // each pair; the duplication is divided out after the horizontal sum.
    const __m256d m0 = _mm256_hadd_pd(sq0, sq0);
    const __m256d m1 = _mm256_hadd_pd(sq1, sq1);
    acc2a = _mm256_add_pd(acc2a, m0);
    acc2b = _mm256_add_pd(acc2b, m1);
    acc4a = _mm256_fmadd_pd(m0, m0, acc4a);
    acc4b = _mm256_fmadd_pd(m1, m1, acc4b);
  }
  double s2 = 0.5 * hsum(_mm256_add_pd(acc2a, acc2b));
  double s4 = 0.5 * hsum(_mm256_add_pd(acc4a, acc4b));
  for (; k < n; ++k) {
    const double q = std::norm(z[k]);
    s2 += q;
    s4 += q * q;
  }
  return {s2, s4};
}

void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step) {
  // Two complex lanes advance by a two-sample rotator; the lane phases are
  // re-anchored from libm every kBlock samples to bound rotator drift.
  constexpr std::size_t kBlock = 1024;
  double* d = reinterpret_cast<double*>(dst);
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  const __m256d rr = _mm256_set1_pd(std::cos(2.0 * step));
  const __m256d ri = _mm256_set1_pd(std::sin(2.0 * step));
  std::size_t base = 0;
  while (base < n) {
    const std::size_t m = std::min(kBlock, n - base);
    const std::size_t m2 = m / 2 * 2;
    const double ph0 = std::fma(static_cast<double>(base), step, phase0);
    const double ph1 = std::fma(static_cast<double>(base + 1), step, phase0);
    __m256d p = _mm256_set_pd(std::sin(ph1), std::cos(ph1),  //
                              std::sin(ph0), std::cos(ph0));
    std::size_t k = 0;
    for (; k < m2; k += 2) {
      const __m256d pswap = _mm256_permute_pd(p, 0x5);
      double* dp = d + 2 * (base + k);
      _mm256_storeu_pd(
          dp, _mm256_add_pd(_mm256_loadu_pd(dp), cmul(wr, wi, p, pswap)));
      p = cmul(rr, ri, p, pswap);
    }
    if (k < m) {
      const double ph =
          std::fma(static_cast<double>(base + k), step, phase0);
      dst[base + k] += w * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    base += m;
  }
}

}  // namespace wpt::kernels::avx2

#endif  // WPT_HAVE_AVX2
