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

#include "wpt/kernels.hpp"

namespace wpt::kernels {

#if WPT_HAVE_AVX2
namespace avx2 {
void tone_accumulate(std::complex<double>* dst, std::size_t n,
                     std::complex<double> w, double phase0, double step);
void caxpy(std::complex<double>* dst, const std::complex<double>* src,
           std::size_t n, std::complex<double> a);
Moments moments24(const std::complex<double>* z, std::size_t n);
}  // namespace avx2
#endif

}  // namespace wpt::kernels
