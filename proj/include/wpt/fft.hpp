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
#include <vector>

namespace wpt::fft {

/// In-place radix-2 transforms, n a power of two. Both directions apply the
/// unitary 1/sqrt(n) scaling so power accounting is identical in the time
/// and frequency domains.
void forward(std::complex<double>* x, std::size_t n);
void inverse(std::complex<double>* x, std::size_t n);

void forward(std::vector<std::complex<double>>& x);
void inverse(std::vector<std::complex<double>>& x);

}  // namespace wpt::fft
