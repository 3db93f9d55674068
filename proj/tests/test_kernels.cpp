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
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "wpt/fft.hpp"
#include "wpt/kernels.hpp"
#include "wpt/rng.hpp"

namespace {

using wpt::cdouble;
namespace kn = wpt::kernels;

std::vector<cdouble> random_buffer(std::size_t n, std::uint64_t seed) {
  wpt::Rng rng(seed);
  std::vector<cdouble> v(n);
  for (auto& z : v) {
    z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  }
  return v;
}

// sizes covering vector width remainders and the rotator re-anchor block
const std::size_t kSizes[] = {1, 2, 3, 5, 8, 56, 255, 1023, 1024, 1025, 2051};

}  // namespace

TEST_CASE("tone_accumulate scalar matches a direct complex-exponential sum") {
  for (const std::size_t n : {std::size_t{7}, std::size_t{64}}) {
    std::vector<cdouble> dst(n, cdouble{0.5, -0.25});
    const cdouble w{0.8, 0.3};
    const double phase0 = 0.7;
    const double step = 0.231;
    kn::scalar::tone_accumulate(dst.data(), n, w, phase0, step);
    for (std::size_t k = 0; k < n; ++k) {
      const cdouble expect =
          cdouble{0.5, -0.25} +
          w * std::exp(cdouble{0.0, phase0 + static_cast<double>(k) * step});
      CHECK(std::abs(dst[k] - expect) < 1e-12);
    }
  }
}

TEST_CASE("vector backends match the scalar reference") {
  if (!kn::backend_available(kn::Backend::kAvx2)) {
    MESSAGE("AVX2 not available; skipping equivalence checks");
    return;
  }
  REQUIRE(kn::set_backend(kn::Backend::kAvx2));
  REQUIRE(kn::active_backend() == kn::Backend::kAvx2);

  SUBCASE("tone_accumulate") {
    for (const std::size_t n : kSizes) {
      auto ref = random_buffer(n, 11 + n);
      auto vec = ref;
      const cdouble w{1.3, -0.4};
      kn::scalar::tone_accumulate(ref.data(), n, w, 0.37, 0.0521);
      kn::tone_accumulate(vec.data(), n, w, 0.37, 0.0521);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(ref[k] - vec[k]) < 1e-11);
      }
    }
  }

  SUBCASE("caxpy") {
    for (const std::size_t n : kSizes) {
      const auto src = random_buffer(n, 23 + n);
      auto ref = random_buffer(n, 5 + n);
      auto vec = ref;
      const cdouble a{-0.7, 1.9};
      kn::scalar::caxpy(ref.data(), src.data(), n, a);
      kn::caxpy(vec.data(), src.data(), n, a);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(ref[k] - vec[k]) < 1e-13);
      }
    }
  }

  SUBCASE("moments24") {
    for (const std::size_t n : kSizes) {
      const auto buf = random_buffer(n, 31 + n);
      const auto ref = kn::scalar::moments24(buf.data(), n);
      const auto vec = kn::moments24(buf.data(), n);
      CHECK(vec.sum_sq ==
            doctest::Approx(ref.sum_sq).epsilon(1e-12).scale(1.0));
      CHECK(vec.sum_quad ==
            doctest::Approx(ref.sum_quad).epsilon(1e-12).scale(1.0));
    }
  }

  kn::set_backend(kn::Backend::kAuto);
}

TEST_CASE("backend selection is sticky and reports availability") {
  CHECK(kn::backend_available(kn::Backend::kScalar));
  REQUIRE(kn::set_backend(kn::Backend::kScalar));
  CHECK(kn::active_backend() == kn::Backend::kScalar);
  kn::set_backend(kn::Backend::kAuto);
  CHECK(kn::active_backend() != kn::Backend::kAuto);
}

TEST_CASE("fft matches a naive DFT and is unitary") {
  const std::size_t n = 256;
  auto x = random_buffer(n, 99);

  // naive unitary DFT as the reference
  std::vector<cdouble> expect(n, cdouble{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      const double ang = -2.0 * std::numbers::pi *
                         static_cast<double>(k * m % n) /
                         static_cast<double>(n);
      expect[k] += x[m] * cdouble{std::cos(ang), std::sin(ang)};
    }
    expect[k] /= std::sqrt(static_cast<double>(n));
  }

  auto got = x;
  wpt::fft::forward(got);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(got[k] - expect[k]) < 1e-10);
  }

  // Parseval under the unitary convention
  double ein = 0.0;
  double eout = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ein += std::norm(x[k]);
    eout += std::norm(got[k]);
  }
  CHECK(eout == doctest::Approx(ein).epsilon(1e-12));

  wpt::fft::inverse(got);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(got[k] - x[k]) < 1e-12);
  }

  CHECK_THROWS_AS(wpt::fft::forward(got.data(), 100), std::invalid_argument);
}

TEST_CASE("rng streams are deterministic and derive_seed separates trials") {
  wpt::Rng a(1234);
  wpt::Rng b(1234);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.normal() == b.normal());
  }
  CHECK(wpt::derive_seed(1, 0) != wpt::derive_seed(1, 1));
  CHECK(wpt::derive_seed(1, 0) != wpt::derive_seed(2, 0));
  CHECK(wpt::derive_seed(1, 7) == wpt::derive_seed(1, 7));
}

TEST_CASE("rng normal_complex has the requested variance") {
  wpt::Rng rng(555);
  const double var = 0.25;
  double acc = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    acc += std::norm(rng.normal_complex(var));
  }
  CHECK(acc / n == doctest::Approx(var).epsilon(0.02));
}
