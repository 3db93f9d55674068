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
#include <vector>

#include <doctest.h>

#include "wpt/rng.hpp"
#include "wpt/signal.hpp"

namespace {

using wpt::cdouble;
using wpt::MultisineWeights;
using wpt::ToneGrid;

const double kDb16 = 10.0 * std::log10(16.0);  // PAPR of 8 uniform tones

ToneGrid default_grid(int n = 8) { return ToneGrid(2.4e9, n, 1.25e6); }

MultisineWeights uniform_weights(const ToneGrid& grid, double amplitude,
                                 double budget) {
  return MultisineWeights(
      grid,
      std::vector<cdouble>(static_cast<std::size_t>(grid.count()),
                           cdouble{amplitude, 0.0}),
      budget);
}

MultisineWeights random_weights(const ToneGrid& grid, std::uint64_t seed) {
  wpt::Rng rng(seed);
  std::vector<cdouble> w(static_cast<std::size_t>(grid.count()));
  for (auto& wn : w) {
    wn = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  }
  double p = 0.0;
  for (const auto& wn : w) {
    p += std::norm(wn);
  }
  return MultisineWeights(grid, std::move(w), 0.5 * p * 1.0000001);
}

}  // namespace

TEST_CASE("tone grid is uniform, centered, and sized") {
  const auto grid = default_grid();
  CHECK(grid.count() == 8);
  CHECK(grid.tone_freqs().size() == 8);
  for (int n = 0; n + 1 < grid.count(); ++n) {
    CHECK(grid.tone_hz(n + 1) - grid.tone_hz(n) == grid.spacing_hz());
  }
  // symmetric about the carrier
  CHECK(grid.tone_hz(0) - 2.4e9 == doctest::Approx(-4.375e6));
  CHECK(grid.tone_hz(7) - 2.4e9 == doctest::Approx(4.375e6));
  CHECK(grid.span_hz() == doctest::Approx(8.75e6));
  // the span stays inside the 10 MHz usable band
  CHECK(grid.span_hz() < 10e6);

  CHECK_THROWS_AS(ToneGrid(2.4e9, 0, 1e6), std::invalid_argument);
  CHECK_THROWS_AS(ToneGrid(2.4e9, 4, -1e6), std::invalid_argument);
}

TEST_CASE("weights reject a blown power budget") {
  const auto grid = default_grid(2);
  CHECK_THROWS_AS(
      MultisineWeights(grid, {cdouble{2.0, 0.0}, cdouble{2.0, 0.0}}, 1.0),
      std::invalid_argument);
  // exactly on budget is fine
  const MultisineWeights ok(grid, {cdouble{1.0, 0.0}, cdouble{0.0, 1.0}},
                            1.0);
  CHECK(wpt::average_power(ok) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("average power is half the squared weight norm") {
  const auto grid = default_grid(2);
  CHECK(wpt::average_power(MultisineWeights(
            grid, {cdouble{0.0, 0.0}, cdouble{0.0, 0.0}}, 1.0)) == 0.0);
  CHECK(wpt::average_power(MultisineWeights(
            grid, {cdouble{1.0, 0.0}, cdouble{0.0, 1.0}}, 2.0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single tone synthesizes to a constant envelope") {
  const ToneGrid grid(2.4e9, 1, 1.25e6);
  const MultisineWeights w(grid, {cdouble{1.0, 0.0}}, 0.5);
  const auto sig = wpt::synthesize_multisine(w, 1e-6, 10e6);
  REQUIRE(sig.samples.size() == 10);
  for (const auto& z : sig.samples) {
    CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(wpt::average_power(w) == doctest::Approx(0.5));
  CHECK(wpt::papr_db(sig) == doctest::Approx(10.0 * std::log10(2.0))
                                 .epsilon(1e-9));  // 3.01 dB
}

TEST_CASE("full-period time average equals the tone-domain power") {
  const auto grid = default_grid();
  const double fs = wpt::default_oracle_sample_rate(grid);
  const double period = 1.0 / grid.spacing_hz();

  SUBCASE("uniform in-phase weights, one period") {
    const auto w = uniform_weights(grid, 1.0, 4.0);
    const auto sig = wpt::synthesize_multisine(w, period, fs);
    double mean = 0.0;
    for (const auto& z : sig.samples) {
      mean += std::norm(z);
    }
    mean /= static_cast<double>(sig.samples.size());
    CHECK(0.5 * mean == doctest::Approx(wpt::average_power(w)).epsilon(1e-6));
  }

  SUBCASE("random weights, three periods") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const auto w = random_weights(grid, seed);
      const auto sig = wpt::synthesize_multisine(w, 3.0 * period, fs);
      double mean = 0.0;
      for (const auto& z : sig.samples) {
        mean += std::norm(z);
      }
      mean /= static_cast<double>(sig.samples.size());
      CHECK(0.5 * mean ==
            doctest::Approx(wpt::average_power(w)).epsilon(1e-6));
    }
  }
}

TEST_CASE("papr follows the passband convention") {
  const auto grid = default_grid();
  const double fs = wpt::default_oracle_sample_rate(grid);
  const double period = 1.0 / grid.spacing_hz();

  SUBCASE("eight uniform in-phase tones hit 2N") {
    const auto w = uniform_weights(grid, 1.0, 4.0);
    const auto sig = wpt::synthesize_multisine(w, period, fs);
    CHECK(wpt::papr_db(sig) == doctest::Approx(kDb16).epsilon(1e-9));
  }

  SUBCASE("a pi flip on one of two equal tones only shifts time") {
    const ToneGrid g2(2.4e9, 2, 1.25e6);
    const double p2 = 1.0 / g2.spacing_hz();
    const double f2 = wpt::default_oracle_sample_rate(g2);
    const MultisineWeights in_phase(g2, {cdouble{1.0, 0.0}, cdouble{1.0, 0.0}},
                                    1.0);
    const MultisineWeights flipped(g2, {cdouble{1.0, 0.0}, cdouble{-1.0, 0.0}},
                                   1.0);
    const double a = wpt::papr_db(wpt::synthesize_multisine(in_phase, p2, f2));
    const double b = wpt::papr_db(wpt::synthesize_multisine(flipped, p2, f2));
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }
}

TEST_CASE("common phase rotation changes neither power nor papr") {
  const auto grid = default_grid();
  const double fs = wpt::default_oracle_sample_rate(grid);
  const double period = 1.0 / grid.spacing_hz();
  const auto w = random_weights(grid, 77);

  const cdouble rot = std::polar(1.0, 1.2345);
  std::vector<cdouble> rotated = w.weights;
  for (auto& wn : rotated) {
    wn *= rot;
  }
  const MultisineWeights wr(grid, std::move(rotated), w.power_budget_w);

  CHECK(wpt::average_power(wr) ==
        doctest::Approx(wpt::average_power(w)).epsilon(1e-12));
  const double papr_a = wpt::papr_db(wpt::synthesize_multisine(w, period, fs));
  const double papr_b =
      wpt::papr_db(wpt::synthesize_multisine(wr, period, fs));
  CHECK(papr_a == doctest::Approx(papr_b).epsilon(1e-9));
}

TEST_CASE("synthesis is linear in the weights") {
  const auto grid = default_grid();
  const double fs = wpt::default_oracle_sample_rate(grid);
  const double period = 1.0 / grid.spacing_hz();

  SUBCASE("shared grid") {
    const auto w1 = random_weights(grid, 3);
    const auto w2 = random_weights(grid, 4);
    std::vector<cdouble> sum_w(w1.weights);
    for (std::size_t i = 0; i < sum_w.size(); ++i) {
      sum_w[i] += w2.weights[i];
    }
    double p = 0.0;
    for (const auto& wn : sum_w) {
      p += std::norm(wn);
    }
    const MultisineWeights ws(grid, std::move(sum_w), 0.5 * p * 1.0000001);

    const auto s1 = wpt::synthesize_multisine(w1, period, fs);
    const auto s2 = wpt::synthesize_multisine(w2, period, fs);
    const auto ss = wpt::synthesize_multisine(ws, period, fs);
    for (std::size_t k = 0; k < ss.samples.size(); ++k) {
      CHECK(std::abs(ss.samples[k] - (s1.samples[k] + s2.samples[k])) <
            1e-12);
    }
  }

  SUBCASE("disjoint single-tone grids against their two-tone union") {
    const ToneGrid pair(2.4e9, 2, 1.25e6);
    const ToneGrid lo(pair.tone_hz(0), 1, 1.25e6);
    const ToneGrid hi(pair.tone_hz(1), 1, 1.25e6);
    const cdouble a{0.7, 0.2};
    const cdouble b{-0.3, 0.9};
    const double fs2 = wpt::default_oracle_sample_rate(pair);
    const double period2 = 1.0 / pair.spacing_hz();

    const auto su = wpt::synthesize_multisine(
        MultisineWeights(pair, {a, b}, 1.0), period2, fs2, 2.4e9);
    const auto sa = wpt::synthesize_multisine(MultisineWeights(lo, {a}, 1.0),
                                              period2, fs2, 2.4e9);
    const auto sb = wpt::synthesize_multisine(MultisineWeights(hi, {b}, 1.0),
                                              period2, fs2, 2.4e9);
    for (std::size_t k = 0; k < su.samples.size(); ++k) {
      CHECK(std::abs(su.samples[k] - (sa.samples[k] + sb.samples[k])) <
            1e-12);
    }
  }
}

TEST_CASE("synthesis rejects bad sample rates and durations") {
  const auto grid = default_grid();
  const auto w = uniform_weights(grid, 0.1, 1.0);
  CHECK_THROWS_AS(wpt::synthesize_multisine(w, 1e-6, 1e6),
                  std::invalid_argument);  // below 2x span
  CHECK_THROWS_AS(wpt::synthesize_multisine(w, 0.0, 100e6),
                  std::invalid_argument);
  CHECK_THROWS_AS(wpt::papr_db(wpt::BasebandSignal{}),
                  std::invalid_argument);
}
