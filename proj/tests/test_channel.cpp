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

#include "wpt/channel.hpp"
#include "wpt/rng.hpp"

namespace {

using wpt::cdouble;
using wpt::ChannelTap;
using wpt::MultisineWeights;
using wpt::TapDelayChannel;
using wpt::ToneGrid;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

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

TEST_CASE("tap validation") {
  CHECK_THROWS_AS(TapDelayChannel({}), std::invalid_argument);
  CHECK_THROWS_AS(TapDelayChannel({{-1e-9, cdouble{1.0, 0.0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TapDelayChannel({{1e-9, cdouble{1.0, 0.0}},
                                   {1e-9, cdouble{0.5, 0.0}}}),
                  std::invalid_argument);
}

TEST_CASE("frequency response of elementary channels") {
  SUBCASE("identity") {
    const TapDelayChannel ch({{0.0, cdouble{1.0, 0.0}}});
    for (const double f : {0.0, 1e6, 2.4e9}) {
      CHECK(std::abs(wpt::freq_response(ch, f) - cdouble{1.0, 0.0}) < 1e-15);
    }
  }
  SUBCASE("pure delay is all-pass with linear phase") {
    const double tau = 73e-9;
    const TapDelayChannel ch({{tau, cdouble{1.0, 0.0}}});
    for (const double f : {1e6, 10e6, 2.4e9}) {
      const cdouble h = wpt::freq_response(ch, f);
      CHECK(std::abs(h) == doctest::Approx(1.0).epsilon(1e-12));
      const cdouble expect = std::polar(1.0, -kTwoPi * f * tau);
      CHECK(std::abs(h - expect) < 1e-9);
    }
  }
  SUBCASE("two taps at 10 MHz collapse to 1.5") {
    const TapDelayChannel ch(
        {{0.0, cdouble{1.0, 0.0}}, {100e-9, cdouble{0.5, 0.0}}});
    const cdouble h = wpt::freq_response(ch, 10e6);
    CHECK(h.real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(h.imag()) < 1e-12);
  }
  SUBCASE("linear in the taps") {
    const TapDelayChannel a({{0.0, cdouble{0.4, 0.1}}});
    const TapDelayChannel b({{80e-9, cdouble{-0.2, 0.6}}});
    const TapDelayChannel ab(
        {{0.0, cdouble{0.4, 0.1}}, {80e-9, cdouble{-0.2, 0.6}}});
    for (const double f : {2.3995e9, 2.4e9, 2.4005e9}) {
      CHECK(std::abs(wpt::freq_response(ab, f) - wpt::freq_response(a, f) -
                     wpt::freq_response(b, f)) < 1e-15);
    }
  }
}

TEST_CASE("tone propagation") {
  const ToneGrid grid(2.4e9, 8, 1.25e6);
  const auto w = random_weights(grid, 17);

  SUBCASE("identity channel passes the weights through") {
    const TapDelayChannel ch({{0.0, cdouble{1.0, 0.0}}});
    const auto rx = wpt::propagate_tones(w, ch);
    for (int n = 0; n < grid.count(); ++n) {
      CHECK(std::abs(rx.rx_weights[static_cast<std::size_t>(n)] -
                     w.weights[static_cast<std::size_t>(n)]) < 1e-15);
    }
  }

  SUBCASE("flat channel scales power by |c|^2") {
    const cdouble c{0.3, -0.4};
    const TapDelayChannel ch({{0.0, c}});
    const auto rx = wpt::propagate_tones(w, ch);
    CHECK(wpt::received_rf_power(rx) ==
          doctest::Approx(std::norm(c) * wpt::average_power(w))
              .epsilon(1e-12));
  }

  SUBCASE("two-tap channel matches a per-tone direct evaluation") {
    const TapDelayChannel ch(
        {{0.0, cdouble{1.0, 0.0}}, {100e-9, cdouble{0.5, 0.0}}});
    const auto rx = wpt::propagate_tones(w, ch);
    for (int n = 0; n < grid.count(); ++n) {
      const double f = grid.tone_hz(n);
      const cdouble h = cdouble{1.0, 0.0} +
                        0.5 * std::polar(1.0, -kTwoPi * f * 100e-9);
      CHECK(std::abs(rx.rx_weights[static_cast<std::size_t>(n)] -
                     h * w.weights[static_cast<std::size_t>(n)]) < 1e-12);
    }
  }

  SUBCASE("received power equals the A^2 s^2 sum identity") {
    const TapDelayChannel ch(
        {{0.0, cdouble{0.8, 0.2}}, {150e-9, cdouble{0.1, -0.5}}});
    const auto rx = wpt::propagate_tones(w, ch);
    double expect = 0.0;
    for (int n = 0; n < grid.count(); ++n) {
      const double a = std::abs(wpt::freq_response(ch, grid.tone_hz(n)));
      const double s = std::abs(w.weights[static_cast<std::size_t>(n)]);
      expect += a * a * s * s;
    }
    expect *= 0.5;
    CHECK(wpt::received_rf_power(rx) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("sample propagation") {
  const ToneGrid grid(2.4e9, 8, 1.25e6);
  const auto w = random_weights(grid, 29);
  const double fs = 20e6;
  const double duration = 8e-6;  // ten full tone-spacing periods

  SUBCASE("identity channel is a no-op") {
    const auto sig = wpt::synthesize_multisine(w, duration, fs);
    const TapDelayChannel ch({{0.0, cdouble{1.0, 0.0}}});
    const auto out = wpt::propagate_samples(sig, ch);
    for (std::size_t k = 0; k < sig.samples.size(); ++k) {
      CHECK(std::abs(out.samples[k] - sig.samples[k]) < 1e-15);
    }
  }

  SUBCASE("integer-sample delay shifts and rotates") {
    const auto sig = wpt::synthesize_multisine(w, duration, fs);
    const double tau = 3.0 / fs;
    const TapDelayChannel ch({{tau, cdouble{1.0, 0.0}}});
    const auto out = wpt::propagate_samples(sig, ch);
    const cdouble rot = std::polar(1.0, -kTwoPi * sig.reference_freq_hz * tau);
    for (std::size_t k = 3; k < sig.samples.size(); ++k) {
      CHECK(std::abs(out.samples[k] - sig.samples[k - 3] * rot) < 1e-12);
    }
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(out.samples[k]) == 0.0);
    }
  }

  SUBCASE("steady state matches the tone-domain path") {
    // on-grid delays so the quantized channel is the channel itself
    const TapDelayChannel ch({{0.0, cdouble{0.9, 0.1}},
                              {2.0 / fs, cdouble{-0.3, 0.25}},
                              {5.0 / fs, cdouble{0.05, -0.15}}});
    const auto sig = wpt::synthesize_multisine(w, duration, fs);
    const auto out = wpt::propagate_samples(sig, ch);

    const auto rx = wpt::propagate_tones(w, ch);
    const auto ideal = wpt::synthesize_tones(grid, rx.rx_weights, duration,
                                             fs, sig.reference_freq_hz);
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t k = 5; k < out.samples.size(); ++k) {
      err += std::norm(out.samples[k] - ideal.samples[k]);
      ref += std::norm(ideal.samples[k]);
    }
    CHECK(std::sqrt(err / ref) < 1e-6);
  }

  SUBCASE("flat channel preserves papr") {
    const auto sig = wpt::synthesize_multisine(w, duration, fs);
    const TapDelayChannel ch({{0.0, cdouble{0.21, -0.77}}});
    const auto out = wpt::propagate_samples(sig, ch);
    CHECK(wpt::papr_db(out) ==
          doctest::Approx(wpt::papr_db(sig)).epsilon(1e-9));
  }

  SUBCASE("exact-delay policy rejects off-grid taps") {
    const auto sig = wpt::synthesize_multisine(w, duration, fs);
    const TapDelayChannel ch({{33e-9, cdouble{1.0, 0.0}}});
    CHECK_THROWS_AS(wpt::propagate_samples(
                        sig, ch, wpt::DelayQuantization::kExactSampleOnly),
                    std::invalid_argument);
    CHECK_NOTHROW(wpt::propagate_samples(sig, ch));
  }
}

TEST_CASE("awgn") {
  const ToneGrid grid(2.4e9, 1, 1.25e6);
  wpt::BasebandSignal sig;
  sig.sample_rate_hz = 20e6;
  sig.reference_freq_hz = 2.4e9;
  sig.samples.assign(1000000, cdouble{0.25, -0.5});

  SUBCASE("zero power is an exact no-op") {
    const auto out = wpt::add_awgn(sig, 0.0, 99);
    for (std::size_t k = 0; k < 100; ++k) {
      CHECK(out.samples[k] == sig.samples[k]);
    }
  }

  SUBCASE("per-sample variance lands within 1%") {
    const double np = 3.7e-3;
    const auto out = wpt::add_awgn(sig, np, 1234);
    double acc = 0.0;
    for (std::size_t k = 0; k < sig.samples.size(); ++k) {
      acc += std::norm(out.samples[k] - sig.samples[k]);
    }
    CHECK(acc / static_cast<double>(sig.samples.size()) ==
          doctest::Approx(np).epsilon(0.01));
  }

  SUBCASE("same seed, same noise") {
    const auto a = wpt::add_awgn(sig, 1e-3, 777);
    const auto b = wpt::add_awgn(sig, 1e-3, 777);
    for (std::size_t k = 0; k < 1000; ++k) {
      CHECK(a.samples[k] == b.samples[k]);
    }
  }

  CHECK_THROWS_AS(wpt::add_awgn(sig, -1.0, 0), std::invalid_argument);
}

TEST_CASE("random channel draws") {
  SUBCASE("flat profile gives one constant-magnitude tap") {
    wpt::ChannelProfile prof;
    prof.kind = wpt::ProfileKind::kFlat;
    prof.mean_path_loss_db = 58.0;
    const auto ch = wpt::sample_random_channel(prof, 5);
    REQUIRE(ch.taps().size() == 1);
    const double expect = std::sqrt(std::pow(10.0, -5.8));
    CHECK(std::abs(ch.taps()[0].gain) ==
          doctest::Approx(expect).epsilon(1e-12));
    // |h| constant across any frequency set
    const double h1 = std::abs(wpt::freq_response(ch, 2.395e9));
    const double h2 = std::abs(wpt::freq_response(ch, 2.405e9));
    CHECK(h1 == doctest::Approx(h2).epsilon(1e-12));
  }

  SUBCASE("exponential profile is normalized in expectation") {
    wpt::ChannelProfile prof;  // defaults: 8 taps, 25 ns, 58 dB
    const double target = std::pow(10.0, -5.8);
    double acc = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
      const auto ch =
          wpt::sample_random_channel(prof, static_cast<std::uint64_t>(i));
      for (const auto& tap : ch.taps()) {
        acc += std::norm(tap.gain);
      }
    }
    CHECK(acc / draws == doctest::Approx(target).epsilon(0.03));
  }

  SUBCASE("zero delay spread degenerates to a single-tap power profile") {
    wpt::ChannelProfile prof;
    prof.rms_delay_spread_s = 0.0;
    const auto ch = wpt::sample_random_channel(prof, 21);
    REQUIRE(ch.taps().size() == 8);
    CHECK(std::abs(ch.taps()[0].gain) > 0.0);
    for (std::size_t l = 1; l < ch.taps().size(); ++l) {
      CHECK(std::abs(ch.taps()[l].gain) == 0.0);
    }
  }

  SUBCASE("draws are deterministic per seed") {
    wpt::ChannelProfile prof;
    const auto a = wpt::sample_random_channel(prof, 31);
    const auto b = wpt::sample_random_channel(prof, 31);
    REQUIRE(a.taps().size() == b.taps().size());
    for (std::size_t l = 0; l < a.taps().size(); ++l) {
      CHECK(a.taps()[l].gain == b.taps()[l].gain);
    }
  }
}
