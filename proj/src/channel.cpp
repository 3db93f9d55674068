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

#include "wpt/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpt/kernels.hpp"
#include "wpt/rng.hpp"

namespace wpt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TapDelayChannel::TapDelayChannel(std::vector<ChannelTap> taps,
                                 std::string label)
    : taps_(std::move(taps)), label_(std::move(label)) {
  if (taps_.empty()) {
    throw std::invalid_argument("TapDelayChannel: needs at least one tap");
  }
  double prev = -1.0;
  for (const auto& tap : taps_) {
    if (tap.delay_s < 0.0) {
      throw std::invalid_argument("TapDelayChannel: negative tap delay");
    }
    if (tap.delay_s <= prev) {
      throw std::invalid_argument(
          "TapDelayChannel: delays must be strictly increasing");
    }
    prev = tap.delay_s;
  }
}

cdouble freq_response(const TapDelayChannel& ch, double freq_hz) {
  cdouble h{0.0, 0.0};
  for (const auto& tap : ch.taps()) {
    h += tap.gain * std::polar(1.0, -kTwoPi * freq_hz * tap.delay_s);
  }
  return h;
}

ReceivedTones propagate_tones(const MultisineWeights& w,
                              const TapDelayChannel& ch) {
  ReceivedTones rx{w.grid, {}};
  rx.rx_weights.reserve(w.weights.size());
  for (int n = 0; n < w.grid.count(); ++n) {
    rx.rx_weights.push_back(freq_response(ch, w.grid.tone_hz(n)) *
                            w.weights[static_cast<std::size_t>(n)]);
  }
  return rx;
}

double received_rf_power(const ReceivedTones& rx) {
  double p = 0.0;
  for (const auto& r : rx.rx_weights) {
    p += std::norm(r);
  }
  return 0.5 * p;
}

BasebandSignal propagate_samples(const BasebandSignal& sig,
                                 const TapDelayChannel& ch,
                                 DelayQuantization quantization) {
  if (sig.samples.empty()) {
    throw std::invalid_argument("propagate_samples: empty signal");
  }
  const double fs = sig.sample_rate_hz;
  BasebandSignal out;
  out.samples.assign(sig.samples.size(), cdouble{0.0, 0.0});
  out.sample_rate_hz = fs;
  out.reference_freq_hz = sig.reference_freq_hz;

  for (const auto& tap : ch.taps()) {
    const double exact = tap.delay_s * fs;
    const auto d = static_cast<std::size_t>(std::llround(exact));
    if (quantization == DelayQuantization::kExactSampleOnly &&
        std::abs(exact - std::round(exact)) > 1e-6) {
      throw std::invalid_argument(
          "propagate_samples: tap delay not on the sample grid");
    }
    if (d >= sig.samples.size()) {
      continue;  // tap falls entirely past the signal
    }
    // carrier phase of the quantized delay, so the discrete channel is
    // exactly the tapped-delay channel with delays d/fs
    const cdouble bb_gain =
        tap.gain * std::polar(1.0, -kTwoPi * sig.reference_freq_hz *
                                       (static_cast<double>(d) / fs));
    kernels::caxpy(out.samples.data() + d, sig.samples.data(),
                   sig.samples.size() - d, bb_gain);
  }
  return out;
}

BasebandSignal add_awgn(const BasebandSignal& sig, double noise_power_w,
                        std::uint64_t seed) {
  if (noise_power_w < 0.0) {
    throw std::invalid_argument("add_awgn: negative noise power");
  }
  if (noise_power_w == 0.0) {
    return sig;
  }
  BasebandSignal out = sig;
  Rng rng(seed);
  for (auto& z : out.samples) {
    z += rng.normal_complex(noise_power_w);
  }
  return out;
}

TapDelayChannel sample_random_channel(const ChannelProfile& profile,
                                      std::uint64_t seed) {
  if (profile.tap_count < 1) {
    throw std::invalid_argument("ChannelProfile: tap_count must be >= 1");
  }
  if (profile.tap_spacing_s <= 0.0 && profile.tap_count > 1 &&
      profile.kind == ProfileKind::kExponential) {
    throw std::invalid_argument("ChannelProfile: tap_spacing must be > 0");
  }
  const double total_power =
      std::pow(10.0, -profile.mean_path_loss_db / 10.0);
  Rng rng(seed);

  if (profile.kind == ProfileKind::kFlat) {
    const cdouble gain =
        std::polar(std::sqrt(total_power), rng.uniform(0.0, kTwoPi));
    return TapDelayChannel({{0.0, gain}}, "flat");
  }

  // expected tap powers decay as exp(-delay/spread), normalized so the
  // expected sum matches the mean path loss; zero spread degenerates to a
  // single-tap (flat) power profile
  std::vector<double> weights(static_cast<std::size_t>(profile.tap_count));
  double wsum = 0.0;
  for (int l = 0; l < profile.tap_count; ++l) {
    const double delay = static_cast<double>(l) * profile.tap_spacing_s;
    double wl;
    if (profile.rms_delay_spread_s <= 0.0) {
      wl = (l == 0) ? 1.0 : 0.0;
    } else {
      wl = std::exp(-delay / profile.rms_delay_spread_s);
    }
    weights[static_cast<std::size_t>(l)] = wl;
    wsum += wl;
  }

  std::vector<ChannelTap> taps;
  taps.reserve(weights.size());
  for (int l = 0; l < profile.tap_count; ++l) {
    const double expected_power =
        total_power * weights[static_cast<std::size_t>(l)] / wsum;
    const cdouble gain = rng.normal_complex(1.0) * std::sqrt(expected_power);
    taps.push_back({static_cast<double>(l) * profile.tap_spacing_s, gain});
  }
  return TapDelayChannel(std::move(taps), "exponential");
}

}  // namespace wpt
