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

#include <cstdint>
#include <string>
#include <vector>

#include "wpt/signal.hpp"

namespace wpt {

struct ChannelTap {
  double delay_s = 0.0;
  cdouble gain{0.0, 0.0};
};

/// Tapped-delay-line multipath channel. Delays are non-negative and
/// strictly increasing; frequency response is sum_l gain_l * e^{-j2pi f d_l}.
class TapDelayChannel {
 public:
  explicit TapDelayChannel(std::vector<ChannelTap> taps,
                           std::string label = "");

  const std::vector<ChannelTap>& taps() const { return taps_; }
  const std::string& label() const { return label_; }
  double max_delay_s() const { return taps_.back().delay_s; }

 private:
  std::vector<ChannelTap> taps_;
  std::string label_;
};

/// Channel response at an absolute RF frequency.
cdouble freq_response(const TapDelayChannel& ch, double freq_hz);

/// Per-tone received weights h_n * w_n.
struct ReceivedTones {
  ToneGrid grid;
  std::vector<cdouble> rx_weights;
};

ReceivedTones propagate_tones(const MultisineWeights& w,
                              const TapDelayChannel& ch);

/// 0.5 * sum |rx_n|^2 (watts).
double received_rf_power(const ReceivedTones& rx);

/// How propagate_samples places taps on the sample grid.
enum class DelayQuantization {
  kNearestSample,    // round each delay to the nearest sample
  kExactSampleOnly,  // error out unless every delay is already on the grid
};

/// Discrete convolution with the baseband-equivalent taps: each tap becomes
/// gain * e^{-j2pi f_ref d_q} at sample round(d * fs), with d_q the rounded
/// delay. Output length equals input length; the first max-delay samples
/// carry the fill-in transient.
BasebandSignal propagate_samples(
    const BasebandSignal& sig, const TapDelayChannel& ch,
    DelayQuantization quantization = DelayQuantization::kNearestSample);

/// Adds circularly-symmetric complex Gaussian noise, per-sample variance
/// noise_power_w. Deterministic for a given seed; a zero noise power
/// returns the input unchanged.
BasebandSignal add_awgn(const BasebandSignal& sig, double noise_power_w,
                        std::uint64_t seed);

enum class ProfileKind {
  kFlat,         // single tap, random phase, fixed magnitude
  kExponential,  // Rayleigh taps with exponentially decaying power
};

/// Statistical channel family for Monte-Carlo draws. The exponential
/// profile normalizes expected total tap power to the mean path loss.
struct ChannelProfile {
  ProfileKind kind = ProfileKind::kExponential;
  int tap_count = 8;
  double rms_delay_spread_s = 25e-9;
  double mean_path_loss_db = 58.0;
  double tap_spacing_s = 50e-9;  // one sample at 20 MHz
};

TapDelayChannel sample_random_channel(const ChannelProfile& profile,
                                      std::uint64_t seed);

}  // namespace wpt
