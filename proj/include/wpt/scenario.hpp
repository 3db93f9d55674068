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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "wpt/chanest.hpp"
#include "wpt/channel.hpp"
#include "wpt/optimizer.hpp"
#include "wpt/rectenna.hpp"

namespace wpt {

inline double dbm_to_watts(double dbm) {
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}
inline double watts_to_dbm(double watts) {
  return 10.0 * std::log10(watts * 1e3);
}

/// Time split of the one-second slot: channel estimation first, power
/// transfer for the rest. t_ce must cover at least the pilot frame.
struct SlotSchedule {
  double t_ce_s = 1e-3;
  double t_pt_s = 0.999;
  double slot_length_s = 1.0;

  double duty_factor() const { return t_pt_s / slot_length_s; }
};

/// Everything one experiment needs: channel statistics (or a fixed
/// channel), the OFDM estimation setup, the WPT tone grid, optimizer and
/// rectenna parameters, noise, slot timing, and the Monte-Carlo plan.
/// Defaults follow the bench setup: 2.4 GHz, 20 MHz OFDM with the middle
/// 10 MHz active, 8 tones at 1.25 MHz spacing, beta 3, 35 dBm budget.
struct Scenario {
  ChannelProfile profile{};
  std::optional<TapDelayChannel> explicit_taps;
  std::string channel_kind = "nlos";

  OfdmConfig ofdm{};
  ToneGrid tones{2.4e9, 8, 1.25e6};
  SmfParams smf{3.0, dbm_to_watts(35.0)};
  RectennaModel rectenna = RectennaModel::default_polynomial();
  double noise_power_w = 1.6e-8;
  SlotSchedule schedule{};
  int trials = 100;
  std::uint64_t seed = 1;

  /// Cross-field checks: tone grid on active OFDM bins, schedule fits the
  /// slot and covers the pilot frame. Throws invalid_argument.
  void validate() const;
};

/// Parse a scenario from JSON text. Every field is optional and falls back
/// to the defaults above; see the README for the schema.
Scenario parse_scenario(const std::string& json_text);

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace wpt
