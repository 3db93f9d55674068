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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpt/scenario.hpp"

namespace wpt {

/// A slot that could not produce a result (e.g. all-zero CSI). Recoverable:
/// the experiment runner records it and moves on to the next trial.
class SlotFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One closed-loop slot: estimated and true per-tone CSI, both waveform
/// arms, and what each arm received and harvested.
struct SlotReport {
  std::vector<cdouble> csi_true;
  std::vector<cdouble> csi_est;
  MultisineWeights weights_adaptive;
  MultisineWeights weights_nonadaptive;
  double rx_rf_power_adaptive_w = 0.0;
  double rx_rf_power_nonadaptive_w = 0.0;
  double dc_adaptive = 0.0;
  double dc_nonadaptive = 0.0;
  double duty_cycled_dc_adaptive = 0.0;
  double duty_cycled_dc_nonadaptive = 0.0;
  double csi_mse = 0.0;  // sum|est-true|^2 / sum|true|^2 over the tones
};

/// Runs the closed loop once over the given channel realization: pilot
/// frame -> channel -> noise -> LS estimate -> tone CSI -> SMF weights,
/// with the non-adaptive arm transmitted over the identical channel at the
/// identical power budget. Throws SlotFailure when the slot cannot
/// complete (all-zero CSI); configuration errors propagate as
/// invalid_argument.
SlotReport run_slot(const Scenario& sc, const TapDelayChannel& ch,
                    std::uint64_t seed);

struct TrialRecord {
  int trial_id = 0;
  std::uint64_t seed = 0;
  std::string channel_kind;
  double rx_rf_power_adaptive_dbm = 0.0;
  double rx_rf_power_nonadaptive_dbm = 0.0;
  double dc_adaptive = 0.0;
  double dc_nonadaptive = 0.0;
  double gain_percent = 0.0;
  double csi_mse = 0.0;
  bool failed = false;
  std::string error;
};

struct ExperimentSummary {
  std::vector<TrialRecord> trials;
  int completed = 0;
  int failed = 0;
  double mean_dc_adaptive = 0.0;
  double stddev_dc_adaptive = 0.0;
  double mean_dc_nonadaptive = 0.0;
  double stddev_dc_nonadaptive = 0.0;
  /// Gain of means, (mean_adaptive / mean_nonadaptive - 1) * 100.
  double mean_gain_percent = 0.0;
  double mean_rx_adaptive_dbm = 0.0;
  double mean_rx_nonadaptive_dbm = 0.0;
  double mean_csi_mse = 0.0;
};

/// Monte-Carlo run: draws one channel per trial from the scenario profile
/// (or reuses the explicit taps), runs the slot with a per-trial seed
/// derived from the scenario seed, and aggregates. Slot failures are
/// recorded, not thrown.
ExperimentSummary run_experiment(const Scenario& sc);

/// Writes one CSV row per completed trial with a fixed column order:
/// trial_id, seed, channel_kind, rx_rf_power_adaptive_dbm,
/// rx_rf_power_nonadaptive_dbm, dc_adaptive, dc_nonadaptive, gain_percent,
/// csi_mse. Identical summaries produce byte-identical files.
void emit_results(const ExperimentSummary& summary,
                  const std::filesystem::path& path);

}  // namespace wpt
