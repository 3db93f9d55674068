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
#include <vector>

#include "wpt/signal.hpp"

namespace wpt {

/// Block-pilot OFDM parameters. Defaults: 20 MHz bandwidth, 256
/// subcarriers (78.125 kHz spacing), the middle 10 MHz active with 64+64
/// guard bins, 64-sample cyclic prefix, 20 pilot symbols (320 us frame).
struct OfdmConfig {
  double bandwidth_hz = 20e6;
  int subcarrier_count = 256;
  int cp_length = 64;
  double active_band_hz = 10e6;
  int pilot_symbol_count = 20;
  double center_freq_hz = 2.4e9;

  double subcarrier_spacing_hz() const {
    return bandwidth_hz / subcarrier_count;
  }
  int active_count() const {
    return static_cast<int>(
        std::llround(active_band_hz / subcarrier_spacing_hz()));
  }
  int guard_count() const { return (subcarrier_count - active_count()) / 2; }
  int symbol_length() const { return subcarrier_count + cp_length; }
  int frame_length() const { return symbol_length() * pilot_symbol_count; }
  double frame_duration_s() const { return frame_length() / bandwidth_hz; }

  /// Centered bin offset of active index k (k in [0, active_count)).
  int active_bin_offset(int k) const { return k - active_count() / 2; }
  /// Absolute RF frequency of active index k.
  double active_freq_hz(int k) const {
    return center_freq_hz + active_bin_offset(k) * subcarrier_spacing_hz();
  }

  /// Throws invalid_argument when the fields are inconsistent.
  void validate() const;
};

/// Known reference symbols per (pilot symbol, active subcarrier), unit
/// magnitude. Block type: every active subcarrier in every symbol.
class PilotGrid {
 public:
  PilotGrid(int symbol_count, int active_count, std::vector<cdouble> values);

  /// All-ones pilots for the given config.
  static PilotGrid all_ones(const OfdmConfig& cfg);

  int symbol_count() const { return symbol_count_; }
  int active_count() const { return active_count_; }
  cdouble at(int symbol, int k) const {
    return values_[static_cast<std::size_t>(symbol) *
                       static_cast<std::size_t>(active_count_) +
                   static_cast<std::size_t>(k)];
  }

 private:
  int symbol_count_;
  int active_count_;
  std::vector<cdouble> values_;
};

/// Per-subcarrier complex channel estimates over the active band.
struct CsiEstimate {
  std::vector<double> subcarrier_freqs_hz;
  std::vector<cdouble> h_est;
  int symbols_averaged = 0;
};

/// IFFT each pilot symbol onto the 256-bin layout (guards zeroed), prepend
/// the cyclic prefix, concatenate. Unitary DFT normalization throughout.
BasebandSignal build_pilot_frame(const OfdmConfig& cfg, const PilotGrid& grid);

/// Per symbol: strip CP, FFT, divide by the known pilot per active bin;
/// average the per-symbol estimates.
CsiEstimate ls_estimate(const BasebandSignal& received, const OfdmConfig& cfg,
                        const PilotGrid& grid);

/// Picks the estimates at the tone frequencies. Every tone must coincide
/// with an active subcarrier; anything off-grid is a configuration error.
std::vector<cdouble> extract_tone_csi(const CsiEstimate& est,
                                      const ToneGrid& grid);

}  // namespace wpt
