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

#include "wpt/chanest.hpp"

#include <cmath>
#include <stdexcept>

#include "wpt/fft.hpp"

namespace wpt {

void OfdmConfig::validate() const {
  if (bandwidth_hz <= 0.0 || subcarrier_count < 2 ||
      (subcarrier_count & (subcarrier_count - 1)) != 0) {
    throw std::invalid_argument(
        "OfdmConfig: subcarrier_count must be a power of two over a positive "
        "bandwidth");
  }
  if (cp_length < 0 || cp_length >= subcarrier_count) {
    throw std::invalid_argument("OfdmConfig: bad cyclic prefix length");
  }
  if (pilot_symbol_count < 1) {
    throw std::invalid_argument("OfdmConfig: needs at least one pilot symbol");
  }
  const double k = active_band_hz / subcarrier_spacing_hz();
  if (std::abs(k - std::round(k)) > 1e-6 || active_count() < 1 ||
      active_count() > subcarrier_count) {
    throw std::invalid_argument(
        "OfdmConfig: active band must be a whole number of subcarriers "
        "inside the bandwidth");
  }
  if ((subcarrier_count - active_count()) % 2 != 0) {
    throw std::invalid_argument("OfdmConfig: guard bands must be symmetric");
  }
}

PilotGrid::PilotGrid(int symbol_count, int active_count,
                     std::vector<cdouble> values)
    : symbol_count_(symbol_count),
      active_count_(active_count),
      values_(std::move(values)) {
  if (symbol_count_ < 1 || active_count_ < 1 ||
      values_.size() != static_cast<std::size_t>(symbol_count_) *
                            static_cast<std::size_t>(active_count_)) {
    throw std::invalid_argument("PilotGrid: dimension mismatch");
  }
  // unit magnitude; zero entries are tolerated for diagnostic frames but
  // rejected by ls_estimate
  for (const auto& v : values_) {
    const double mag = std::abs(v);
    if (mag != 0.0 && std::abs(mag - 1.0) > 1e-9) {
      throw std::invalid_argument("PilotGrid: pilots must be unit magnitude");
    }
  }
}

PilotGrid PilotGrid::all_ones(const OfdmConfig& cfg) {
  cfg.validate();
  return PilotGrid(
      cfg.pilot_symbol_count, cfg.active_count(),
      std::vector<cdouble>(static_cast<std::size_t>(cfg.pilot_symbol_count) *
                               static_cast<std::size_t>(cfg.active_count()),
                           cdouble{1.0, 0.0}));
}

namespace {

// centered bin offset -> DFT index
std::size_t dft_bin(int offset, int n) {
  return static_cast<std::size_t>((offset + n) % n);
}

void check_grid_matches(const OfdmConfig& cfg, const PilotGrid& grid) {
  if (grid.symbol_count() != cfg.pilot_symbol_count ||
      grid.active_count() != cfg.active_count()) {
    throw std::invalid_argument("pilot grid does not match the OFDM config");
  }
}

}  // namespace

BasebandSignal build_pilot_frame(const OfdmConfig& cfg,
                                 const PilotGrid& grid) {
  cfg.validate();
  check_grid_matches(cfg, grid);

  const int n = cfg.subcarrier_count;
  BasebandSignal sig;
  sig.sample_rate_hz = cfg.bandwidth_hz;
  sig.reference_freq_hz = cfg.center_freq_hz;
  sig.samples.reserve(static_cast<std::size_t>(cfg.frame_length()));

  std::vector<cdouble> spectrum(static_cast<std::size_t>(n));
  for (int s = 0; s < cfg.pilot_symbol_count; ++s) {
    spectrum.assign(static_cast<std::size_t>(n), cdouble{0.0, 0.0});
    for (int k = 0; k < cfg.active_count(); ++k) {
      spectrum[dft_bin(cfg.active_bin_offset(k), n)] = grid.at(s, k);
    }
    fft::inverse(spectrum);
    // cyclic prefix = tail of the useful part
    for (int i = n - cfg.cp_length; i < n; ++i) {
      sig.samples.push_back(spectrum[static_cast<std::size_t>(i)]);
    }
    sig.samples.insert(sig.samples.end(), spectrum.begin(), spectrum.end());
  }
  return sig;
}

CsiEstimate ls_estimate(const BasebandSignal& received, const OfdmConfig& cfg,
                        const PilotGrid& grid) {
  cfg.validate();
  check_grid_matches(cfg, grid);
  if (received.samples.size() !=
      static_cast<std::size_t>(cfg.frame_length())) {
    throw std::invalid_argument("ls_estimate: received length != frame length");
  }

  const int n = cfg.subcarrier_count;
  const int active = cfg.active_count();
  std::vector<cdouble> acc(static_cast<std::size_t>(active),
                           cdouble{0.0, 0.0});
  std::vector<cdouble> symbol(static_cast<std::size_t>(n));

  for (int s = 0; s < cfg.pilot_symbol_count; ++s) {
    const std::size_t start =
        static_cast<std::size_t>(s) *
            static_cast<std::size_t>(cfg.symbol_length()) +
        static_cast<std::size_t>(cfg.cp_length);
    for (int i = 0; i < n; ++i) {
      symbol[static_cast<std::size_t>(i)] =
          received.samples[start + static_cast<std::size_t>(i)];
    }
    fft::forward(symbol);
    for (int k = 0; k < active; ++k) {
      const cdouble x = grid.at(s, k);
      if (x == cdouble{0.0, 0.0}) {
        throw std::invalid_argument(
            "ls_estimate: zero pilot leaves the subcarrier unobserved");
      }
      const cdouble y = symbol[dft_bin(cfg.active_bin_offset(k), n)];
      acc[static_cast<std::size_t>(k)] += y / x;
    }
  }

  CsiEstimate est;
  est.symbols_averaged = cfg.pilot_symbol_count;
  est.subcarrier_freqs_hz.reserve(static_cast<std::size_t>(active));
  est.h_est.reserve(static_cast<std::size_t>(active));
  for (int k = 0; k < active; ++k) {
    est.subcarrier_freqs_hz.push_back(cfg.active_freq_hz(k));
    est.h_est.push_back(acc[static_cast<std::size_t>(k)] /
                        static_cast<double>(cfg.pilot_symbol_count));
  }
  return est;
}

std::vector<cdouble> extract_tone_csi(const CsiEstimate& est,
                                      const ToneGrid& grid) {
  if (est.h_est.empty() ||
      est.h_est.size() != est.subcarrier_freqs_hz.size()) {
    throw std::invalid_argument("extract_tone_csi: malformed estimate");
  }
  // uniform subcarrier grid: index arithmetic instead of a search
  const double f0 = est.subcarrier_freqs_hz.front();
  const double df = est.subcarrier_freqs_hz.size() > 1
                        ? est.subcarrier_freqs_hz[1] - f0
                        : 1.0;
  std::vector<cdouble> out;
  out.reserve(static_cast<std::size_t>(grid.count()));
  for (int t = 0; t < grid.count(); ++t) {
    const double pos = (grid.tone_hz(t) - f0) / df;
    const double r = std::round(pos);
    if (std::abs(pos - r) > 1e-6 || r < 0.0 ||
        r >= static_cast<double>(est.h_est.size())) {
      throw std::invalid_argument(
          "extract_tone_csi: tone frequency is not on an active subcarrier");
    }
    out.push_back(est.h_est[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace wpt
