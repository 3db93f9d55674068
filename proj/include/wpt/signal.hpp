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
#include <span>
#include <vector>

namespace wpt {

using cdouble = std::complex<double>;

/// Uniformly spaced tone frequencies centered on a carrier. Tone n sits at
/// center + (n - (N-1)/2) * spacing, so the grid is symmetric about the
/// carrier for any N.
class ToneGrid {
 public:
  ToneGrid(double center_hz, int tone_count, double spacing_hz);

  double center_hz() const { return center_hz_; }
  int count() const { return count_; }
  double spacing_hz() const { return spacing_hz_; }
  /// Occupied span (N-1)*spacing; zero for a single tone.
  double span_hz() const { return spacing_hz_ * (count_ - 1); }
  double tone_hz(int n) const { return freqs_[static_cast<std::size_t>(n)]; }
  const std::vector<double>& tone_freqs() const { return freqs_; }

 private:
  double center_hz_;
  int count_;
  double spacing_hz_;
  std::vector<double> freqs_;
};

/// Complex tone weights w_n = s_n * exp(j*phi_n) plus the transmit power
/// budget. Construction rejects weight sets whose average power
/// 0.5*sum|w_n|^2 exceeds the budget (relative tolerance 1e-9).
struct MultisineWeights {
  MultisineWeights(ToneGrid grid, std::vector<cdouble> weights,
                   double power_budget_w);

  ToneGrid grid;
  std::vector<cdouble> weights;
  double power_budget_w;
};

/// Complex envelope samples about a reference carrier frequency.
struct BasebandSignal {
  std::vector<cdouble> samples;
  double sample_rate_hz = 0.0;
  double reference_freq_hz = 0.0;
};

/// Average transmit power 0.5 * sum |w_n|^2 (watts).
double average_power(const MultisineWeights& w);

/// samples[k] = sum_n w_n * exp(j*2*pi*(f_n - reference) * k / fs).
/// The reference defaults to the grid center. Sample rate must cover twice
/// the envelope extent about the reference.
BasebandSignal synthesize_multisine(const MultisineWeights& w,
                                    double duration_s, double sample_rate_hz);
BasebandSignal synthesize_multisine(const MultisineWeights& w,
                                    double duration_s, double sample_rate_hz,
                                    double reference_freq_hz);

/// Untyped synthesis used by the channel and rectenna paths, where the tone
/// weights are received quantities rather than a budgeted transmit set.
BasebandSignal synthesize_tones(const ToneGrid& grid,
                                std::span<const cdouble> weights,
                                double duration_s, double sample_rate_hz,
                                double reference_freq_hz);

/// Peak-to-average power ratio in dB, passband convention: peak |env|^2
/// over mean |env|^2 / 2, so one tone reads 3.01 dB.
double papr_db(const BasebandSignal& sig);

/// 8x the grid span; comfortable oversampling for fourth-moment averaging.
double default_oracle_sample_rate(const ToneGrid& grid);

}  // namespace wpt
