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

#include "wpt/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpt/kernels.hpp"

namespace wpt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ToneGrid::ToneGrid(double center_hz, int tone_count, double spacing_hz)
    : center_hz_(center_hz), count_(tone_count), spacing_hz_(spacing_hz) {
  if (tone_count < 1) {
    throw std::invalid_argument("ToneGrid: tone_count must be >= 1");
  }
  if (spacing_hz <= 0.0 && tone_count > 1) {
    throw std::invalid_argument("ToneGrid: spacing must be positive");
  }
  if (spacing_hz <= 0.0) {
    spacing_hz_ = 1.0;  // single tone: spacing is irrelevant but kept sane
  }
  freqs_.reserve(static_cast<std::size_t>(count_));
  const double half = 0.5 * static_cast<double>(count_ - 1);
  for (int n = 0; n < count_; ++n) {
    freqs_.push_back(center_hz_ + (static_cast<double>(n) - half) * spacing_hz_);
  }
}

MultisineWeights::MultisineWeights(ToneGrid g, std::vector<cdouble> w,
                                   double budget_w)
    : grid(std::move(g)), weights(std::move(w)), power_budget_w(budget_w) {
  if (weights.size() != static_cast<std::size_t>(grid.count())) {
    throw std::invalid_argument("MultisineWeights: weight count != tone count");
  }
  if (power_budget_w <= 0.0) {
    throw std::invalid_argument("MultisineWeights: power budget must be > 0");
  }
  double p = 0.0;
  for (const auto& wn : weights) {
    p += std::norm(wn);
  }
  p *= 0.5;
  if (p > power_budget_w * (1.0 + 1e-9)) {
    throw std::invalid_argument(
        "MultisineWeights: average power exceeds the budget");
  }
}

double average_power(const MultisineWeights& w) {
  double p = 0.0;
  for (const auto& wn : w.weights) {
    p += std::norm(wn);
  }
  return 0.5 * p;
}

BasebandSignal synthesize_tones(const ToneGrid& grid,
                                std::span<const cdouble> weights,
                                double duration_s, double sample_rate_hz,
                                double reference_freq_hz) {
  if (weights.empty()) {
    throw std::invalid_argument("synthesize_tones: empty tone set");
  }
  if (duration_s <= 0.0) {
    throw std::invalid_argument("synthesize_tones: duration must be > 0");
  }
  double max_offset = 0.0;
  for (int n = 0; n < grid.count(); ++n) {
    max_offset = std::max(max_offset,
                          std::abs(grid.tone_hz(n) - reference_freq_hz));
  }
  if (sample_rate_hz < 2.0 * grid.span_hz() ||
      sample_rate_hz < 2.0 * max_offset) {
    throw std::invalid_argument(
        "synthesize_tones: sample rate below the anti-alias bound");
  }

  const auto count = static_cast<std::size_t>(
      std::llround(duration_s * sample_rate_hz));
  if (count == 0) {
    throw std::invalid_argument("synthesize_tones: duration too short");
  }

  BasebandSignal sig;
  sig.samples.assign(count, cdouble{0.0, 0.0});
  sig.sample_rate_hz = sample_rate_hz;
  sig.reference_freq_hz = reference_freq_hz;
  for (int n = 0; n < grid.count(); ++n) {
    const double step =
        kTwoPi * (grid.tone_hz(n) - reference_freq_hz) / sample_rate_hz;
    kernels::tone_accumulate(sig.samples.data(), count, weights[n], 0.0, step);
  }
  return sig;
}

BasebandSignal synthesize_multisine(const MultisineWeights& w,
                                    double duration_s, double sample_rate_hz,
                                    double reference_freq_hz) {
  return synthesize_tones(w.grid, w.weights, duration_s, sample_rate_hz,
                          reference_freq_hz);
}

BasebandSignal synthesize_multisine(const MultisineWeights& w,
                                    double duration_s,
                                    double sample_rate_hz) {
  return synthesize_multisine(w, duration_s, sample_rate_hz,
                              w.grid.center_hz());
}

double papr_db(const BasebandSignal& sig) {
  if (sig.samples.empty()) {
    throw std::invalid_argument("papr_db: empty signal");
  }
  double peak = 0.0;
  double mean = 0.0;
  for (const auto& z : sig.samples) {
    const double p = std::norm(z);
    peak = std::max(peak, p);
    mean += p;
  }
  mean /= static_cast<double>(sig.samples.size());
  if (mean == 0.0) {
    throw std::invalid_argument("papr_db: all-zero signal");
  }
  // peak instantaneous passband power max|env|^2 over mean passband power
  // mean|env|^2 / 2
  return 10.0 * std::log10(peak / (0.5 * mean));
}

double default_oracle_sample_rate(const ToneGrid& grid) {
  return std::max(8.0 * grid.span_hz(), 8.0 * grid.spacing_hz());
}

}  // namespace wpt
