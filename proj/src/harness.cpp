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

#include "wpt/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "wpt/rng.hpp"

namespace wpt {

namespace {

double harvest(const Scenario& sc, const ReceivedTones& rx) {
  if (sc.rectenna.mode() == RectennaMode::kPolynomial) {
    return harvest_dc_polynomial(rx, sc.rectenna);
  }
  return harvest_dc_efficiency_curve(received_rf_power(rx), sc.rectenna);
}

}  // namespace

SlotReport run_slot(const Scenario& sc, const TapDelayChannel& ch,
                    std::uint64_t seed) {
  sc.validate();

  const auto pilots = PilotGrid::all_ones(sc.ofdm);
  const auto frame = build_pilot_frame(sc.ofdm, pilots);
  const auto rx_frame = add_awgn(propagate_samples(frame, ch),
                                 sc.noise_power_w, derive_seed(seed, 1));
  const auto est = ls_estimate(rx_frame, sc.ofdm, pilots);
  const auto csi_est = extract_tone_csi(est, sc.tones);

  std::vector<cdouble> csi_true;
  csi_true.reserve(static_cast<std::size_t>(sc.tones.count()));
  for (int t = 0; t < sc.tones.count(); ++t) {
    csi_true.push_back(freq_response(ch, sc.tones.tone_hz(t)));
  }

  double err = 0.0;
  double ref = 0.0;
  for (std::size_t i = 0; i < csi_true.size(); ++i) {
    err += std::norm(csi_est[i] - csi_true[i]);
    ref += std::norm(csi_true[i]);
  }
  const double csi_mse = ref > 0.0 ? err / ref : err;

  MultisineWeights weights_adaptive = [&] {
    try {
      return smf_weights(csi_est, sc.smf, sc.tones);
    } catch (const std::invalid_argument& e) {
      throw SlotFailure(std::string("adaptive arm: ") + e.what());
    }
  }();
  MultisineWeights weights_nonadaptive =
      nonadaptive_weights(sc.tones, sc.smf.power_budget_w);

  const auto rx_adaptive = propagate_tones(weights_adaptive, ch);
  const auto rx_nonadaptive = propagate_tones(weights_nonadaptive, ch);

  const double dc_adaptive = harvest(sc, rx_adaptive);
  const double dc_nonadaptive = harvest(sc, rx_nonadaptive);
  const double duty = sc.schedule.duty_factor();

  return SlotReport{std::move(csi_true),
                    csi_est,
                    std::move(weights_adaptive),
                    std::move(weights_nonadaptive),
                    received_rf_power(rx_adaptive),
                    received_rf_power(rx_nonadaptive),
                    dc_adaptive,
                    dc_nonadaptive,
                    dc_adaptive * duty,
                    dc_nonadaptive * duty,
                    csi_mse};
}

ExperimentSummary run_experiment(const Scenario& sc) {
  sc.validate();

  ExperimentSummary sum;
  sum.trials.reserve(static_cast<std::size_t>(sc.trials));

  for (int t = 0; t < sc.trials; ++t) {
    const std::uint64_t trial_seed =
        derive_seed(sc.seed, static_cast<std::uint64_t>(t));
    TrialRecord rec;
    rec.trial_id = t;
    rec.seed = trial_seed;
    rec.channel_kind = sc.channel_kind;
    try {
      const TapDelayChannel ch =
          sc.explicit_taps
              ? *sc.explicit_taps
              : sample_random_channel(sc.profile, derive_seed(trial_seed, 0));
      const SlotReport rep = run_slot(sc, ch, trial_seed);
      if (rep.dc_nonadaptive <= 0.0) {
        throw SlotFailure("zero non-adaptive DC; channel is degenerate");
      }
      rec.rx_rf_power_adaptive_dbm = watts_to_dbm(rep.rx_rf_power_adaptive_w);
      rec.rx_rf_power_nonadaptive_dbm =
          watts_to_dbm(rep.rx_rf_power_nonadaptive_w);
      rec.dc_adaptive = rep.dc_adaptive;
      rec.dc_nonadaptive = rep.dc_nonadaptive;
      rec.gain_percent =
          (rep.dc_adaptive / rep.dc_nonadaptive - 1.0) * 100.0;
      rec.csi_mse = rep.csi_mse;
    } catch (const SlotFailure& e) {
      rec.failed = true;
      rec.error = e.what();
    }
    sum.trials.push_back(std::move(rec));
  }

  double acc_a = 0.0;
  double acc_na = 0.0;
  double acc_rx_a = 0.0;
  double acc_rx_na = 0.0;
  double acc_mse = 0.0;
  for (const auto& rec : sum.trials) {
    if (rec.failed) {
      ++sum.failed;
      continue;
    }
    ++sum.completed;
    acc_a += rec.dc_adaptive;
    acc_na += rec.dc_nonadaptive;
    acc_rx_a += rec.rx_rf_power_adaptive_dbm;
    acc_rx_na += rec.rx_rf_power_nonadaptive_dbm;
    acc_mse += rec.csi_mse;
  }
  if (sum.completed > 0) {
    const double n = static_cast<double>(sum.completed);
    sum.mean_dc_adaptive = acc_a / n;
    sum.mean_dc_nonadaptive = acc_na / n;
    sum.mean_rx_adaptive_dbm = acc_rx_a / n;
    sum.mean_rx_nonadaptive_dbm = acc_rx_na / n;
    sum.mean_csi_mse = acc_mse / n;
    if (sum.mean_dc_nonadaptive > 0.0) {
      sum.mean_gain_percent =
          (sum.mean_dc_adaptive / sum.mean_dc_nonadaptive - 1.0) * 100.0;
    }
    if (sum.completed > 1) {
      double va = 0.0;
      double vna = 0.0;
      for (const auto& rec : sum.trials) {
        if (rec.failed) {
          continue;
        }
        va += (rec.dc_adaptive - sum.mean_dc_adaptive) *
              (rec.dc_adaptive - sum.mean_dc_adaptive);
        vna += (rec.dc_nonadaptive - sum.mean_dc_nonadaptive) *
               (rec.dc_nonadaptive - sum.mean_dc_nonadaptive);
      }
      sum.stddev_dc_adaptive = std::sqrt(va / (n - 1.0));
      sum.stddev_dc_nonadaptive = std::sqrt(vna / (n - 1.0));
    }
  }
  return sum;
}

void emit_results(const ExperimentSummary& summary,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_results: cannot open " + path.string());
  }
  out << "trial_id,seed,channel_kind,rx_rf_power_adaptive_dbm,"
         "rx_rf_power_nonadaptive_dbm,dc_adaptive,dc_nonadaptive,"
         "gain_percent,csi_mse\n";
  char line[512];
  for (const auto& rec : summary.trials) {
    if (rec.failed) {
      continue;
    }
    std::snprintf(line, sizeof(line),
                  "%d,%llu,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  rec.trial_id,
                  static_cast<unsigned long long>(rec.seed),
                  rec.channel_kind.c_str(), rec.rx_rf_power_adaptive_dbm,
                  rec.rx_rf_power_nonadaptive_dbm, rec.dc_adaptive,
                  rec.dc_nonadaptive, rec.gain_percent, rec.csi_mse);
    out << line;
  }
  if (!out) {
    throw std::runtime_error("emit_results: write failed for " +
                             path.string());
  }
}

}  // namespace wpt
