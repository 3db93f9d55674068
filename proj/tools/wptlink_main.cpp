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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpt/harness.hpp"
#include "wpt/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

void print_summary(const wpt::ExperimentSummary& sum) {
  std::printf("trials completed: %d, failed: %d\n", sum.completed,
              sum.failed);
  std::printf("mean rx RF power   adaptive: %8.3f dBm   non-adaptive: %8.3f dBm\n",
              sum.mean_rx_adaptive_dbm, sum.mean_rx_nonadaptive_dbm);
  std::printf("mean DC metric     adaptive: %.6g (sd %.3g)   non-adaptive: %.6g (sd %.3g)\n",
              sum.mean_dc_adaptive, sum.stddev_dc_adaptive,
              sum.mean_dc_nonadaptive, sum.stddev_dc_nonadaptive);
  std::printf("mean CSI NMSE: %.3g\n", sum.mean_csi_mse);
  std::printf("adaptive gain on means: %.2f%%\n", sum.mean_gain_percent);
}

int do_run(const std::string& scenario_path, int trials, long long seed,
           const std::string& out_path) {
  wpt::Scenario sc = wpt::load_scenario(scenario_path);
  if (trials > 0) {
    sc.trials = trials;
  }
  if (seed >= 0) {
    sc.seed = static_cast<std::uint64_t>(seed);
  }
  const auto sum = wpt::run_experiment(sc);
  print_summary(sum);
  if (!out_path.empty()) {
    wpt::emit_results(sum, out_path);
    std::printf("wrote %s\n", out_path.c_str());
  }
  return sum.failed == 0 ? kExitOk : kExitRuntime;
}

int do_sweep(const std::string& scenario_path, const std::string& param,
             const std::vector<double>& values, int trials, long long seed,
             const std::string& out_path) {
  wpt::Scenario base = wpt::load_scenario(scenario_path);
  if (trials > 0) {
    base.trials = trials;
  }
  if (seed >= 0) {
    base.seed = static_cast<std::uint64_t>(seed);
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("sweep: cannot open " + out_path);
  }
  out << "param,value,completed,failed,mean_dc_adaptive,"
         "mean_dc_nonadaptive,mean_gain_percent,mean_rx_adaptive_dbm,"
         "mean_csi_mse\n";

  bool any_failed = false;
  for (const double v : values) {
    wpt::Scenario sc = base;
    if (param == "beta") {
      sc.smf.beta = v;
    } else if (param == "noise_power_w") {
      sc.noise_power_w = v;
    } else if (param == "rms_delay_spread_ns") {
      sc.profile.rms_delay_spread_s = v * 1e-9;
    } else if (param == "mean_path_loss_db") {
      sc.profile.mean_path_loss_db = v;
    } else {
      throw std::invalid_argument("sweep: unknown parameter '" + param + "'");
    }
    const auto sum = wpt::run_experiment(sc);
    any_failed = any_failed || sum.failed > 0;
    std::printf("%s = %-8g gain %.2f%%  (completed %d, failed %d)\n",
                param.c_str(), v, sum.mean_gain_percent, sum.completed,
                sum.failed);
    char line[512];
    std::snprintf(line, sizeof(line),
                  "%s,%.12g,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  param.c_str(), v, sum.completed, sum.failed,
                  sum.mean_dc_adaptive, sum.mean_dc_nonadaptive,
                  sum.mean_gain_percent, sum.mean_rx_adaptive_dbm,
                  sum.mean_csi_mse);
    out << line;
  }
  std::printf("wrote %s\n", out_path.c_str());
  return any_failed ? kExitRuntime : kExitOk;
}

int do_oracle_check(int tones, int channels, int amp_levels, int phase_levels,
                    long long seed, double power_dbm, double path_loss_db,
                    double spread_ns, const std::vector<double>& betas) {
  const double power_w = wpt::dbm_to_watts(power_dbm);
  const wpt::ToneGrid grid(2.4e9, tones, 1.25e6);
  const auto rect = wpt::RectennaModel::default_polynomial();

  wpt::ChannelProfile profile;
  profile.kind = wpt::ProfileKind::kExponential;
  profile.tap_count = 8;
  profile.rms_delay_spread_s = spread_ns * 1e-9;
  profile.mean_path_loss_db = path_loss_db;

  double worst_smf_ratio = 1.0;
  bool ordering_ok = true;
  std::printf("%-8s %-14s %-14s %-14s %-10s\n", "channel", "dc_oracle",
              "dc_smf_best", "dc_nonadaptive", "smf/oracle");
  for (int c = 0; c < channels; ++c) {
    const auto ch = wpt::sample_random_channel(
        profile, wpt::derive_seed(static_cast<std::uint64_t>(seed),
                                  static_cast<std::uint64_t>(c)));
    std::vector<wpt::cdouble> h;
    for (int t = 0; t < grid.count(); ++t) {
      h.push_back(wpt::freq_response(ch, grid.tone_hz(t)));
    }

    const auto oracle = wpt::oracle_optimal_weights(h, power_w, rect,
                                                    amp_levels, phase_levels,
                                                    grid);
    const double dc_oracle =
        wpt::harvest_dc_polynomial(wpt::propagate_tones(oracle, ch), rect);

    double dc_smf = 0.0;
    for (const double beta : betas) {
      const auto w = wpt::smf_weights(h, {beta, power_w}, grid);
      dc_smf = std::max(dc_smf, wpt::harvest_dc_polynomial(
                                    wpt::propagate_tones(w, ch), rect));
    }
    const double dc_na = wpt::harvest_dc_polynomial(
        wpt::propagate_tones(wpt::nonadaptive_weights(grid, power_w), ch),
        rect);

    const double ratio = dc_smf / dc_oracle;
    worst_smf_ratio = std::min(worst_smf_ratio, ratio);
    if (dc_oracle < dc_smf * (1.0 - 1e-9) || dc_smf < dc_na * (1.0 - 1e-9)) {
      ordering_ok = false;
    }
    std::printf("%-8d %-14.6g %-14.6g %-14.6g %-10.4f\n", c, dc_oracle,
                dc_smf, dc_na, ratio);
  }
  std::printf("worst best-beta SMF / oracle ratio: %.4f\n", worst_smf_ratio);
  std::printf("ordering oracle >= smf >= nonadaptive: %s\n",
              ordering_ok ? "ok" : "VIOLATED");
  return ordering_ok ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop WPT link simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  int trials = -1;
  long long seed = -1;

  auto* run_cmd =
      app.add_subcommand("run", "Run a scenario and write per-trial CSV");
  run_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required();
  run_cmd->add_option("--trials", trials, "Override the trial count");
  run_cmd->add_option("--seed", seed, "Override the master seed");
  run_cmd->add_option("--out", out_path, "Output CSV path");

  std::string sweep_param = "beta";
  std::vector<double> sweep_values;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run a scenario across a parameter sweep");
  sweep_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required();
  sweep_cmd->add_option("--param", sweep_param,
                        "beta | noise_power_w | rms_delay_spread_ns | "
                        "mean_path_loss_db");
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--trials", trials, "Override the trial count");
  sweep_cmd->add_option("--seed", seed, "Override the master seed");
  sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();

  int oc_tones = 2;
  int oc_channels = 20;
  int oc_amp_levels = 12;
  int oc_phase_levels = 16;
  long long oc_seed = 7;
  double oc_power_dbm = 35.0;
  double oc_path_loss_db = 58.0;
  double oc_spread_ns = 200.0;
  std::vector<double> oc_betas = {0.0, 1.0, 2.0, 3.0, 4.0};
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "Compare SMF and the non-adaptive baseline against the exhaustive "
      "oracle on random channels");
  oracle_cmd->add_option("--tones", oc_tones, "Tone count (<= 4)")
      ->required()
      ->check(CLI::Range(1, 4));
  oracle_cmd->add_option("--channels", oc_channels, "Random channel draws");
  oracle_cmd->add_option("--amp-levels", oc_amp_levels,
                         "Amplitude grid levels (>= 8)");
  oracle_cmd->add_option("--phase-levels", oc_phase_levels,
                         "Phase grid levels (>= 8)");
  oracle_cmd->add_option("--seed", oc_seed, "Master seed");
  oracle_cmd->add_option("--power-dbm", oc_power_dbm, "Transmit power");
  oracle_cmd->add_option("--path-loss-db", oc_path_loss_db, "Mean path loss");
  oracle_cmd->add_option("--spread-ns", oc_spread_ns, "RMS delay spread");
  oracle_cmd->add_option("--beta-list", oc_betas, "SMF beta values")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      return do_run(scenario_path, trials, seed, out_path);
    }
    if (*sweep_cmd) {
      return do_sweep(scenario_path, sweep_param, sweep_values, trials, seed,
                      out_path);
    }
    return do_oracle_check(oc_tones, oc_channels, oc_amp_levels,
                           oc_phase_levels, oc_seed, oc_power_dbm,
                           oc_path_loss_db, oc_spread_ns, oc_betas);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
