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

#include "wpt/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpt {

void Scenario::validate() const {
  ofdm.validate();
  if (trials < 1) {
    throw std::invalid_argument("Scenario: trials must be >= 1");
  }
  if (noise_power_w < 0.0) {
    throw std::invalid_argument("Scenario: negative noise power");
  }
  if (schedule.t_ce_s < ofdm.frame_duration_s()) {
    throw std::invalid_argument(
        "Scenario: t_ce is shorter than the pilot frame");
  }
  if (schedule.t_ce_s + schedule.t_pt_s >
      schedule.slot_length_s * (1.0 + 1e-12)) {
    throw std::invalid_argument("Scenario: t_ce + t_pt exceeds the slot");
  }
  if (schedule.t_pt_s <= 0.0 || schedule.slot_length_s <= 0.0) {
    throw std::invalid_argument("Scenario: non-positive schedule times");
  }
  // tones must land on active subcarriers so CSI extraction needs no
  // interpolation
  const double df = ofdm.subcarrier_spacing_hz();
  const int half_active = ofdm.active_count() / 2;
  for (int t = 0; t < tones.count(); ++t) {
    const double offset = (tones.tone_hz(t) - ofdm.center_freq_hz) / df;
    if (std::abs(offset - std::round(offset)) > 1e-6) {
      throw std::invalid_argument(
          "Scenario: tone grid does not align to the OFDM bins");
    }
    const auto bin = static_cast<int>(std::llround(offset));
    if (bin < -half_active || bin >= half_active) {
      throw std::invalid_argument(
          "Scenario: tone grid leaves the active OFDM band");
    }
  }
}

namespace {

using nlohmann::json;

TapDelayChannel taps_from_json(const json& arr, const std::string& label) {
  std::vector<ChannelTap> taps;
  for (const auto& t : arr) {
    ChannelTap tap;
    tap.delay_s = t.value("delay_ns", 0.0) * 1e-9;
    tap.gain = cdouble(t.value("gain_re", 0.0), t.value("gain_im", 0.0));
    taps.push_back(tap);
  }
  return TapDelayChannel(std::move(taps), label);
}

void parse_channel(const json& j, Scenario& sc) {
  if (j.contains("taps")) {
    const std::string label = j.value("label", std::string("explicit"));
    sc.explicit_taps = taps_from_json(j.at("taps"), label);
    sc.channel_kind = label;
    return;
  }
  const std::string profile = j.value("profile", std::string("nlos"));
  if (profile == "flat" || profile == "los") {
    sc.profile.kind = ProfileKind::kFlat;
    sc.channel_kind = "flat";
  } else if (profile == "nlos" || profile == "exponential") {
    sc.profile.kind = ProfileKind::kExponential;
    sc.channel_kind = "nlos";
  } else {
    throw std::invalid_argument("scenario: unknown channel profile '" +
                                profile + "'");
  }
  sc.profile.tap_count = j.value("tap_count", sc.profile.tap_count);
  sc.profile.rms_delay_spread_s =
      j.value("rms_delay_spread_ns", sc.profile.rms_delay_spread_s * 1e9) *
      1e-9;
  sc.profile.mean_path_loss_db =
      j.value("mean_path_loss_db", sc.profile.mean_path_loss_db);
  sc.profile.tap_spacing_s =
      j.value("tap_spacing_ns", sc.profile.tap_spacing_s * 1e9) * 1e-9;
}

void parse_rectenna(const json& j, Scenario& sc) {
  const std::string mode = j.value("mode", std::string("polynomial"));
  if (mode == "polynomial") {
    const auto base = RectennaModel::default_polynomial();
    sc.rectenna = RectennaModel::polynomial(
        j.value("k2", base.k2()), j.value("k4", base.k4()),
        j.value("antenna_ohms", base.antenna_ohms()));
  } else if (mode == "efficiency_curve") {
    if (!j.contains("curve")) {
      sc.rectenna = RectennaModel::default_efficiency_curve();
      return;
    }
    std::vector<EfficiencyPoint> curve;
    for (const auto& pt : j.at("curve")) {
      curve.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
    }
    sc.rectenna = RectennaModel::efficiency_curve(std::move(curve));
  } else {
    throw std::invalid_argument("scenario: unknown rectenna mode '" + mode +
                                "'");
  }
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: bad JSON: ") +
                                e.what());
  }

  Scenario sc;
  try {
    if (j.contains("channel")) {
      parse_channel(j.at("channel"), sc);
    }
    if (j.contains("ofdm")) {
      const auto& o = j.at("ofdm");
      sc.ofdm.bandwidth_hz = o.value("bandwidth_hz", sc.ofdm.bandwidth_hz);
      sc.ofdm.subcarrier_count =
          o.value("subcarrier_count", sc.ofdm.subcarrier_count);
      sc.ofdm.cp_length = o.value("cp_length", sc.ofdm.cp_length);
      sc.ofdm.active_band_hz =
          o.value("active_band_hz", sc.ofdm.active_band_hz);
      sc.ofdm.pilot_symbol_count =
          o.value("pilot_symbol_count", sc.ofdm.pilot_symbol_count);
      sc.ofdm.center_freq_hz =
          o.value("center_freq_hz", sc.ofdm.center_freq_hz);
    }
    if (j.contains("tones")) {
      const auto& t = j.at("tones");
      sc.tones = ToneGrid(
          t.value("center_freq_hz", sc.ofdm.center_freq_hz),
          t.value("count", sc.tones.count()),
          t.value("spacing_hz", sc.tones.spacing_hz()));
    } else if (j.contains("ofdm")) {
      sc.tones = ToneGrid(sc.ofdm.center_freq_hz, sc.tones.count(),
                          sc.tones.spacing_hz());
    }
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      sc.smf.beta = o.value("beta", sc.smf.beta);
      if (o.contains("power_budget_w")) {
        sc.smf.power_budget_w = o.at("power_budget_w").get<double>();
      } else if (o.contains("power_budget_dbm")) {
        sc.smf.power_budget_w =
            dbm_to_watts(o.at("power_budget_dbm").get<double>());
      }
    }
    if (j.contains("rectenna")) {
      parse_rectenna(j.at("rectenna"), sc);
    }
    sc.noise_power_w = j.value("noise_power_w", sc.noise_power_w);
    if (j.contains("schedule")) {
      const auto& s = j.at("schedule");
      sc.schedule.slot_length_s =
          s.value("slot_length_s", sc.schedule.slot_length_s);
      sc.schedule.t_ce_s = s.value("t_ce_s", sc.schedule.t_ce_s);
      sc.schedule.t_pt_s = s.value(
          "t_pt_s", sc.schedule.slot_length_s - sc.schedule.t_ce_s);
    }
    sc.trials = j.value("trials", sc.trials);
    sc.seed = j.value("seed", sc.seed);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: bad field: ") +
                                e.what());
  }

  sc.validate();
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("scenario: cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace wpt
