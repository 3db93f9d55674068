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

#include <vector>

#include "wpt/channel.hpp"
#include "wpt/signal.hpp"

namespace wpt {

enum class RectennaMode {
  kPolynomial,       // k2*E[y^2] + k4*E[y^4] diode truncation
  kEfficiencyCurve,  // measured RF-to-DC efficiency vs input power
};

struct EfficiencyPoint {
  double input_dbm = 0.0;
  double efficiency = 0.0;  // fraction in [0, 1]
};

/// Behavioral RF-to-DC harvester. Polynomial mode rewards co-phased,
/// selectively allocated tones through the fourth-order term and is the
/// mode used for waveform comparisons; curve mode maps total RF input
/// power through a measured efficiency curve and is waveform-blind.
class RectennaModel {
 public:
  static RectennaModel polynomial(double k2, double k4,
                                  double antenna_ohms = 50.0);

  /// k2/k4 from a small-signal Schottky expansion: i_s/(2(nVt)^2)*R and
  /// i_s/(24(nVt)^4)*R^2 with v = y*sqrt(R).
  static RectennaModel diode_polynomial(double saturation_current_a,
                                        double ideality,
                                        double thermal_voltage_v,
                                        double antenna_ohms);

  /// Schottky defaults: i_s = 5 uA, n = 1.05, Vt = 25.86 mV, 50 ohms.
  static RectennaModel default_polynomial();

  static RectennaModel efficiency_curve(std::vector<EfficiencyPoint> curve);

  /// Piecewise-linear curve through 12% efficiency at -20 dBm.
  static RectennaModel default_efficiency_curve();

  RectennaMode mode() const { return mode_; }
  double k2() const { return k2_; }
  double k4() const { return k4_; }
  double antenna_ohms() const { return antenna_ohms_; }
  const std::vector<EfficiencyPoint>& curve() const { return curve_; }

 private:
  RectennaModel() = default;

  RectennaMode mode_ = RectennaMode::kPolynomial;
  double k2_ = 0.0;
  double k4_ = 0.0;
  double antenna_ohms_ = 50.0;
  std::vector<EfficiencyPoint> curve_;
};

/// Closed-form DC metric for a multisine through the diode polynomial:
/// k2*M2 + k4*M4 with M2 = 0.5*sum|r_n|^2 and M4 = (3/8) * the balanced
/// fourth-order sum over tone quadruples with f_a + f_b = f_c + f_d.
/// Model units, proportional to watts.
double harvest_dc_polynomial(const ReceivedTones& rx,
                             const RectennaModel& model);

/// Numeric time-average of k2*y^2 + k4*y^4 over the sampled envelope. The
/// passband carrier moments are folded in analytically (cos^2 -> 1/2,
/// cos^4 -> 3/8; carrier cross-terms average out for a carrier far above
/// the envelope bandwidth). Needs a full-period, oversampled signal to be
/// exact; the grid-aware overload enforces that.
double time_domain_dc_oracle(const BasebandSignal& sig,
                             const RectennaModel& model);
double time_domain_dc_oracle(const BasebandSignal& sig,
                             const RectennaModel& model,
                             const ToneGrid& grid);

/// DC watts out of the efficiency curve at the given RF input power.
/// Efficiency is interpolated linearly in dBm and clamped at the ends.
double harvest_dc_efficiency_curve(double rx_rf_power_w,
                                   const RectennaModel& model);

}  // namespace wpt
