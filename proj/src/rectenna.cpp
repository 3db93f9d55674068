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

#include "wpt/rectenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wpt/kernels.hpp"

namespace wpt {

RectennaModel RectennaModel::polynomial(double k2, double k4,
                                        double antenna_ohms) {
  if (k2 <= 0.0 || k4 <= 0.0) {
    throw std::invalid_argument("RectennaModel: k2 and k4 must be positive");
  }
  RectennaModel m;
  m.mode_ = RectennaMode::kPolynomial;
  m.k2_ = k2;
  m.k4_ = k4;
  m.antenna_ohms_ = antenna_ohms;
  return m;
}

RectennaModel RectennaModel::diode_polynomial(double saturation_current_a,
                                              double ideality,
                                              double thermal_voltage_v,
                                              double antenna_ohms) {
  const double nvt = ideality * thermal_voltage_v;
  const double k2 = saturation_current_a / (2.0 * nvt * nvt) * antenna_ohms;
  const double k4 = saturation_current_a / (24.0 * nvt * nvt * nvt * nvt) *
                    antenna_ohms * antenna_ohms;
  return polynomial(k2, k4, antenna_ohms);
}

RectennaModel RectennaModel::default_polynomial() {
  return diode_polynomial(5e-6, 1.05, 25.86e-3, 50.0);
}

RectennaModel RectennaModel::efficiency_curve(
    std::vector<EfficiencyPoint> curve) {
  if (curve.empty()) {
    throw std::invalid_argument("RectennaModel: empty efficiency curve");
  }
  double prev_dbm = -1e300;
  double prev_eff = -1.0;
  for (const auto& pt : curve) {
    if (pt.input_dbm <= prev_dbm || pt.efficiency < prev_eff ||
        pt.efficiency < 0.0 || pt.efficiency > 1.0) {
      throw std::invalid_argument(
          "RectennaModel: curve must be monotone with efficiencies in [0,1]");
    }
    prev_dbm = pt.input_dbm;
    prev_eff = pt.efficiency;
  }
  RectennaModel m;
  m.mode_ = RectennaMode::kEfficiencyCurve;
  m.curve_ = std::move(curve);
  return m;
}

RectennaModel RectennaModel::default_efficiency_curve() {
  // anchored at 12% for -20 dBm continuous-wave input
  return efficiency_curve({{-30.0, 0.03},
                           {-25.0, 0.07},
                           {-20.0, 0.12},
                           {-15.0, 0.18},
                           {-10.0, 0.25}});
}

double harvest_dc_polynomial(const ReceivedTones& rx,
                             const RectennaModel& model) {
  if (model.mode() != RectennaMode::kPolynomial) {
    throw std::invalid_argument(
        "harvest_dc_polynomial: model is not in polynomial mode");
  }
  const auto& r = rx.rx_weights;
  if (r.empty()) {
    throw std::invalid_argument("harvest_dc_polynomial: empty tone set");
  }
  const std::size_t n = r.size();

  double m2 = 0.0;
  for (const auto& rn : r) {
    m2 += std::norm(rn);
  }
  m2 *= 0.5;

  // On a uniform grid the balanced-frequency condition f_a + f_b = f_c +
  // f_d reduces to the index condition a + b = c + d, so the quadruple sum
  // factors through the self-convolution c_s = sum_{a+b=s} r_a r_b:
  //   sum_{a+b=c+d} r_a r_b conj(r_c) conj(r_d) = sum_s |c_s|^2.
  double quad = 0.0;
  for (std::size_t s = 0; s <= 2 * (n - 1); ++s) {
    cdouble cs{0.0, 0.0};
    const std::size_t a_lo = s >= n ? s - n + 1 : 0;
    const std::size_t a_hi = std::min(s, n - 1);
    for (std::size_t a = a_lo; a <= a_hi; ++a) {
      cs += r[a] * r[s - a];
    }
    quad += std::norm(cs);
  }
  const double m4 = (3.0 / 8.0) * quad;

  return model.k2() * m2 + model.k4() * m4;
}

double time_domain_dc_oracle(const BasebandSignal& sig,
                             const RectennaModel& model) {
  if (model.mode() != RectennaMode::kPolynomial) {
    throw std::invalid_argument(
        "time_domain_dc_oracle: model is not in polynomial mode");
  }
  if (sig.samples.empty()) {
    throw std::invalid_argument("time_domain_dc_oracle: empty signal");
  }
  const auto m = kernels::moments24(sig.samples.data(), sig.samples.size());
  const double count = static_cast<double>(sig.samples.size());
  const double mean_env2 = m.sum_sq / count;
  const double mean_env4 = m.sum_quad / count;
  return model.k2() * 0.5 * mean_env2 +
         model.k4() * (3.0 / 8.0) * mean_env4;
}

double time_domain_dc_oracle(const BasebandSignal& sig,
                             const RectennaModel& model,
                             const ToneGrid& grid) {
  if (sig.sample_rate_hz < 8.0 * grid.span_hz()) {
    throw std::invalid_argument(
        "time_domain_dc_oracle: needs >= 8x oversampling of the tone span");
  }
  const double periods = static_cast<double>(sig.samples.size()) *
                         grid.spacing_hz() / sig.sample_rate_hz;
  if (grid.count() > 1 && std::abs(periods - std::round(periods)) > 1e-6) {
    throw std::invalid_argument(
        "time_domain_dc_oracle: signal must cover whole tone-spacing periods");
  }
  return time_domain_dc_oracle(sig, model);
}

double harvest_dc_efficiency_curve(double rx_rf_power_w,
                                   const RectennaModel& model) {
  if (model.mode() != RectennaMode::kEfficiencyCurve) {
    throw std::invalid_argument(
        "harvest_dc_efficiency_curve: model is not in curve mode");
  }
  if (rx_rf_power_w < 0.0) {
    throw std::invalid_argument(
        "harvest_dc_efficiency_curve: negative input power");
  }
  if (rx_rf_power_w == 0.0) {
    return 0.0;
  }
  const auto& curve = model.curve();
  const double dbm = 10.0 * std::log10(rx_rf_power_w * 1e3);

  double eff;
  if (dbm <= curve.front().input_dbm) {
    eff = curve.front().efficiency;
  } else if (dbm >= curve.back().input_dbm) {
    eff = curve.back().efficiency;
  } else {
    std::size_t i = 1;
    while (curve[i].input_dbm < dbm) {
      ++i;
    }
    const auto& lo = curve[i - 1];
    const auto& hi = curve[i];
    const double t = (dbm - lo.input_dbm) / (hi.input_dbm - lo.input_dbm);
    eff = lo.efficiency + t * (hi.efficiency - lo.efficiency);
  }
  return rx_rf_power_w * eff;
}

}  // namespace wpt
