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

#include "wpt/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wpt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kOracleMaxTones = 4;
}  // namespace

MultisineWeights smf_weights(std::span<const cdouble> h,
                             const SmfParams& params, const ToneGrid& grid) {
  if (h.size() != static_cast<std::size_t>(grid.count())) {
    throw std::invalid_argument("smf_weights: CSI length != tone count");
  }
  if (params.beta < 0.0) {
    throw std::invalid_argument("smf_weights: beta must be non-negative");
  }
  if (params.power_budget_w <= 0.0) {
    throw std::invalid_argument("smf_weights: power budget must be > 0");
  }

  bool any_nonzero = false;
  std::vector<double> amp(h.size());
  double denom = 0.0;
  for (std::size_t n = 0; n < h.size(); ++n) {
    const double a = std::abs(h[n]);
    if (a > 0.0) {
      any_nonzero = true;
    }
    amp[n] = std::pow(a, params.beta);  // pow(0, 0) == 1 covers beta == 0
    denom += amp[n] * amp[n];
  }
  if (!any_nonzero) {
    throw std::invalid_argument(
        "smf_weights: all-zero CSI leaves the waveform direction undefined");
  }

  const double scale = std::sqrt(2.0 * params.power_budget_w / denom);
  std::vector<cdouble> w(h.size());
  for (std::size_t n = 0; n < h.size(); ++n) {
    w[n] = std::polar(amp[n] * scale, -std::arg(h[n]));
  }
  return MultisineWeights(grid, std::move(w), params.power_budget_w);
}

MultisineWeights nonadaptive_weights(const ToneGrid& grid,
                                     double power_budget_w) {
  if (power_budget_w <= 0.0) {
    throw std::invalid_argument(
        "nonadaptive_weights: power budget must be > 0");
  }
  const double s =
      std::sqrt(2.0 * power_budget_w / static_cast<double>(grid.count()));
  return MultisineWeights(
      grid,
      std::vector<cdouble>(static_cast<std::size_t>(grid.count()),
                           cdouble{s, 0.0}),
      power_budget_w);
}

namespace {

// DC metric for power fractions + phases against fixed per-tone CSI.
// Small fixed-size state keeps the exhaustive search cheap.
struct OracleMetric {
  std::array<cdouble, kOracleMaxTones> h{};
  int n = 0;
  double two_p = 0.0;
  double k2 = 0.0;
  double k4 = 0.0;

  double operator()(const double* pfrac, const double* phi) const {
    std::array<cdouble, kOracleMaxTones> r{};
    double m2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = std::sqrt(two_p * std::max(pfrac[i], 0.0));
      r[static_cast<std::size_t>(i)] =
          h[static_cast<std::size_t>(i)] * std::polar(s, phi[i]);
      m2 += std::norm(r[static_cast<std::size_t>(i)]);
    }
    m2 *= 0.5;
    double quad = 0.0;
    for (int s = 0; s <= 2 * (n - 1); ++s) {
      cdouble cs{0.0, 0.0};
      const int a_lo = s >= n ? s - n + 1 : 0;
      const int a_hi = std::min(s, n - 1);
      for (int a = a_lo; a <= a_hi; ++a) {
        cs += r[static_cast<std::size_t>(a)] *
              r[static_cast<std::size_t>(s - a)];
      }
      quad += std::norm(cs);
    }
    return k2 * m2 + k4 * (3.0 / 8.0) * quad;
  }
};

// Advances a weak composition (c_0,...,c_{k-1}) of a fixed total, starting
// from (total, 0, ..., 0). Everything between the donating slot and the
// final slot is zero by construction, so the tail can be folded forward.
bool next_composition(std::vector<int>& c) {
  const std::size_t k = c.size();
  if (k <= 1) {
    return false;
  }
  for (std::size_t i = k - 1; i-- > 0;) {
    if (c[i] > 0) {
      const int tail = c[k - 1];
      c[k - 1] = 0;
      c[i] -= 1;
      c[i + 1] += tail + 1;
      return true;
    }
  }
  return false;
}

template <typename F>
double ternary_max(F&& f, double lo, double hi, double* best_x) {
  for (int it = 0; it < 72; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double x = 0.5 * (lo + hi);
  *best_x = x;
  return f(x);
}

}  // namespace

MultisineWeights oracle_optimal_weights(std::span<const cdouble> h,
                                        double power_budget_w,
                                        const RectennaModel& rect,
                                        int amp_levels, int phase_levels,
                                        const ToneGrid& grid) {
  const int n = grid.count();
  if (h.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("oracle: CSI length != tone count");
  }
  if (n > kOracleMaxTones) {
    throw std::invalid_argument(
        "oracle: exhaustive search is limited to 4 tones");
  }
  if (amp_levels < 8 || phase_levels < 8) {
    throw std::invalid_argument("oracle: need at least 8 grid levels");
  }
  if (rect.mode() != RectennaMode::kPolynomial) {
    throw std::invalid_argument("oracle: rectenna model must be polynomial");
  }
  if (power_budget_w <= 0.0) {
    throw std::invalid_argument("oracle: power budget must be > 0");
  }

  OracleMetric metric;
  metric.n = n;
  metric.two_p = 2.0 * power_budget_w;
  metric.k2 = rect.k2();
  metric.k4 = rect.k4();
  for (int i = 0; i < n; ++i) {
    metric.h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)];
  }

  std::array<double, kOracleMaxTones> best_p{};
  std::array<double, kOracleMaxTones> best_phi{};
  double best_z = -1.0;

  // grid search: power-fraction compositions x phase odometer (phi_0 = 0)
  std::vector<int> comp(static_cast<std::size_t>(n), 0);
  comp[0] = amp_levels;
  const double dphi = kTwoPi / static_cast<double>(phase_levels);
  bool more = true;
  while (more) {
    std::array<double, kOracleMaxTones> pfrac{};
    for (int i = 0; i < n; ++i) {
      pfrac[static_cast<std::size_t>(i)] =
          static_cast<double>(comp[static_cast<std::size_t>(i)]) /
          static_cast<double>(amp_levels);
    }
    std::array<int, kOracleMaxTones> digit{};
    while (true) {
      std::array<double, kOracleMaxTones> phi{};
      for (int i = 1; i < n; ++i) {
        phi[static_cast<std::size_t>(i)] =
            dphi * static_cast<double>(digit[static_cast<std::size_t>(i)]);
      }
      const double z = metric(pfrac.data(), phi.data());
      if (z > best_z) {
        best_z = z;
        best_p = pfrac;
        best_phi = phi;
      }
      int i = 1;
      for (; i < n; ++i) {
        if (++digit[static_cast<std::size_t>(i)] < phase_levels) {
          break;
        }
        digit[static_cast<std::size_t>(i)] = 0;
      }
      if (i >= n) {
        break;
      }
    }
    more = next_composition(comp);
  }

  // one local coordinate-descent pass around the winning grid point
  for (int i = 1; i < n; ++i) {
    double x = 0.0;
    auto line = [&](double v) {
      std::array<double, kOracleMaxTones> phi = best_phi;
      phi[static_cast<std::size_t>(i)] = v;
      return metric(best_p.data(), phi.data());
    };
    const double center = best_phi[static_cast<std::size_t>(i)];
    const double z = ternary_max(line, center - dphi, center + dphi, &x);
    if (z > best_z) {
      best_z = z;
      best_phi[static_cast<std::size_t>(i)] = x;
    }
  }
  const double dp = 1.0 / static_cast<double>(amp_levels);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double x = 0.0;
      auto line = [&](double t) {
        std::array<double, kOracleMaxTones> p = best_p;
        p[static_cast<std::size_t>(i)] -= t;
        p[static_cast<std::size_t>(j)] += t;
        return metric(p.data(), best_phi.data());
      };
      const double lo = -std::min(dp, best_p[static_cast<std::size_t>(j)]);
      const double hi = std::min(dp, best_p[static_cast<std::size_t>(i)]);
      const double z = ternary_max(line, lo, hi, &x);
      if (z > best_z) {
        best_z = z;
        best_p[static_cast<std::size_t>(i)] -= x;
        best_p[static_cast<std::size_t>(j)] += x;
      }
    }
  }

  double psum = 0.0;
  for (int i = 0; i < n; ++i) {
    best_p[static_cast<std::size_t>(i)] =
        std::max(best_p[static_cast<std::size_t>(i)], 0.0);
    psum += best_p[static_cast<std::size_t>(i)];
  }
  std::vector<cdouble> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = std::sqrt(2.0 * power_budget_w *
                               best_p[static_cast<std::size_t>(i)] / psum);
    w[static_cast<std::size_t>(i)] =
        std::polar(s, best_phi[static_cast<std::size_t>(i)]);
  }
  return MultisineWeights(grid, std::move(w), power_budget_w);
}

}  // namespace wpt
