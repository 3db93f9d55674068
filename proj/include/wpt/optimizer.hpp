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

#include <span>

#include "wpt/rectenna.hpp"
#include "wpt/signal.hpp"

namespace wpt {

/// Scaled-matched-filter parameters: the concentration exponent beta and
/// the transmit power budget. beta = 0 spreads power uniformly; larger
/// beta concentrates it on strong frequency bins. Default beta = 3.
struct SmfParams {
  double beta = 3.0;
  double power_budget_w = 1.0;
};

/// Closed-form channel-adaptive weights
///   w_n = exp(-j*arg h_n) * |h_n|^beta * sqrt(2P / sum_m |h_m|^(2*beta)).
/// The result meets the power budget exactly. All-zero CSI is an error:
/// it signals estimation failure upstream.
MultisineWeights smf_weights(std::span<const cdouble> h,
                             const SmfParams& params, const ToneGrid& grid);

/// Baseline: uniform power allocation and zero phase on every tone.
MultisineWeights nonadaptive_weights(const ToneGrid& grid,
                                     double power_budget_w);

/// Exhaustive search over the amplitude simplex (power fractions in
/// amp_levels steps) times a phase grid (first tone pinned to phase zero),
/// maximizing the polynomial DC metric through the given per-tone CSI,
/// then one local coordinate-descent pass from the best grid point. Ties
/// go to the lexicographically smallest grid point. Limited to N <= 4.
MultisineWeights oracle_optimal_weights(std::span<const cdouble> h,
                                        double power_budget_w,
                                        const RectennaModel& rect,
                                        int amp_levels, int phase_levels,
                                        const ToneGrid& grid);

}  // namespace wpt
