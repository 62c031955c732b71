// Copyright 2026 The lteusim Authors
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

#ifndef LTEU_PRICING_HPP
#define LTEU_PRICING_HPP

#include <vector>

#include "lteu/types.hpp"

namespace lteu {

/// Weighted least-squares monotone (nondecreasing) regression,
/// pool-adjacent-violators. Used to repair sampling noise in expected
/// valuations before pricing, which requires a nondecreasing profile.
std::vector<double> iron_nondecreasing(const std::vector<double>& values,
                                       const std::vector<double>& weights);

/// Cumulative trapezoid integral of a piecewise-linear profile over the type
/// grid: out[k] = integral from thetas[0] to thetas[k].
std::vector<double> trapezoid_cumulative(const std::vector<double>& thetas,
                                         const std::vector<double>& values);

/// Revenue-maximal feasible prices for a nondecreasing expected-valuation
/// profile: price[k] = theta_k * v_bar[k] - integral(v_bar, theta_0..theta_k).
/// The lowest type pays exactly theta_0 * v_bar[0] and retains zero surplus;
/// higher types retain the integral term. Throws infeasible_error when v_bar
/// decreases somewhere (iron first).
std::vector<double> optimal_prices(const std::vector<double>& v_bar, const type_grid& grid);

}  // namespace lteu

#endif  // LTEU_PRICING_HPP
