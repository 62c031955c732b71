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

#include "lteu/pricing.hpp"

#include <cmath>

#include "lteu/common.hpp"

namespace lteu {

std::vector<double> iron_nondecreasing(const std::vector<double>& values,
                                       const std::vector<double>& weights) {
  if (values.size() != weights.size())
    throw config_error("ironing: one weight per value required");
  struct block {
    double mean;
    double weight;
    std::size_t count;
  };
  std::vector<block> blocks;
  blocks.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weights[i] > 0.0 ? weights[i] : 1e-12;
    blocks.push_back({values[i], w, 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
      const block top = blocks.back();
      blocks.pop_back();
      block& prev = blocks.back();
      const double w_sum = prev.weight + top.weight;
      prev.mean = (prev.mean * prev.weight + top.mean * top.weight) / w_sum;
      prev.weight = w_sum;
      prev.count += top.count;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.count; ++i) out.push_back(b.mean);
  return out;
}

std::vector<double> trapezoid_cumulative(const std::vector<double>& thetas,
                                         const std::vector<double>& values) {
  if (thetas.size() != values.size())
    throw config_error("trapezoid: one value per grid point required");
  std::vector<double> out(thetas.size(), 0.0);
  for (std::size_t k = 1; k < thetas.size(); ++k)
    out[k] = out[k - 1] + 0.5 * (thetas[k] - thetas[k - 1]) * (values[k] + values[k - 1]);
  return out;
}

std::vector<double> optimal_prices(const std::vector<double>& v_bar, const type_grid& grid) {
  grid.validate();
  if (v_bar.size() != grid.size())
    throw config_error("pricing: one expected valuation per type required");
  for (std::size_t k = 0; k < v_bar.size(); ++k) {
    if (!std::isfinite(v_bar[k]) || v_bar[k] < 0.0)
      throw infeasible_error("pricing: expected valuations must be finite and nonnegative");
    if (k > 0 && v_bar[k] + 1e-12 * std::abs(v_bar[k - 1]) < v_bar[k - 1])
      throw infeasible_error("pricing: expected valuations must be nondecreasing; iron first");
  }
  const std::vector<double> rent = trapezoid_cumulative(grid.thetas, v_bar);
  std::vector<double> prices(v_bar.size());
  for (std::size_t k = 0; k < v_bar.size(); ++k)
    prices[k] = grid.thetas[k] * v_bar[k] - rent[k];
  return prices;
}

}  // namespace lteu
