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

#include "lteu/power.hpp"

#include <cmath>
#include <cstddef>

#include "lteu/common.hpp"

namespace lteu {

double required_sinr(double rate_bps, double bandwidth_hz, bool natural_log) {
  if (rate_bps <= 0.0) return 0.0;
  const double x = rate_bps / bandwidth_hz;
  return natural_log ? std::expm1(x) : std::exp2(x) - 1.0;
}

power_profile solve_power_profile(const power_demand& demand, const gain_matrix& gains,
                                  double noise_psd_w_hz) {
  const std::size_t n = demand.serving_bs.size();
  if (demand.rate_bps.size() != n || demand.bandwidth_hz.size() != n)
    throw config_error("power demand vectors must have one entry per user");

  power_profile out;
  out.serving_bs = demand.serving_bs;
  out.user_power_w.assign(n, 0.0);
  out.bs_total_w.assign(gains.num_bs, 0.0);

  // Per-user constants of the power equations.
  std::vector<double> sinr(n, 0.0), noise_w(n, 0.0);
  bool any_demand = false;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = demand.serving_bs[i];
    if (s < 0 || demand.rate_bps[i] <= 0.0) continue;
    if (s >= gains.num_bs) throw config_error("serving BS index out of range");
    if (demand.bandwidth_hz[i] <= 0.0)
      throw config_error("served users need positive bandwidth");
    sinr[i] = required_sinr(demand.rate_bps[i], demand.bandwidth_hz[i], demand.natural_log);
    noise_w[i] = noise_psd_w_hz * demand.bandwidth_hz[i];
    any_demand = true;
  }
  if (!any_demand) {
    out.converged = true;
    return out;
  }

  std::vector<double> next(n, 0.0), totals(gains.num_bs, 0.0);
  bool diverged = false;
  for (out.iterations = 1; out.iterations <= demand.max_iterations; ++out.iterations) {
    double max_rel_change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = demand.serving_bs[i];
      if (s < 0 || sinr[i] == 0.0) {
        next[i] = 0.0;
        continue;
      }
      double interference = 0.0;
      for (int l = 0; l < gains.num_bs; ++l)
        if (l != s) interference += out.bs_total_w[l] * gains.bs_gain(l, static_cast<int>(i));
      const double p = sinr[i] * (noise_w[i] + interference) / gains.bs_gain(s, static_cast<int>(i));
      next[i] = p;
      const double scale = std::max(p, std::max(out.user_power_w[i], 1e-300));
      max_rel_change = std::max(max_rel_change, std::abs(p - out.user_power_w[i]) / scale);
      if (!std::isfinite(p) || p > 1e30 || p > demand.power_cap_w) diverged = true;
    }
    std::fill(totals.begin(), totals.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (demand.serving_bs[i] >= 0) totals[demand.serving_bs[i]] += next[i];
    out.user_power_w.swap(next);
    out.bs_total_w.swap(totals);
    if (diverged) break;
    if (max_rel_change <= demand.tolerance) {
      out.converged = true;
      break;
    }
  }

  // Residual against the simultaneous equations at the returned point.
  double max_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = demand.serving_bs[i];
    if (s < 0 || sinr[i] == 0.0) continue;
    double interference = 0.0;
    for (int l = 0; l < gains.num_bs; ++l)
      if (l != s) interference += out.bs_total_w[l] * gains.bs_gain(l, static_cast<int>(i));
    const double rhs = sinr[i] * (noise_w[i] + interference) / gains.bs_gain(s, static_cast<int>(i));
    const double scale = std::max(std::abs(out.user_power_w[i]), 1e-300);
    max_residual = std::max(max_residual, std::abs(out.user_power_w[i] - rhs) / scale);
  }
  out.max_residual = max_residual;
  if (diverged) out.converged = false;
  return out;
}

}  // namespace lteu
