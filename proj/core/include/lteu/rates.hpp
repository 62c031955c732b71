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

#ifndef LTEU_RATES_HPP
#define LTEU_RATES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lteu/power.hpp"
#include "lteu/rng.hpp"
#include "lteu/scene.hpp"

namespace lteu {

/// w * log(1 + p*g / (noise + interference)); natural log by default,
/// log2 when `natural_log` is false.
double shannon_rate(double power_w, double gain, double noise_w, double interference_w,
                    double bandwidth_hz, bool natural_log = true);

/// Achievable licensed-band rate of `user` under a converged power profile,
/// with interference aggregated over all other BSs' transmissions.
double licensed_rate(const power_profile& profile, const gain_matrix& gains, int user,
                     double bandwidth_hz, double noise_psd_w_hz, bool natural_log = true);

/// One co-channel transmitter as seen by the receiving user.
struct unlicensed_tx {
  double power_w = 0.0;
  double gain = 0.0;
  bool active = false;
};

/// Single-slot unlicensed rate. The serving BS defers (rate 0) whenever the
/// co-channel interference at the user exceeds `i_th_w`.
double unlicensed_rate(double serving_power_w, double serving_gain,
                       std::span<const unlicensed_tx> interferers, double noise_w,
                       double bandwidth_hz, double i_th_w, bool natural_log = true);

/// Per-WAP transmission indicators for one time slot (independent Bernoulli).
std::vector<std::uint8_t> sample_wifi_activity(rng& gen, int num_wap, double activity_prob);

/// Monte-Carlo traffic-share mix: alpha * mean(licensed samples) +
/// beta * mean(unlicensed samples). Sample sets must be non-empty unless the
/// corresponding share is zero.
double expected_rate(double alpha, double beta, std::span<const double> licensed_samples,
                     std::span<const double> unlicensed_samples);

}  // namespace lteu

#endif  // LTEU_RATES_HPP
