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

#include "lteu/rates.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lteu/common.hpp"

namespace lteu {

double shannon_rate(double power_w, double gain, double noise_w, double interference_w,
                    double bandwidth_hz, bool natural_log) {
  if (power_w <= 0.0 || gain <= 0.0 || bandwidth_hz <= 0.0) return 0.0;
  const double sinr = power_w * gain / (noise_w + interference_w);
  const double nats = std::log1p(sinr);
  return bandwidth_hz * (natural_log ? nats : nats / std::numbers::ln2);
}

double licensed_rate(const power_profile& profile, const gain_matrix& gains, int user,
                     double bandwidth_hz, double noise_psd_w_hz, bool natural_log) {
  const int s = profile.serving_bs[user];
  if (s < 0) return 0.0;
  double interference = 0.0;
  for (int l = 0; l < gains.num_bs; ++l)
    if (l != s) interference += profile.bs_total_w[l] * gains.bs_gain(l, user);
  return shannon_rate(profile.user_power_w[user], gains.bs_gain(s, user),
                      noise_psd_w_hz * bandwidth_hz, interference, bandwidth_hz, natural_log);
}

double unlicensed_rate(double serving_power_w, double serving_gain,
                       std::span<const unlicensed_tx> interferers, double noise_w,
                       double bandwidth_hz, double i_th_w, bool natural_log) {
  double interference = 0.0;
  for (const auto& tx : interferers)
    if (tx.active) interference += tx.power_w * tx.gain;
  if (interference > i_th_w) return 0.0;
  return shannon_rate(serving_power_w, serving_gain, noise_w, interference, bandwidth_hz,
                      natural_log);
}

std::vector<std::uint8_t> sample_wifi_activity(rng& gen, int num_wap, double activity_prob) {
  std::vector<std::uint8_t> slots(num_wap);
  for (auto& slot : slots) slot = gen.bernoulli(activity_prob) ? 1 : 0;
  return slots;
}

double expected_rate(double alpha, double beta, std::span<const double> licensed_samples,
                     std::span<const double> unlicensed_samples) {
  auto mean = [](std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  };
  double rate = 0.0;
  if (alpha != 0.0) {
    if (licensed_samples.empty())
      throw config_error("expected_rate: licensed sample set is empty");
    rate += alpha * mean(licensed_samples);
  }
  if (beta != 0.0) {
    if (unlicensed_samples.empty())
      throw config_error("expected_rate: unlicensed sample set is empty");
    rate += beta * mean(unlicensed_samples);
  }
  return rate;
}

}  // namespace lteu
