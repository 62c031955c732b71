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

#include "lteu/options.hpp"

#include <cmath>
#include <numbers>

#include "lteu/common.hpp"

namespace lteu {
namespace {

int derived_quota(double bandwidth_hz, double nominal_sinr, double chunk_demand_bps,
                  bool natural_log) {
  if (chunk_demand_bps <= 0.0) return 0;
  double capacity = bandwidth_hz * std::log1p(nominal_sinr);
  if (!natural_log) capacity /= std::numbers::ln2;
  return static_cast<int>(std::floor(capacity / chunk_demand_bps));
}

}  // namespace

double nominal_chunk_demand_bps(const std::vector<double>& required_rates_bps,
                                std::int64_t file_bits, std::int64_t chunk_bits) {
  double sum = 0.0;
  int count = 0;
  for (double r : required_rates_bps) {
    if (r > 0.0) {
      sum += r;
      ++count;
    }
  }
  if (count == 0 || file_bits <= 0 || chunk_bits <= 0) return 0.0;
  const double chunks_per_file =
      static_cast<double>((file_bits + chunk_bits - 1) / chunk_bits);
  return (sum / count) / chunks_per_file;
}

option_menu build_option_menu(const scene_params& scene, const quota_params& quotas,
                              double chunk_demand_bps, bool natural_log) {
  if (quotas.licensed_override < 0 || quotas.unlicensed_override < 0)
    throw config_error("quota overrides must be nonnegative");
  option_menu menu;
  menu.num_bs = scene.num_bs;
  menu.licensed_channels = scene.licensed_rbs;
  menu.unlicensed_channels = scene.unlicensed_channels;

  const int q_lic = quotas.licensed_override > 0
                        ? quotas.licensed_override
                        : derived_quota(scene.rb_bandwidth_hz(), quotas.nominal_sinr_licensed,
                                        chunk_demand_bps, natural_log);
  const int q_unl = quotas.unlicensed_override > 0
                        ? quotas.unlicensed_override
                        : derived_quota(scene.unlicensed_channel_width_hz,
                                        quotas.nominal_sinr_unlicensed, chunk_demand_bps,
                                        natural_log);

  menu.options.reserve(scene.licensed_rbs + scene.num_bs * scene.unlicensed_channels);
  for (int rb = 0; rb < scene.licensed_rbs; ++rb)
    menu.options.push_back({menu.rb_owner(rb), rb, band::licensed, q_lic});
  for (int s = 0; s < scene.num_bs; ++s)
    for (int c = 0; c < scene.unlicensed_channels; ++c)
      menu.options.push_back({s, scene.licensed_rbs + c, band::unlicensed, q_unl});
  return menu;
}

}  // namespace lteu
