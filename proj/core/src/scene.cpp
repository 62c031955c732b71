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

#include "lteu/scene.hpp"

#include <cmath>

#include "lteu/common.hpp"
#include "lteu/rng.hpp"

namespace lteu {

double scene_params::noise_psd_w_hz() const {
  return std::pow(10.0, noise_psd_dbm_hz / 10.0) * 1e-3;
}

void scene_params::validate() const {
  if (area_side_m <= 0) throw config_error("area_side_m must be positive");
  if (path_loss_exponent <= 0) throw config_error("path_loss_exponent must be positive");
  if (num_bs < 0 || num_wap < 0 || num_users < 0)
    throw config_error("node counts must be nonnegative");
  if (licensed_rbs < 0 || unlicensed_channels < 0)
    throw config_error("channel counts must be nonnegative");
  if (total_bandwidth_hz <= 0) throw config_error("total_bandwidth_hz must be positive");
  if (unlicensed_channel_width_hz <= 0)
    throw config_error("unlicensed_channel_width_hz must be positive");
  if (bs_range_m <= 0 || wap_range_m <= 0)
    throw config_error("communication ranges must be positive");
}

double channel_gain(const vec2& tx, const vec2& rx, double exponent, double d_min) {
  const double d = std::max(distance(tx, rx), d_min);
  return std::pow(d, -exponent);
}

network_scene generate_scene(const scene_params& params, std::uint64_t seed) {
  params.validate();
  network_scene scene;
  scene.params = params;
  scene.seed = seed;

  rng gen(mix_seed(seed, 0x5ce7e));
  auto place = [&](int count, std::vector<vec2>& out) {
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
      const double x = gen.uniform(0.0, params.area_side_m);
      const double y = gen.uniform(0.0, params.area_side_m);
      out.push_back({x, y});
    }
  };
  place(params.num_bs, scene.bs_positions);
  place(params.num_wap, scene.wap_positions);
  place(params.num_users, scene.user_positions);
  return scene;
}

gain_matrix build_gain_matrix(const network_scene& scene) {
  gain_matrix g;
  g.num_bs = static_cast<int>(scene.bs_positions.size());
  g.num_wap = static_cast<int>(scene.wap_positions.size());
  g.num_users = static_cast<int>(scene.user_positions.size());
  g.bs_user.resize(static_cast<std::size_t>(g.num_bs) * g.num_users);
  g.wap_user.resize(static_cast<std::size_t>(g.num_wap) * g.num_users);
  const double exponent = scene.params.path_loss_exponent;
  for (int s = 0; s < g.num_bs; ++s)
    for (int u = 0; u < g.num_users; ++u)
      g.bs_user[s * g.num_users + u] =
          channel_gain(scene.bs_positions[s], scene.user_positions[u], exponent);
  for (int w = 0; w < g.num_wap; ++w)
    for (int u = 0; u < g.num_users; ++u)
      g.wap_user[w * g.num_users + u] =
          channel_gain(scene.wap_positions[w], scene.user_positions[u], exponent);
  return g;
}

}  // namespace lteu
