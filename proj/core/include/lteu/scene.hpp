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

#ifndef LTEU_SCENE_HPP
#define LTEU_SCENE_HPP

#include <cstdint>
#include <vector>

#include "lteu/geometry.hpp"

namespace lteu {

/// Distance floor for the path-loss law; keeps gains finite when a
/// transmitter and receiver coincide.
inline constexpr double k_min_distance_m = 1.0;

/// Parameters of a network deployment.
struct scene_params {
  double area_side_m = 1000.0;
  int num_bs = 20;
  int num_wap = 10;
  int num_users = 200;
  double path_loss_exponent = 3.0;
  double noise_psd_dbm_hz = -174.0;
  int licensed_rbs = 120;
  int unlicensed_channels = 12;
  double bs_range_m = 200.0;
  double wap_range_m = 90.0;
  double total_bandwidth_hz = 1e9;
  double unlicensed_channel_width_hz = 20e6;

  double rb_bandwidth_hz() const {
    return licensed_rbs > 0 ? total_bandwidth_hz / licensed_rbs : 0.0;
  }
  double noise_psd_w_hz() const;
  void validate() const;  // throws config_error
};

/// A generated deployment: positions plus the parameters that produced it.
struct network_scene {
  scene_params params;
  std::uint64_t seed = 0;
  std::vector<vec2> bs_positions;
  std::vector<vec2> wap_positions;
  std::vector<vec2> user_positions;
};

/// Path gain (max(d, d_min))^-exponent between two points.
double channel_gain(const vec2& tx, const vec2& rx, double exponent,
                    double d_min = k_min_distance_m);

/// Uniform deployment in [0, side]^2; deterministic for a given seed.
network_scene generate_scene(const scene_params& params, std::uint64_t seed);

/// Linear power gains from every BS and every WAP to every user.
/// The same path-loss law applies on both bands.
struct gain_matrix {
  int num_bs = 0;
  int num_wap = 0;
  int num_users = 0;
  std::vector<double> bs_user;   // [bs * num_users + user]
  std::vector<double> wap_user;  // [wap * num_users + user]

  double bs_gain(int bs, int user) const { return bs_user[bs * num_users + user]; }
  double wap_gain(int wap, int user) const { return wap_user[wap * num_users + user]; }
};

gain_matrix build_gain_matrix(const network_scene& scene);

}  // namespace lteu

#endif  // LTEU_SCENE_HPP
