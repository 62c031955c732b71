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

#ifndef LTEU_SCENARIO_HPP
#define LTEU_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lteu/config.hpp"
#include "lteu/estimates.hpp"
#include "lteu/matching.hpp"
#include "lteu/options.hpp"
#include "lteu/scene.hpp"
#include "lteu/types.hpp"

namespace lteu {

enum class mechanism_kind { proposed, complete_info, uniform_price, random_alloc };
enum class sweep_kind { num_users, num_bs };

mechanism_kind mechanism_from_string(const std::string& name);
std::string to_string(mechanism_kind m);

/// How the population is composed: fully sampled from the type
/// distribution, or a sampled base plus growth users of one fixed type.
struct population_mode {
  bool grow = false;
  std::size_t grow_type = 0;  // 0-based type index
  int base_users = 200;
};

/// Complete description of an experiment: deployment, radio constants, type
/// structure, traffic, quotas, sampling effort, and the sweep protocol.
struct scenario_params {
  scene_params scene;
  radio_params radio;
  quota_params quotas;
  sampling_params sampling;
  priority_coeffs priorities;

  std::vector<double> thetas;
  std::vector<double> type_probs;
  std::vector<double> required_rates_bps;
  double eta_v = 2e-12;

  std::int64_t file_bits = 50'000'000;
  std::int64_t chunk_bits = 5'000'000;
  int num_files = 100;
  bool chunk_padding = false;  // round partial trailing chunks up to full size

  double nominal_unlicensed_acceptance = 0.5;
  bool ironing = true;

  mechanism_kind mechanism = mechanism_kind::proposed;
  sweep_kind sweep = sweep_kind::num_users;
  std::vector<long long> sweep_values{200};
  int replications = 20;
  std::uint64_t base_seed = 1;
  population_mode population;
  double slope_flatten_threshold = 0.1;
  int jobs = 0;  // 0 selects hardware concurrency

  type_grid grid() const { return {thetas, type_probs}; }
  void validate() const;

  /// Deployment-table defaults (the shipped default.cfg mirrors these).
  static scenario_params defaults();
  /// Parses and validates a keyed config; unknown keys are rejected.
  static scenario_params from_config(const keyed_config& cfg);
  /// Fully resolved echo of every parameter (replay input).
  keyed_config to_config() const;
};

}  // namespace lteu

#endif  // LTEU_SCENARIO_HPP
