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

#ifndef LTEU_HARNESS_HPP
#define LTEU_HARNESS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lteu/contract.hpp"
#include "lteu/matching.hpp"
#include "lteu/scenario.hpp"

namespace lteu {

/// Metrics of one replication at one sweep point.
struct experiment_record {
  long long sweep_value = 0;
  int replication = 0;
  std::uint64_t seed = 0;  // replication seed (derived, mechanism-independent)
  int num_users = 0;

  double mean_rate_bps = 0.0;
  double qos_fraction = 0.0;
  double mean_user_utility = 0.0;
  std::vector<std::int64_t> licensed_bits_by_type;
  std::vector<std::int64_t> offloaded_bits_by_type;
  std::int64_t unmatched_bits = 0;
  std::int64_t total_bits = 0;
  bool power_feasible = true;
};

/// Record plus the per-user and per-type detail the validation suites need.
struct run_detail {
  experiment_record record;
  contract_menu menu;
  std::vector<double> v_bar_nominal;   // per type, after ironing
  std::vector<double> v_bar_realized;  // per type, delivered service value
  std::vector<double> prices;          // per type
  std::vector<std::size_t> user_type;
  std::vector<char> participated;
  std::vector<char> paid;
  std::vector<double> user_rate_bps;
  std::vector<double> user_utility;
  long long proposals = 0;
};

/// One replication's assembled game: the estimator, the priced menu, the
/// proposing pairs with their preference lists, and the assignment outcome.
/// Heap-allocated because the ranking closure refers into the object.
struct matching_game {
  explicit matching_game(service_model m) : model(std::move(m)) {}

  service_model model;
  contract_menu menu;
  std::vector<double> v_bar;   // ironed interim valuations
  std::vector<double> prices;  // per type
  std::vector<user_subfile_pair> pairs;
  da_problem problem;
  da_result result;
};

/// Builds and solves the spectrum allocation game of one replication.
std::unique_ptr<matching_game> play_matching_game(const scenario_params& params,
                                                  mechanism_kind mechanism,
                                                  long long sweep_value, int replication);

/// Runs one replication of one mechanism at one sweep point. Deterministic
/// in (params, sweep_value, replication); the derived seed ignores the
/// mechanism so baselines are seed-paired.
run_detail run_single(const scenario_params& params, mechanism_kind mechanism,
                      long long sweep_value, int replication);

experiment_record run_replication(const scenario_params& params, mechanism_kind mechanism,
                                  long long sweep_value, int replication);

/// All replications at all sweep points of `params.mechanism`, run
/// concurrently, reduced in (sweep value, replication) order.
std::vector<experiment_record> run_experiment(const scenario_params& params);

/// Aggregated CSV (columns: sweep_value, metric, mean, stderr, seed).
std::string records_to_csv(const std::vector<experiment_record>& records,
                           std::uint64_t base_seed, std::size_t num_types);

/// Replay manifest: the fully resolved config plus its content hash.
std::string make_manifest(const scenario_params& params);

/// Derived per-replication seed (shared across mechanisms at matched
/// (sweep_value, replication)).
std::uint64_t replication_seed(std::uint64_t base_seed, long long sweep_value, int replication);

/// The deployment a given replication runs on (mechanism-independent).
network_scene scene_for(const scenario_params& params, long long sweep_value, int replication);

/// The population types drawn for a replication (mechanism-independent).
std::vector<std::size_t> population_for(const scenario_params& params, long long sweep_value,
                                        int replication);

/// The estimator a replication uses: scene, population and caches. Shared by
/// the pipeline and the audit commands so their sampling coincides.
service_model model_for(const scenario_params& params, mechanism_kind mechanism,
                        long long sweep_value, int replication);

/// First index k (into a sweep series) where the successive increase falls
/// below `threshold` times the largest observed increase, marking
/// saturation; -1 when the series never flattens.
int detect_flattening(const std::vector<double>& series, double threshold);

/// Fraction of users whose realized rate meets their requirement; 0 for an
/// empty population.
double compute_qos_fraction(const std::vector<double>& rates_bps,
                            const std::vector<double>& required_bps);

}  // namespace lteu

#endif  // LTEU_HARNESS_HPP
