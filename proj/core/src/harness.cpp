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

#include "lteu/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "lteu/chunks.hpp"
#include "lteu/common.hpp"
#include "lteu/feasibility.hpp"
#include "lteu/pricing.hpp"

namespace lteu {
namespace {

constexpr std::uint64_t k_tag_scene = 0x5ce17e;
constexpr std::uint64_t k_tag_types = 0x7f9e5;
constexpr std::uint64_t k_tag_model = 0x30de1;
constexpr std::uint64_t k_tag_random = 0x4a23d;

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::size_t> draw_population(const scenario_params& params, int num_users,
                                         const type_grid& grid, std::uint64_t seed) {
  rng gen = rng(seed).fork(k_tag_types);
  std::vector<std::size_t> types(num_users);
  const int base =
      params.population.grow ? std::min(num_users, params.population.base_users) : num_users;
  for (int u = 0; u < num_users; ++u)
    types[u] = u < base ? grid.sample(gen) : params.population.grow_type;
  return types;
}

/// QoS-unaware baseline: chunks pick uniformly among reachable options with
/// spare quota; no utilities, no priorities.
da_result random_assignment(const service_model& model,
                            const std::vector<user_subfile_pair>& pairs,
                            std::uint64_t seed) {
  const option_menu& menu = model.menu();
  da_result result;
  result.assignment.assign(pairs.size(), -1);
  result.accepted.assign(menu.size(), {});
  result.next_index.assign(pairs.size(), 0);

  std::vector<int> remaining(menu.size());
  for (int m = 0; m < menu.size(); ++m) remaining[m] = menu.at(m).quota;

  // Per-user reachable options: the serving BS's resource blocks plus every
  // in-range unlicensed pair.
  const int C2 = model.scene().params.unlicensed_channels;
  std::map<int, std::vector<int>> candidates_by_user;
  auto candidates_of = [&](int user) -> const std::vector<int>& {
    auto it = candidates_by_user.find(user);
    if (it != candidates_by_user.end()) return it->second;
    std::vector<int> out;
    const int s = model.serving_bs(user);
    if (s >= 0)
      for (int rb = 0; rb < menu.licensed_channels; ++rb)
        if (menu.rb_owner(rb) == s) out.push_back(rb);
    for (int bs : model.in_range_bs(user))
      for (int c = 0; c < C2; ++c) out.push_back(menu.unlicensed_option_id(bs, c));
    return candidates_by_user.emplace(user, std::move(out)).first->second;
  };

  rng gen = rng(seed).fork(k_tag_random);
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[gen.uniform_int(i)]);

  std::vector<int> open;
  for (std::size_t p : order) {
    open.clear();
    for (int m : candidates_of(pairs[p].user))
      if (remaining[m] > 0) open.push_back(m);
    if (open.empty()) continue;
    const int m = open[gen.uniform_int(open.size())];
    result.assignment[p] = m;
    result.accepted[m].push_back(static_cast<int>(p));
    --remaining[m];
  }
  return result;
}

struct signing_plan {
  std::vector<user_signing> signings;
  contract_menu menu;
  std::vector<double> prices;
};

signing_plan plan_signings(const scenario_params& params, mechanism_kind mechanism,
                           const service_model& model, const type_grid& grid,
                           const split_policy& policy, const std::vector<double>& v_bar,
                           const std::vector<std::size_t>& user_type) {
  const std::size_t K = grid.size();
  signing_plan plan;

  if (mechanism == mechanism_kind::complete_info) {
    // With requirements known there is no screening problem: the operator
    // extracts the full surplus of each type.
    plan.prices.resize(K);
    for (std::size_t k = 0; k < K; ++k) plan.prices[k] = grid.thetas[k] * v_bar[k];
  } else {
    plan.prices = optimal_prices(v_bar, grid);
  }

  plan.menu.entries.resize(K);
  for (std::size_t k = 0; k < K; ++k)
    plan.menu.entries[k] = {policy.alpha[k], policy.beta[k], plan.prices[k]};
  plan.menu.validate();

  const int n = model.num_users();
  plan.signings.assign(n, {});

  if (mechanism == mechanism_kind::complete_info) {
    // Types are known; contracts are assigned, not self-selected.
    for (int u = 0; u < n; ++u) {
      const std::size_t t = user_type[u];
      if (grid.thetas[t] * v_bar[t] - plan.prices[t] < -1e-12) continue;
      plan.signings[u] = {true, t, params.required_rates_bps[t], plan.prices[t]};
    }
    return plan;
  }

  if (mechanism == mechanism_kind::uniform_price && K > 1) {
    // Flat pricing removes the screening signal, so reported requirements
    // are uninformative and the operator provisions one pooled service
    // class: the prior-mean rate with capacity-proportional splits, at the
    // menu-average price.
    double price_sum = 0.0;
    for (double p : plan.prices) price_sum += p;
    const double uniform_price = price_sum / static_cast<double>(K);

    std::vector<double> mass(K, 0.0);
    double total_mass = 0.0;
    for (std::size_t t : user_type) {
      mass[t] += model.chunks_per_user();
      total_mass += model.chunks_per_user();
    }
    double licensed_slots = 0.0, unlicensed_slots = 0.0;
    for (const auto& opt : model.menu().options)
      (opt.b == band::licensed ? licensed_slots : unlicensed_slots) += opt.quota;
    unlicensed_slots *= params.nominal_unlicensed_acceptance;
    const double alpha_u =
        total_mass > 0.0 ? std::min(1.0, licensed_slots / total_mass) : 0.0;
    const double beta_u =
        total_mass > 0.0 ? std::min(1.0 - alpha_u, unlicensed_slots / total_mass) : 0.0;
    double rate_u = 0.0;
    if (!user_type.empty()) {
      for (std::size_t k = 0; k < K; ++k)
        rate_u += (mass[k] / std::max(total_mass, 1.0)) * params.required_rates_bps[k];
    }
    std::size_t pooled_entry = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < K; ++k) {
      const double gap = std::abs(params.required_rates_bps[k] - rate_u);
      if (gap < best_gap) {
        best_gap = gap;
        pooled_entry = k;
      }
    }
    for (std::size_t k = 0; k < K; ++k)
      plan.menu.entries[k] = {alpha_u, beta_u, uniform_price};

    std::vector<char> joins(K, 0);
    for (std::size_t k = 0; k < K; ++k) {
      const double v_est = model.pooled_type_valuation(k, alpha_u, beta_u, rate_u);
      joins[k] = grid.thetas[k] * v_est - uniform_price >= 0.0 ? 1 : 0;
    }
    for (int u = 0; u < n; ++u) {
      if (!joins[user_type[u]]) continue;
      plan.signings[u] = {true, pooled_entry, rate_u, uniform_price};
    }
    return plan;
  }

  // Self-selection over the menu: each type takes the entry maximizing its
  // interim surplus, or declines when every entry is a loss. Ties keep the
  // own entry, so the screening prices resolve to truthful selection.
  std::vector<std::size_t> choice(K, 0);
  std::vector<char> joins(K, 0);
  for (std::size_t t = 0; t < K; ++t) {
    double best = grid.thetas[t] * v_bar[t] - plan.prices[t];
    std::size_t best_j = t;
    for (std::size_t j = 0; j < K; ++j) {
      if (j == t) continue;
      const double u_est = grid.thetas[t] * v_bar[j] - plan.prices[j];
      if (u_est > best + 1e-9 * std::max(1.0, std::abs(best))) {
        best = u_est;
        best_j = j;
      }
    }
    joins[t] = best >= -1e-12 * std::max(1.0, std::abs(best)) ? 1 : 0;
    choice[t] = best_j;
  }
  for (int u = 0; u < n; ++u) {
    const std::size_t t = user_type[u];
    if (!joins[t]) continue;
    const std::size_t j = choice[t];
    plan.signings[u] = {true, j, params.required_rates_bps[j], plan.prices[j]};
  }
  return plan;
}

}  // namespace

std::uint64_t replication_seed(std::uint64_t base_seed, long long sweep_value,
                               int replication) {
  return mix_seed(mix_seed(base_seed, static_cast<std::uint64_t>(sweep_value)),
                  static_cast<std::uint64_t>(replication) + 0x517ull);
}

network_scene scene_for(const scenario_params& params, long long sweep_value,
                        int replication) {
  scene_params sp = params.scene;
  if (params.sweep == sweep_kind::num_users)
    sp.num_users = static_cast<int>(sweep_value);
  else
    sp.num_bs = static_cast<int>(sweep_value);
  const std::uint64_t seed = replication_seed(params.base_seed, sweep_value, replication);
  return generate_scene(sp, mix_seed(seed, k_tag_scene));
}

std::vector<std::size_t> population_for(const scenario_params& params, long long sweep_value,
                                        int replication) {
  const int n = params.sweep == sweep_kind::num_users ? static_cast<int>(sweep_value)
                                                      : params.scene.num_users;
  return draw_population(params, n, params.grid(),
                         replication_seed(params.base_seed, sweep_value, replication));
}

service_model model_for(const scenario_params& params, mechanism_kind mechanism,
                        long long sweep_value, int replication) {
  const network_scene scene = scene_for(params, sweep_value, replication);
  const std::uint64_t seed = replication_seed(params.base_seed, sweep_value, replication);
  service_model::inputs in;
  in.scene = scene;
  in.grid = params.grid();
  in.required_rate_by_type = params.required_rates_bps;
  in.eta_v = params.eta_v;
  in.radio = params.radio;
  in.sampling = params.sampling;
  in.menu = build_option_menu(
      scene.params, params.quotas,
      nominal_chunk_demand_bps(params.required_rates_bps, params.file_bits, params.chunk_bits),
      params.radio.natural_log);
  in.user_type = population_for(params, sweep_value, replication);
  in.file_bits = params.file_bits;
  in.chunk_bits = params.chunk_bits;
  in.realized_cost_profile = mechanism == mechanism_kind::complete_info;
  in.seed = mix_seed(seed, k_tag_model);
  return service_model(std::move(in));
}

std::unique_ptr<matching_game> play_matching_game(const scenario_params& params,
                                                  mechanism_kind mechanism,
                                                  long long sweep_value, int replication) {
  params.validate();
  const std::uint64_t seed = replication_seed(params.base_seed, sweep_value, replication);
  const type_grid grid = params.grid();
  const std::size_t K = grid.size();

  auto game = std::make_unique<matching_game>(
      model_for(params, mechanism, sweep_value, replication));
  service_model& model = game->model;
  const option_menu& menu = model.menu();
  const int n = model.num_users();

  std::vector<std::size_t> user_type(n);
  for (int u = 0; u < n; ++u) user_type[u] = model.user_type(u);

  // Interim valuations under the capacity-greedy policy, ironed monotone.
  const split_policy policy = model.nominal_policy(params.nominal_unlicensed_acceptance);
  const std::vector<double> v_raw = model.v_bar_under(policy);
  std::vector<double> weights(K, 1e-9);
  for (std::size_t t : user_type) weights[t] += 1.0;
  game->v_bar = params.ironing ? iron_nondecreasing(v_raw, weights) : v_raw;

  signing_plan plan =
      plan_signings(params, mechanism, model, grid, policy, game->v_bar, user_type);
  game->menu = plan.menu;
  game->prices = plan.prices;
  model.set_signings(plan.signings);

  // One proposing pair per chunk; preferences are shared per user.
  std::vector<file_request> requests(n);
  for (int u = 0; u < n; ++u)
    requests[u] = {u, params.num_files > 0 ? u % params.num_files : 0, params.file_bits,
                   user_type[u]};
  game->pairs = chunk_files(requests, params.chunk_bits, params.chunk_padding);

  std::vector<std::vector<int>> prefs_by_user(n);
  for (int u = 0; u < n; ++u) {
    user_subfile_pair probe;
    probe.user = u;
    probe.type = user_type[u];
    prefs_by_user[u] = model.build_preference_list(probe);
  }
  for (auto& pair : game->pairs) pair.pref_list = prefs_by_user[pair.user];

  game->problem.prefs.reserve(game->pairs.size());
  for (const auto& pair : game->pairs) game->problem.prefs.push_back(pair.pref_list);
  game->problem.quotas.resize(menu.size());
  for (int m = 0; m < menu.size(); ++m) game->problem.quotas[m] = menu.at(m).quota;
  game->problem.rank = make_bs_ranker(game->model, game->pairs, params.priorities);

  game->result = mechanism == mechanism_kind::random_alloc
                     ? random_assignment(model, game->pairs, seed)
                     : deferred_acceptance(game->problem);
  return game;
}

run_detail run_single(const scenario_params& params, mechanism_kind mechanism,
                      long long sweep_value, int replication) {
  const std::uint64_t seed = replication_seed(params.base_seed, sweep_value, replication);
  const type_grid grid = params.grid();
  const std::size_t K = grid.size();

  const std::unique_ptr<matching_game> game =
      play_matching_game(params, mechanism, sweep_value, replication);
  const service_model& model = game->model;
  const option_menu& menu = model.menu();
  const scene_params& sp = model.scene().params;
  const int n = model.num_users();
  const std::vector<user_subfile_pair>& pairs = game->pairs;
  const da_result& result = game->result;

  run_detail detail;
  detail.record.sweep_value = sweep_value;
  detail.record.replication = replication;
  detail.record.seed = seed;
  detail.record.num_users = n;
  detail.record.licensed_bits_by_type.assign(K, 0);
  detail.record.offloaded_bits_by_type.assign(K, 0);
  detail.user_type.resize(n);
  for (int u = 0; u < n; ++u) detail.user_type[u] = model.user_type(u);
  detail.v_bar_nominal = game->v_bar;
  detail.menu = game->menu;
  detail.prices = game->prices;
  detail.proposals = result.proposals;
  detail.participated.assign(n, 0);
  for (int u = 0; u < n; ++u) detail.participated[u] = model.signing(u).participates ? 1 : 0;

  // Realized service.
  const std::vector<realized_allocation> alloc =
      matching_to_allocation(result, pairs, menu, n);

  std::vector<double> licensed_target(n, 0.0);
  for (int u = 0; u < n; ++u)
    licensed_target[u] = alloc[u].alpha * model.signing(u).claimed_rate_bps;
  const power_profile profile = model.realized_power(licensed_target);
  detail.record.power_feasible = profile.converged;

  const int C2 = sp.unlicensed_channels;
  std::vector<std::vector<char>> active(std::max(C2, 1),
                                        std::vector<char>(std::max(sp.num_bs, 1), 0));
  for (int m = 0; m < menu.size(); ++m) {
    if (menu.licensed(m) || result.accepted[m].empty()) continue;
    active[menu.unlicensed_channel_of(m)][menu.at(m).bs] = 1;
  }

  std::map<std::pair<int, int>, double> kappa_cache;  // (user, option) -> rate
  auto kappa_of = [&](int user, int m) {
    const auto key = std::make_pair(user, m);
    auto it = kappa_cache.find(key);
    if (it != kappa_cache.end()) return it->second;
    const int c = menu.unlicensed_channel_of(m);
    const double k =
        model.kappa_realized(user, menu.at(m).bs, c, active[c],
                             mix_seed(static_cast<std::uint64_t>(user), m));
    kappa_cache.emplace(key, k);
    return k;
  };

  detail.user_rate_bps.assign(n, 0.0);
  std::vector<char> matched_any(n, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int m = result.assignment[p];
    if (m < 0) continue;
    matched_any[pairs[p].user] = 1;
    if (!menu.licensed(m)) {
      const double share = static_cast<double>(pairs[p].bits) /
                           static_cast<double>(alloc[pairs[p].user].total_bits);
      detail.user_rate_bps[pairs[p].user] += share * kappa_of(pairs[p].user, m);
    }
  }
  for (int u = 0; u < n; ++u)
    if (detail.record.power_feasible) detail.user_rate_bps[u] += licensed_target[u];

  detail.paid.assign(n, 0);
  detail.user_utility.assign(n, 0.0);
  std::vector<double> required(n, 0.0);
  double rate_sum = 0.0, utility_sum = 0.0;
  for (int u = 0; u < n; ++u) {
    const std::size_t t = detail.user_type[u];
    required[u] = params.required_rates_bps[t];
    const double rate = detail.user_rate_bps[u];
    rate_sum += rate;
    const bool pays = detail.participated[u] && matched_any[u];
    detail.paid[u] = pays ? 1 : 0;
    const auto vp = valuation_params::with_default_offset(params.eta_v, required[u]);
    detail.user_utility[u] =
        grid.thetas[t] * valuation(rate, vp) - (pays ? model.signing(u).price : 0.0);
    utility_sum += detail.user_utility[u];
  }
  if (n > 0) {
    detail.record.mean_rate_bps = rate_sum / n;
    detail.record.qos_fraction = compute_qos_fraction(detail.user_rate_bps, required);
    detail.record.mean_user_utility = utility_sum / n;
  }

  for (int u = 0; u < n; ++u) {
    detail.record.licensed_bits_by_type[detail.user_type[u]] += alloc[u].licensed_bits;
    detail.record.offloaded_bits_by_type[detail.user_type[u]] += alloc[u].unlicensed_bits;
    detail.record.total_bits += alloc[u].total_bits;
    detail.record.unmatched_bits +=
        alloc[u].total_bits - alloc[u].licensed_bits - alloc[u].unlicensed_bits;
  }

  // Delivered service value per menu entry, for incentive validation.
  detail.v_bar_realized = game->v_bar;
  std::vector<double> value_sum(K, 0.0);
  std::vector<int> value_count(K, 0);
  for (int u = 0; u < n; ++u) {
    if (!detail.participated[u]) continue;
    const std::size_t j = model.signing(u).claimed_entry;
    const auto vp = valuation_params::with_default_offset(params.eta_v,
                                                          params.required_rates_bps[j]);
    value_sum[j] += valuation(detail.user_rate_bps[u], vp);
    ++value_count[j];
  }
  for (std::size_t k = 0; k < K; ++k)
    if (value_count[k] > 0) detail.v_bar_realized[k] = value_sum[k] / value_count[k];

  return detail;
}

experiment_record run_replication(const scenario_params& params, mechanism_kind mechanism,
                                  long long sweep_value, int replication) {
  return run_single(params, mechanism, sweep_value, replication).record;
}

std::vector<experiment_record> run_experiment(const scenario_params& params) {
  params.validate();
  struct job {
    long long sweep_value;
    int replication;
  };
  std::vector<job> jobs;
  for (long long v : params.sweep_values)
    for (int r = 0; r < params.replications; ++r) jobs.push_back({v, r});

  std::vector<experiment_record> records(jobs.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
      jobs.size(), params.jobs > 0 ? static_cast<unsigned>(params.jobs) : hw));

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        records[i] = run_replication(params, params.mechanism, jobs[i].sweep_value,
                                     jobs[i].replication);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (error.empty()) error = e.what();
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw infeasible_error("experiment failed: " + error);
  return records;
}

std::string records_to_csv(const std::vector<experiment_record>& records,
                           std::uint64_t base_seed, std::size_t num_types) {
  // Aggregate by sweep value, preserving first-seen order.
  std::vector<long long> order;
  std::map<long long, std::vector<const experiment_record*>> by_sweep;
  for (const auto& rec : records) {
    if (!by_sweep.count(rec.sweep_value)) order.push_back(rec.sweep_value);
    by_sweep[rec.sweep_value].push_back(&rec);
  }

  std::string csv = "sweep_value,metric,mean,stderr,seed\n";
  auto emit = [&](long long sweep, const std::string& metric,
                  const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double stderr_v =
        values.size() > 1 ? std::sqrt(var / (values.size() - 1)) /
                                std::sqrt(static_cast<double>(values.size()))
                          : 0.0;
    csv += std::to_string(sweep) + "," + metric + "," + format_g17(mean) + "," +
           format_g17(stderr_v) + "," + std::to_string(base_seed) + "\n";
  };

  for (long long sweep : order) {
    const auto& recs = by_sweep[sweep];
    auto collect = [&](auto&& get) {
      std::vector<double> xs;
      xs.reserve(recs.size());
      for (const auto* r : recs) xs.push_back(get(*r));
      return xs;
    };
    emit(sweep, "mean_rate_bps", collect([](const auto& r) { return r.mean_rate_bps; }));
    emit(sweep, "qos_fraction", collect([](const auto& r) { return r.qos_fraction; }));
    emit(sweep, "mean_user_utility",
         collect([](const auto& r) { return r.mean_user_utility; }));
    for (std::size_t k = 0; k < num_types; ++k) {
      emit(sweep, "licensed_bits_type_" + std::to_string(k + 1),
           collect([k](const auto& r) {
             return static_cast<double>(r.licensed_bits_by_type[k]);
           }));
      emit(sweep, "offloaded_bits_type_" + std::to_string(k + 1),
           collect([k](const auto& r) {
             return static_cast<double>(r.offloaded_bits_by_type[k]);
           }));
    }
    emit(sweep, "unmatched_bits",
         collect([](const auto& r) { return static_cast<double>(r.unmatched_bits); }));
    emit(sweep, "total_bits",
         collect([](const auto& r) { return static_cast<double>(r.total_bits); }));
  }
  return csv;
}

double compute_qos_fraction(const std::vector<double>& rates_bps,
                            const std::vector<double>& required_bps) {
  if (rates_bps.size() != required_bps.size())
    throw config_error("qos fraction: one requirement per rate expected");
  if (rates_bps.empty()) return 0.0;
  int met = 0;
  for (std::size_t i = 0; i < rates_bps.size(); ++i)
    if (rates_bps[i] >= required_bps[i]) ++met;
  return static_cast<double>(met) / static_cast<double>(rates_bps.size());
}

int detect_flattening(const std::vector<double>& series, double threshold) {
  if (series.size() < 2) return -1;
  std::vector<double> diffs(series.size() - 1);
  double max_diff = 0.0;
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    diffs[k] = series[k + 1] - series[k];
    max_diff = std::max(max_diff, diffs[k]);
  }
  if (max_diff <= 0.0) return 0;  // never grows
  int last_rising = -1;
  for (std::size_t k = 0; k < diffs.size(); ++k)
    if (diffs[k] >= threshold * max_diff) last_rising = static_cast<int>(k);
  if (last_rising == static_cast<int>(diffs.size()) - 1) return -1;  // still rising
  return last_rising + 1;
}

}  // namespace lteu
