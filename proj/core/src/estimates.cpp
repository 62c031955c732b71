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

#include "lteu/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "lteu/common.hpp"

namespace lteu {
namespace {

constexpr std::uint64_t k_tag_cost_draw = 0xc057;
constexpr std::uint64_t k_tag_kappa = 0x4a77a;
constexpr std::uint64_t k_tag_vbar = 0x7ba4;

}  // namespace

service_model::service_model(inputs in) : in_(std::move(in)) {
  in_.grid.validate();
  if (in_.required_rate_by_type.size() != in_.grid.size())
    throw config_error("service model: one required rate per type expected");
  if (in_.eta_v <= 0.0) throw config_error("service model: eta_v must be positive");
  for (std::size_t t : in_.user_type)
    if (t >= in_.grid.size()) throw config_error("service model: user type out of range");

  gains_ = build_gain_matrix(in_.scene);
  i_th_w_ = in_.radio.derived_i_th(in_.scene.params);
  noise_psd_ = in_.scene.params.noise_psd_w_hz();
  sigma2_unl_w_ = noise_psd_ * in_.scene.params.unlicensed_channel_width_hz;
  chunks_per_user_ =
      in_.file_bits > 0 && in_.chunk_bits > 0
          ? static_cast<int>((in_.file_bits + in_.chunk_bits - 1) / in_.chunk_bits)
          : 1;

  const int n = num_users();
  const int S = in_.scene.params.num_bs;
  const int C2 = in_.scene.params.unlicensed_channels;

  serving_bs_.assign(n, -1);
  in_range_.assign(n, {});
  in_range_index_.assign(static_cast<std::size_t>(n) * std::max(S, 1), -1);
  for (int u = 0; u < n; ++u) {
    double best_gain = 0.0;
    for (int s = 0; s < S; ++s) {
      if (distance(in_.scene.bs_positions[s], in_.scene.user_positions[u]) >
          in_.scene.params.bs_range_m)
        continue;
      in_range_index_[static_cast<std::size_t>(u) * S + s] =
          static_cast<int>(in_range_[u].size());
      in_range_[u].push_back(s);
      const double g = gains_.bs_gain(s, u);
      if (g > best_gain) {
        best_gain = g;
        serving_bs_[u] = s;
      }
    }
  }

  rbs_owned_.assign(std::max(S, 1), 0);
  for (int rb = 0; rb < in_.menu.licensed_channels; ++rb) ++rbs_owned_[in_.menu.rb_owner(rb)];

  // Co-channel BS duty for pre-matching estimates: configured, or derived
  // from the chunk mass expected to overflow onto the unlicensed channels.
  if (in_.radio.nominal_bs_activity >= 0.0) {
    bs_activity_ = std::min(in_.radio.nominal_bs_activity, 1.0);
  } else {
    double licensed_slots_total = 0.0, unlicensed_slots_total = 0.0;
    int unl_options = 0;
    for (const auto& opt : in_.menu.options) {
      if (opt.b == band::licensed) {
        licensed_slots_total += opt.quota;
      } else {
        unlicensed_slots_total += opt.quota;
        ++unl_options;
      }
    }
    const double total_chunks = static_cast<double>(n) * chunks_per_user_;
    const double overflow = std::clamp(total_chunks - licensed_slots_total, 0.0,
                                       std::max(unlicensed_slots_total, 0.0));
    bs_activity_ =
        unl_options > 0 ? 1.0 - std::exp(-overflow / unl_options) : 0.0;
  }

  // Nominal per-user licensed bandwidth: the owner BS's band split across
  // the licensed users it is expected to serve.
  double licensed_slots = 0.0;
  for (const auto& opt : in_.menu.options)
    if (opt.b == band::licensed) licensed_slots += opt.quota;
  const double expected_lic_users =
      std::min<double>(n, licensed_slots / std::max(1, chunks_per_user_));
  const double users_per_bs = std::max(1.0, expected_lic_users / std::max(1, S));
  const double rb_bw = in_.scene.params.rb_bandwidth_hz();
  nominal_bw_.assign(n, rb_bw);
  for (int u = 0; u < n; ++u) {
    const int s = serving_bs_[u];
    if (s >= 0 && rbs_owned_[s] > 0) nominal_bw_[u] = rb_bw * rbs_owned_[s] / users_per_bs;
  }

  // Expected per-BS licensed power, for interim cost estimates.
  mean_bs_total_w_.assign(std::max(S, 1), 0.0);
  if (n > 0 && S > 0) {
    const int draws = in_.realized_cost_profile ? 1 : std::max(1, in_.sampling.cost_draws);
    rng draw_rng = rng(in_.seed).fork(k_tag_cost_draw);
    int used = 0;
    for (int d = 0; d < draws; ++d) {
      power_demand demand;
      demand.serving_bs = serving_bs_;
      demand.bandwidth_hz = nominal_bw_;
      demand.natural_log = in_.radio.natural_log;
      demand.power_cap_w = in_.radio.power_cap_w;
      demand.rate_bps.resize(n);
      for (int u = 0; u < n; ++u) {
        const std::size_t t =
            in_.realized_cost_profile ? in_.user_type[u] : in_.grid.sample(draw_rng);
        demand.rate_bps[u] = in_.required_rate_by_type[t];
      }
      const power_profile profile = solve_power_profile(demand, gains_, noise_psd_);
      if (!profile.converged) continue;
      for (int s = 0; s < S; ++s) mean_bs_total_w_[s] += profile.bs_total_w[s];
      ++used;
    }
    if (used > 0)
      for (double& p : mean_bs_total_w_) p /= used;
  }

  // Expected unlicensed rate per (user, in-range BS, channel).
  kappa_.assign(n, {});
  for (int u = 0; u < n; ++u) {
    kappa_[u].assign(in_range_[u].size() * std::max(C2, 1), 0.0);
    for (std::size_t idx = 0; idx < in_range_[u].size(); ++idx)
      for (int c = 0; c < C2; ++c)
        kappa_[u][idx * C2 + c] =
            kappa_expectation(u, in_range_[u][idx], c, nullptr,
                              mix_seed(static_cast<std::uint64_t>(u) * 8191 + idx, c));
  }

  signings_.assign(n, {});
}

void service_model::set_signings(std::vector<user_signing> signings) {
  if (signings.size() != static_cast<std::size_t>(num_users()))
    throw config_error("one signing per user expected");
  signings_ = std::move(signings);
}

double service_model::kappa_expectation(int user, int bs, int channel,
                                        const std::vector<char>* bs_active,
                                        std::uint64_t salt) const {
  const int C2 = in_.scene.params.unlicensed_channels;
  if (C2 == 0 || bs < 0) return 0.0;
  const double width = in_.scene.params.unlicensed_channel_width_hz;
  rng gen = rng(in_.seed).fork(mix_seed(k_tag_kappa, salt));
  const int slots = std::max(1, in_.sampling.activity_slots);
  const double serving_gain = gains_.bs_gain(bs, user);

  double total = 0.0;
  for (int slot = 0; slot < slots; ++slot) {
    double interference = 0.0;
    for (int w = 0; w < gains_.num_wap; ++w) {
      const bool on_channel = (w % C2) == channel;
      const bool active = gen.bernoulli(in_.radio.wifi_activity_prob);
      if (on_channel && active)
        interference += in_.radio.wap_tx_power_w * gains_.wap_gain(w, user);
    }
    for (int l = 0; l < gains_.num_bs; ++l) {
      if (l == bs) continue;
      const bool active = bs_active ? (*bs_active)[l] != 0
                                    : gen.bernoulli(bs_activity_);
      if (active) interference += in_.radio.unlicensed_tx_power_w * gains_.bs_gain(l, user);
    }
    if (interference <= i_th_w_)
      total += shannon_rate(in_.radio.unlicensed_tx_power_w, serving_gain, sigma2_unl_w_,
                            interference, width, in_.radio.natural_log);
  }
  return total / slots;
}

double service_model::kappa_nominal(int user, int bs, int channel) const {
  const int C2 = in_.scene.params.unlicensed_channels;
  const int idx = in_range_index_[static_cast<std::size_t>(user) * in_.scene.params.num_bs + bs];
  if (idx >= 0) return kappa_[user][idx * C2 + channel];
  return kappa_expectation(user, bs, channel,
                           nullptr, mix_seed(static_cast<std::uint64_t>(user) * 8191, channel));
}

double service_model::kappa_realized(int user, int bs, int channel,
                                     const std::vector<char>& bs_active,
                                     std::uint64_t salt) const {
  return kappa_expectation(user, bs, channel, &bs_active, mix_seed(salt, 0x5ea1));
}

double service_model::option_utility(int user, int option) const {
  const user_signing& sg = signings_[user];
  if (!sg.participates) return -1.0;
  const bs_channel_pair& opt = in_.menu.at(option);
  double delivered = 0.0;
  if (opt.b == band::licensed) {
    delivered = sg.claimed_rate_bps;
  } else {
    delivered = kappa_nominal(user, opt.bs, in_.menu.unlicensed_channel_of(option));
  }
  const std::size_t t = in_.user_type[user];
  const auto vp =
      valuation_params::with_default_offset(in_.eta_v, in_.required_rate_by_type[t]);
  return in_.grid.thetas[t] * valuation(delivered, vp) - sg.price;
}

std::vector<int> service_model::build_preference_list(const user_subfile_pair& pair) const {
  const int u = pair.user;
  if (!signings_[u].participates) return {};
  std::vector<std::pair<double, int>> scored;
  const int s = serving_bs_[u];
  if (s >= 0) {
    for (int rb = 0; rb < in_.menu.licensed_channels; ++rb)
      if (in_.menu.rb_owner(rb) == s) scored.emplace_back(option_utility(u, rb), rb);
  }
  const int C2 = in_.scene.params.unlicensed_channels;
  for (int bs : in_range_[u])
    for (int c = 0; c < C2; ++c) {
      const int id = in_.menu.unlicensed_option_id(bs, c);
      scored.emplace_back(option_utility(u, id), id);
    }
  std::erase_if(scored, [](const auto& e) { return e.first < 0.0; });
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> prefs;
  prefs.reserve(scored.size());
  for (const auto& [utility, id] : scored) prefs.push_back(id);
  return prefs;
}

double service_model::chunk_cost(int user, int option) const {
  const bs_channel_pair& opt = in_.menu.at(option);
  if (opt.b == band::unlicensed)
    return in_.radio.unlicensed_tx_power_w * in_.radio.cost_per_watt /
           std::max(1, opt.quota);
  const int s = opt.bs;
  const double sinr =
      required_sinr(signings_[user].claimed_rate_bps, nominal_bw_[user], in_.radio.natural_log);
  if (sinr == 0.0) return 0.0;
  double interference = 0.0;
  for (int l = 0; l < gains_.num_bs; ++l)
    if (l != s) interference += mean_bs_total_w_[l] * gains_.bs_gain(l, user);
  const double power =
      sinr * (noise_psd_ * nominal_bw_[user] + interference) / gains_.bs_gain(s, user);
  return power * in_.radio.cost_per_watt / std::max(1, chunks_per_user_);
}

double service_model::e_gamma(int user, int option) const {
  return signings_[user].price / std::max(1, chunks_per_user_) - chunk_cost(user, option);
}

double service_model::bs_utility(int user, int option, bool resemblance,
                                 double priority_coeff) const {
  if (resemblance) return e_gamma(user, option);
  const double theta = in_.grid.thetas[signings_[user].claimed_entry];
  if (theta * priority_coeff <= 0.0)
    throw config_error("bs utility: claimed theta times priority coefficient must be positive");
  return e_gamma(user, option) + chunk_cost(user, option) / (theta * priority_coeff);
}

double service_model::expected_mix_valuation(int user, const valuation_params& vp,
                                             double alpha, double beta,
                                             double licensed_rate_bps, int samples,
                                             std::uint64_t seed) const {
  if (samples < 1) throw config_error("expected valuation: samples must be >= 1");
  const int s = serving_bs_[user];
  const double lic_part = s >= 0 ? alpha * licensed_rate_bps : 0.0;
  const int C2 = in_.scene.params.unlicensed_channels;
  if (beta == 0.0 || s < 0 || C2 == 0) return valuation(lic_part, vp);

  rng gen = rng(in_.seed).fork(mix_seed(seed, static_cast<std::uint64_t>(user) + 0xa10));
  const double width = in_.scene.params.unlicensed_channel_width_hz;
  const double serving_gain = gains_.bs_gain(s, user);
  double total = 0.0;
  for (int slot = 0; slot < samples; ++slot) {
    const int channel = slot % C2;
    double interference = 0.0;
    for (int w = 0; w < gains_.num_wap; ++w) {
      const bool on_channel = (w % C2) == channel;
      const bool active = gen.bernoulli(in_.radio.wifi_activity_prob);
      if (on_channel && active)
        interference += in_.radio.wap_tx_power_w * gains_.wap_gain(w, user);
    }
    for (int l = 0; l < gains_.num_bs; ++l) {
      if (l == s) continue;
      if (gen.bernoulli(bs_activity_))
        interference += in_.radio.unlicensed_tx_power_w * gains_.bs_gain(l, user);
    }
    double kappa = 0.0;
    if (interference <= i_th_w_)
      kappa = shannon_rate(in_.radio.unlicensed_tx_power_w, serving_gain, sigma2_unl_w_,
                           interference, width, in_.radio.natural_log);
    total += valuation(lic_part + beta * kappa, vp);
  }
  return total / samples;
}

double service_model::expected_valuation(int user, std::size_t type_index, double alpha,
                                         double beta, int samples, std::uint64_t seed) const {
  const double r = in_.required_rate_by_type[type_index];
  const auto vp = valuation_params::with_default_offset(in_.eta_v, r);
  return expected_mix_valuation(user, vp, alpha, beta, r, samples, seed);
}

double service_model::serving_cost(const std::vector<std::size_t>& type_profile,
                                   int user) const {
  if (type_profile.size() != static_cast<std::size_t>(num_users()))
    throw config_error("serving cost: one type per user expected");
  power_demand demand;
  demand.serving_bs = serving_bs_;
  demand.bandwidth_hz = nominal_bw_;
  demand.natural_log = in_.radio.natural_log;
  demand.power_cap_w = in_.radio.power_cap_w;
  demand.rate_bps.resize(num_users());
  for (int u = 0; u < num_users(); ++u)
    demand.rate_bps[u] = in_.required_rate_by_type[type_profile[u]];
  const power_profile profile = solve_power_profile(demand, gains_, noise_psd_);
  if (!profile.converged)
    throw infeasible_error("serving cost: rate demands are mutually unsupportable");
  return profile.user_power_w[user] * in_.radio.cost_per_watt;
}

split_policy service_model::nominal_policy(double unlicensed_acceptance) const {
  const std::size_t K = in_.grid.size();
  const int S = std::max(in_.scene.params.num_bs, 1);
  split_policy policy;
  policy.alpha.assign(K, 0.0);
  policy.beta.assign(K, 0.0);

  std::vector<double> mass(K, 0.0);
  for (std::size_t t : in_.user_type) mass[t] += chunks_per_user_;

  // Licensed service is local to the serving BS, so the greedy fill runs
  // cell by cell: each cell's blocks go to its own highest types first.
  double licensed_quota_per_rb = 0.0;
  double unlicensed_left = 0.0;
  for (const auto& opt : in_.menu.options) {
    if (opt.b == band::licensed)
      licensed_quota_per_rb = opt.quota;  // uniform across blocks
    else
      unlicensed_left += opt.quota;
  }
  unlicensed_left *= std::clamp(unlicensed_acceptance, 0.0, 1.0);

  std::vector<std::vector<double>> local_mass(S, std::vector<double>(K, 0.0));
  for (int u = 0; u < num_users(); ++u)
    if (serving_bs_[u] >= 0) local_mass[serving_bs_[u]][in_.user_type[u]] += chunks_per_user_;

  std::vector<double> licensed_take(K, 0.0);
  for (int s = 0; s < S; ++s) {
    double slots = rbs_owned_[s] * licensed_quota_per_rb;
    for (std::size_t k = K; k-- > 0 && slots > 0.0;) {
      const double take = std::min(local_mass[s][k], slots);
      licensed_take[k] += take;
      slots -= take;
    }
  }
  std::vector<double> remainder(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    if (mass[k] <= 0.0) continue;
    policy.alpha[k] = licensed_take[k] / mass[k];
    remainder[k] = mass[k] - licensed_take[k];
  }
  for (std::size_t k = K; k-- > 0;) {
    if (mass[k] <= 0.0 || remainder[k] <= 0.0) continue;
    const double take = std::min(remainder[k], unlicensed_left);
    policy.beta[k] = take / mass[k];
    unlicensed_left -= take;
  }
  return policy;
}

std::vector<double> service_model::v_bar_under(const split_policy& policy) const {
  const std::size_t K = in_.grid.size();
  std::vector<double> v_bar(K, 0.0);
  for (std::size_t k = 0; k < K; ++k)
    v_bar[k] = pooled_type_valuation(k, policy.alpha[k], policy.beta[k],
                                     in_.required_rate_by_type[k]);
  return v_bar;
}

double service_model::pooled_type_valuation(std::size_t type_index, double alpha, double beta,
                                            double licensed_rate_bps) const {
  if (num_users() == 0) return 0.0;
  const auto vp = valuation_params::with_default_offset(
      in_.eta_v, in_.required_rate_by_type[type_index]);
  const double licensed_value = valuation(licensed_rate_bps, vp);
  double sum = 0.0;
  for (int u = 0; u < num_users(); ++u) {
    if (serving_bs_[u] < 0) continue;  // out of coverage: no service at all
    double value = alpha * licensed_value;
    if (beta > 0.0)
      value += beta * expected_mix_valuation(u, vp, 0.0, 1.0, 0.0,
                                             std::max(1, in_.sampling.activity_slots),
                                             mix_seed(k_tag_vbar, type_index));
    sum += value;
  }
  return sum / num_users();
}

power_profile service_model::realized_power(const std::vector<double>& licensed_rate_bps) const {
  const int n = num_users();
  std::vector<int> lic_users(std::max(in_.scene.params.num_bs, 1), 0);
  for (int u = 0; u < n; ++u)
    if (licensed_rate_bps[u] > 0.0 && serving_bs_[u] >= 0) ++lic_users[serving_bs_[u]];

  power_demand demand;
  demand.serving_bs.assign(n, -1);
  demand.rate_bps.assign(n, 0.0);
  demand.bandwidth_hz.assign(n, in_.scene.params.rb_bandwidth_hz());
  demand.natural_log = in_.radio.natural_log;
  demand.power_cap_w = in_.radio.power_cap_w;
  for (int u = 0; u < n; ++u) {
    const int s = serving_bs_[u];
    if (licensed_rate_bps[u] <= 0.0 || s < 0 || rbs_owned_[s] == 0) continue;
    demand.serving_bs[u] = s;
    demand.rate_bps[u] = licensed_rate_bps[u];
    demand.bandwidth_hz[u] = realized_bandwidth_hz(s, lic_users[s]);
  }
  return solve_power_profile(demand, gains_, noise_psd_);
}

double service_model::realized_bandwidth_hz(int serving, int licensed_users_at_bs) const {
  return in_.scene.params.rb_bandwidth_hz() * std::max(rbs_owned_[serving], 1) /
         std::max(1, licensed_users_at_bs);
}

}  // namespace lteu
