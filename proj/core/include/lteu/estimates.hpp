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

#ifndef LTEU_ESTIMATES_HPP
#define LTEU_ESTIMATES_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "lteu/chunks.hpp"
#include "lteu/contract.hpp"
#include "lteu/options.hpp"
#include "lteu/power.hpp"
#include "lteu/rates.hpp"
#include "lteu/scene.hpp"
#include "lteu/types.hpp"

namespace lteu {

/// Radio-plane constants that the deployment tables leave open.
struct radio_params {
  double unlicensed_tx_power_w = 2e-9;  // per BS per unlicensed channel
  double wap_tx_power_w = 0.25e-9;
  double wifi_activity_prob = 0.5;  // per-WAP, per-slot Bernoulli
  /// Defer threshold; <= 0 derives the value at which a single WAP at its
  /// communication range triggers backoff.
  double i_th_w = 0.0;
  /// Assumed co-channel duty of other BSs when estimating unlicensed rates
  /// before a matching exists; negative derives it from the expected
  /// overflow load on the unlicensed channels.
  double nominal_bs_activity = -1.0;
  bool natural_log = true;
  double power_cap_w = std::numeric_limits<double>::infinity();
  double cost_per_watt = 1.0;

  double derived_i_th(const scene_params& scene) const {
    if (i_th_w > 0.0) return i_th_w;
    return wap_tx_power_w * std::pow(scene.wap_range_m, -scene.path_loss_exponent);
  }
};

struct sampling_params {
  int activity_slots = 48;  // WiFi slot draws per expectation
  int cost_draws = 48;      // opponent type-profile draws for cost expectations
};

/// What a user signed: the menu entry it selected (possibly not its own
/// type's), the rate the operator will provision for it, and the charge.
/// Non-participants hold the declined contract and are never matched.
struct user_signing {
  bool participates = false;
  std::size_t claimed_entry = 0;
  double claimed_rate_bps = 0.0;
  double price = 0.0;
};

/// Per-type traffic split policy (licensed share alpha, unlicensed share
/// beta) used to evaluate interim valuations.
struct split_policy {
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// Scenario-level estimator: geometry-derived associations, expected
/// unlicensed rates, expected serving costs, interim valuations, and the
/// per-option utilities both sides of the matching rank by.
///
/// Everything here is deterministic in (inputs, seed); all expectations use
/// fixed sample counts so repeated evaluation is bit-stable.
class service_model {
 public:
  struct inputs {
    network_scene scene;
    type_grid grid;
    std::vector<double> required_rate_by_type;  // bits/s
    double eta_v = 0.0;
    radio_params radio;
    sampling_params sampling;
    option_menu menu;
    std::vector<std::size_t> user_type;  // true types
    std::int64_t file_bits = 0;
    std::int64_t chunk_bits = 0;
    /// Cost expectations: false draws opponent profiles from the grid;
    /// true evaluates the single realized profile (full-information mode).
    bool realized_cost_profile = false;
    std::uint64_t seed = 0;
  };

  explicit service_model(inputs in);

  int num_users() const { return static_cast<int>(in_.user_type.size()); }
  const network_scene& scene() const { return in_.scene; }
  const option_menu& menu() const { return in_.menu; }
  const type_grid& grid() const { return in_.grid; }
  const gain_matrix& gains() const { return gains_; }
  double i_th_w() const { return i_th_w_; }
  double required_rate(std::size_t type) const { return in_.required_rate_by_type[type]; }
  std::size_t user_type(int user) const { return in_.user_type[user]; }
  int chunks_per_user() const { return chunks_per_user_; }

  int serving_bs(int user) const { return serving_bs_[user]; }
  const std::vector<int>& in_range_bs(int user) const { return in_range_[user]; }

  void set_signings(std::vector<user_signing> signings);
  const user_signing& signing(int user) const { return signings_[user]; }

  /// Expected unlicensed rate from BS `bs` on 0-based unlicensed channel
  /// `channel`, with nominal co-channel BS duty and WiFi slot sampling.
  double kappa_nominal(int user, int bs, int channel) const;

  /// Same expectation with the co-channel BS set fixed by an actual
  /// matching (`bs_active[s]` nonzero when BS s transmits on this channel).
  double kappa_realized(int user, int bs, int channel, const std::vector<char>& bs_active,
                        std::uint64_t salt) const;

  /// Utility the user attaches to being served at this option: its own
  /// satisfaction curve at the option's delivered rate minus its price.
  double option_utility(int user, int option) const;

  /// Candidate options (serving-BS resource blocks plus all in-range
  /// unlicensed pairs) ranked by descending utility; options with negative
  /// utility are dropped, since staying unmatched dominates them.
  std::vector<int> build_preference_list(const user_subfile_pair& pair) const;

  /// Expected serving cost of one chunk of `user` at `option`.
  double chunk_cost(int user, int option) const;

  /// Expected operator-side margin of serving one chunk: price minus cost.
  double e_gamma(int user, int option) const;

  /// Operator-side ranking utility. With `resemblance` the promotion is
  /// suppressed and the margin stands alone; otherwise the cost-discount
  /// promotion chunk_cost / (claimed theta * priority_coeff) is added.
  double bs_utility(int user, int option, bool resemblance, double priority_coeff) const;

  /// Interim valuation of a user evaluated as type `type_index` under a
  /// traffic split. Serving powers track rate targets, so opponent demands
  /// move costs rather than delivered rates; the remaining uncertainty is
  /// WiFi slot activity, sampled `samples` times.
  double expected_valuation(int user, std::size_t type_index, double alpha, double beta,
                            int samples, std::uint64_t seed) const;

  /// General form: satisfaction curve of `vp` at alpha * licensed_rate +
  /// beta * kappa, averaged over slots.
  double expected_mix_valuation(int user, const valuation_params& vp, double alpha,
                                double beta, double licensed_rate_bps, int samples,
                                std::uint64_t seed) const;

  /// Converged transmit power serving `user` when every user demands its
  /// profile type's rate, scaled by cost-per-watt. Throws infeasible_error
  /// when the demands are mutually unsupportable.
  double serving_cost(const std::vector<std::size_t>& type_profile, int user) const;

  /// Capacity-greedy split policy: licensed chunk slots are filled from the
  /// highest type down, then unlicensed slots (discounted by the expected
  /// acceptance rate) the same way.
  split_policy nominal_policy(double unlicensed_acceptance) const;

  /// Per-type interim valuation under a split policy, averaged over the
  /// user population.
  std::vector<double> v_bar_under(const split_policy& policy) const;

  /// Population-mean valuation of one type under a coverage lottery: an
  /// alpha share of the traffic served at the licensed target, a beta share
  /// at the unlicensed channel draw, the rest unserved. Deliberately linear
  /// in the coverage shares, because realized coverage is close to
  /// all-or-nothing across a type's users and the satisfaction curve is
  /// concave. Seeded identically to v_bar_under, so a pooled menu that
  /// degenerates to a single type's own terms reproduces its entry exactly.
  double pooled_type_valuation(std::size_t type_index, double alpha, double beta,
                               double licensed_rate_bps) const;

  /// The co-channel BS duty used by nominal unlicensed-rate estimates
  /// (configured, or derived from the expected channel overflow).
  double effective_bs_activity() const { return bs_activity_; }

  /// Fixed point at the given per-user licensed rate targets with realized
  /// per-BS bandwidth sharing.
  power_profile realized_power(const std::vector<double>& licensed_rate_bps) const;

  double nominal_bandwidth_hz(int user) const { return nominal_bw_[user]; }
  double realized_bandwidth_hz(int serving, int licensed_users_at_bs) const;
  int rbs_owned(int bs) const { return rbs_owned_[bs]; }

 private:
  double kappa_expectation(int user, int bs, int channel, const std::vector<char>* bs_active,
                           std::uint64_t salt) const;

  inputs in_;
  gain_matrix gains_;
  double i_th_w_ = 0.0;
  double noise_psd_ = 0.0;
  double sigma2_unl_w_ = 0.0;
  int chunks_per_user_ = 1;
  double bs_activity_ = 0.5;
  std::vector<int> serving_bs_;
  std::vector<std::vector<int>> in_range_;
  std::vector<int> rbs_owned_;
  std::vector<double> nominal_bw_;
  std::vector<double> mean_bs_total_w_;  // expected per-BS licensed power
  std::vector<std::vector<double>> kappa_;  // [user][in_range_idx * C2 + c]
  std::vector<int> in_range_index_;         // [user * num_bs + s] -> idx or -1
  std::vector<user_signing> signings_;
};

}  // namespace lteu

#endif  // LTEU_ESTIMATES_HPP
