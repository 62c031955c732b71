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

#include "lteu/scenario.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "lteu/common.hpp"

namespace lteu {
namespace {

const std::set<std::string> k_known_keys = {
    // deployment
    "area_side_m", "num_bs", "num_wap", "num_users", "path_loss_exponent",
    "noise_psd_dbm_hz", "licensed_rbs", "unlicensed_channels", "bs_range_m", "wap_range_m",
    "total_bandwidth_hz", "unlicensed_channel_width_hz",
    // radio
    "unlicensed_tx_power_w", "wap_tx_power_w", "wifi_activity_prob",
    "interference_threshold_w", "nominal_bs_activity", "log_base", "power_cap_w",
    "cost_per_watt",
    // types
    "type_thetas", "type_probs", "required_rates_mbps", "eta_v",
    // traffic
    "file_size_mbits", "chunk_size_mbits", "num_files", "chunk_padding",
    // quotas
    "nominal_sinr_licensed", "nominal_sinr_unlicensed", "quota_licensed", "quota_unlicensed",
    "nominal_unlicensed_acceptance",
    // matching
    "priority_coeff_1", "priority_coeff_2", "priority_coeff_3",
    // sampling
    "activity_slots", "cost_draws", "ironing",
    // run
    "mechanism", "sweep", "sweep_values", "replications", "base_seed", "population_mode",
    "base_users", "slope_flatten_threshold", "jobs"};

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_double(xs[i]);
  }
  return out;
}

std::string format_list_ll(const std::vector<long long>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

mechanism_kind mechanism_from_string(const std::string& name) {
  if (name == "proposed") return mechanism_kind::proposed;
  if (name == "complete-info") return mechanism_kind::complete_info;
  if (name == "uniform-price") return mechanism_kind::uniform_price;
  if (name == "random") return mechanism_kind::random_alloc;
  throw config_error("unknown mechanism '" + name +
                     "' (expected proposed, complete-info, uniform-price or random)");
}

std::string to_string(mechanism_kind m) {
  switch (m) {
    case mechanism_kind::proposed: return "proposed";
    case mechanism_kind::complete_info: return "complete-info";
    case mechanism_kind::uniform_price: return "uniform-price";
    case mechanism_kind::random_alloc: return "random";
  }
  return "proposed";
}

void scenario_params::validate() const {
  scene.validate();
  grid().validate();
  priorities.validate();
  if (required_rates_bps.size() != thetas.size())
    throw config_error("one required rate per type expected");
  for (double r : required_rates_bps)
    if (r < 0.0) throw config_error("required rates must be nonnegative");
  if (eta_v <= 0.0) throw config_error("eta_v must be positive");
  if (file_bits <= 0 || chunk_bits <= 0) throw config_error("file and chunk sizes must be positive");
  if (num_files <= 0) throw config_error("num_files must be positive");
  if (replications < 1) throw config_error("replications must be >= 1");
  if (sweep_values.empty()) throw config_error("sweep_values must be nonempty");
  for (long long v : sweep_values)
    if (v < 0) throw config_error("sweep values must be nonnegative");
  if (sampling.activity_slots < 1 || sampling.cost_draws < 1)
    throw config_error("sampling effort must be >= 1");
  if (radio.wifi_activity_prob < 0.0 || radio.wifi_activity_prob > 1.0)
    throw config_error("wifi_activity_prob must be in [0,1]");
  if (radio.nominal_bs_activity > 1.0)
    throw config_error("nominal_bs_activity must be in [0,1], or negative for load-derived");
  if (nominal_unlicensed_acceptance < 0.0 || nominal_unlicensed_acceptance > 1.0)
    throw config_error("nominal_unlicensed_acceptance must be in [0,1]");
  if (population.grow && population.grow_type >= thetas.size())
    throw config_error("population growth type out of range");
  if (population.base_users < 0) throw config_error("base_users must be nonnegative");
  if (jobs < 0) throw config_error("jobs must be nonnegative");
}

scenario_params scenario_params::defaults() {
  scenario_params p;
  p.thetas = {1.0, 2.0, 3.5, 5.0, 7.5, 10.0};
  p.type_probs = {0.30, 0.25, 0.20, 0.10, 0.10, 0.05};
  p.required_rates_bps = {0.0, 0.2e6, 0.4e6, 0.5e6, 0.6e6, 0.7e6};
  p.sweep_values = {200, 400, 600, 800, 1000};
  return p;
}

scenario_params scenario_params::from_config(const keyed_config& cfg) {
  cfg.require_known(k_known_keys);
  scenario_params p = defaults();

  p.scene.area_side_m = cfg.get_double("area_side_m", p.scene.area_side_m);
  p.scene.num_bs = static_cast<int>(cfg.get_int("num_bs", p.scene.num_bs));
  p.scene.num_wap = static_cast<int>(cfg.get_int("num_wap", p.scene.num_wap));
  p.scene.num_users = static_cast<int>(cfg.get_int("num_users", p.scene.num_users));
  p.scene.path_loss_exponent = cfg.get_double("path_loss_exponent", p.scene.path_loss_exponent);
  p.scene.noise_psd_dbm_hz = cfg.get_double("noise_psd_dbm_hz", p.scene.noise_psd_dbm_hz);
  p.scene.licensed_rbs = static_cast<int>(cfg.get_int("licensed_rbs", p.scene.licensed_rbs));
  p.scene.unlicensed_channels =
      static_cast<int>(cfg.get_int("unlicensed_channels", p.scene.unlicensed_channels));
  p.scene.bs_range_m = cfg.get_double("bs_range_m", p.scene.bs_range_m);
  p.scene.wap_range_m = cfg.get_double("wap_range_m", p.scene.wap_range_m);
  p.scene.total_bandwidth_hz = cfg.get_double("total_bandwidth_hz", p.scene.total_bandwidth_hz);
  p.scene.unlicensed_channel_width_hz =
      cfg.get_double("unlicensed_channel_width_hz", p.scene.unlicensed_channel_width_hz);

  p.radio.unlicensed_tx_power_w =
      cfg.get_double("unlicensed_tx_power_w", p.radio.unlicensed_tx_power_w);
  p.radio.wap_tx_power_w = cfg.get_double("wap_tx_power_w", p.radio.wap_tx_power_w);
  p.radio.wifi_activity_prob = cfg.get_double("wifi_activity_prob", p.radio.wifi_activity_prob);
  p.radio.i_th_w = cfg.get_double("interference_threshold_w", p.radio.i_th_w);
  p.radio.nominal_bs_activity =
      cfg.get_double("nominal_bs_activity", p.radio.nominal_bs_activity);
  const std::string log_base = cfg.get_string("log_base", "natural");
  if (log_base == "natural")
    p.radio.natural_log = true;
  else if (log_base == "log2")
    p.radio.natural_log = false;
  else
    throw config_error("log_base must be 'natural' or 'log2'");
  const double cap = cfg.get_double("power_cap_w", 0.0);
  p.radio.power_cap_w = cap > 0.0 ? cap : std::numeric_limits<double>::infinity();
  p.radio.cost_per_watt = cfg.get_double("cost_per_watt", p.radio.cost_per_watt);

  p.thetas = cfg.get_list("type_thetas", p.thetas);
  if (cfg.has("type_probs")) {
    p.type_probs = cfg.get_list("type_probs", p.type_probs);
  } else if (p.thetas.size() != p.type_probs.size()) {
    p.type_probs.assign(p.thetas.size(), 1.0 / p.thetas.size());
  }
  std::vector<double> rates_mbps;
  for (double r : p.required_rates_bps) rates_mbps.push_back(r / 1e6);
  rates_mbps = cfg.get_list("required_rates_mbps", rates_mbps);
  p.required_rates_bps.clear();
  for (double r : rates_mbps) p.required_rates_bps.push_back(r * 1e6);
  p.eta_v = cfg.get_double("eta_v", p.eta_v);

  p.file_bits = static_cast<std::int64_t>(
      cfg.get_double("file_size_mbits", static_cast<double>(p.file_bits) / 1e6) * 1e6);
  p.chunk_bits = static_cast<std::int64_t>(
      cfg.get_double("chunk_size_mbits", static_cast<double>(p.chunk_bits) / 1e6) * 1e6);
  p.num_files = static_cast<int>(cfg.get_int("num_files", p.num_files));
  p.chunk_padding = cfg.get_bool("chunk_padding", p.chunk_padding);

  p.quotas.nominal_sinr_licensed =
      cfg.get_double("nominal_sinr_licensed", p.quotas.nominal_sinr_licensed);
  p.quotas.nominal_sinr_unlicensed =
      cfg.get_double("nominal_sinr_unlicensed", p.quotas.nominal_sinr_unlicensed);
  p.quotas.licensed_override =
      static_cast<int>(cfg.get_int("quota_licensed", p.quotas.licensed_override));
  p.quotas.unlicensed_override =
      static_cast<int>(cfg.get_int("quota_unlicensed", p.quotas.unlicensed_override));
  p.nominal_unlicensed_acceptance =
      cfg.get_double("nominal_unlicensed_acceptance", p.nominal_unlicensed_acceptance);

  p.priorities.first = cfg.get_double("priority_coeff_1", p.priorities.first);
  p.priorities.second = cfg.get_double("priority_coeff_2", p.priorities.second);
  p.priorities.third = cfg.get_double("priority_coeff_3", p.priorities.third);

  p.sampling.activity_slots =
      static_cast<int>(cfg.get_int("activity_slots", p.sampling.activity_slots));
  p.sampling.cost_draws = static_cast<int>(cfg.get_int("cost_draws", p.sampling.cost_draws));
  p.ironing = cfg.get_bool("ironing", p.ironing);

  p.mechanism = mechanism_from_string(cfg.get_string("mechanism", to_string(p.mechanism)));
  const std::string sweep = cfg.get_string("sweep", "num_users");
  if (sweep == "num_users")
    p.sweep = sweep_kind::num_users;
  else if (sweep == "num_bs")
    p.sweep = sweep_kind::num_bs;
  else
    throw config_error("sweep must be 'num_users' or 'num_bs'");
  if (cfg.has("sweep_values")) {
    p.sweep_values.clear();
    for (double v : cfg.get_list("sweep_values", {}))
      p.sweep_values.push_back(static_cast<long long>(v));
  }
  p.replications = static_cast<int>(cfg.get_int("replications", p.replications));
  p.base_seed = static_cast<std::uint64_t>(cfg.get_int("base_seed", p.base_seed));

  const std::string mode = cfg.get_string("population_mode", "mixed");
  if (mode == "mixed") {
    p.population.grow = false;
  } else if (mode.rfind("grow-type-", 0) == 0) {
    p.population.grow = true;
    const int t = std::stoi(mode.substr(10));
    if (t < 1) throw config_error("population_mode growth type must be >= 1");
    p.population.grow_type = static_cast<std::size_t>(t - 1);
  } else {
    throw config_error("population_mode must be 'mixed' or 'grow-type-<k>'");
  }
  p.population.base_users = static_cast<int>(cfg.get_int("base_users", p.population.base_users));
  p.slope_flatten_threshold =
      cfg.get_double("slope_flatten_threshold", p.slope_flatten_threshold);
  p.jobs = static_cast<int>(cfg.get_int("jobs", p.jobs));

  p.validate();
  return p;
}

keyed_config scenario_params::to_config() const {
  keyed_config cfg;
  cfg.set("area_side_m", format_double(scene.area_side_m));
  cfg.set("num_bs", std::to_string(scene.num_bs));
  cfg.set("num_wap", std::to_string(scene.num_wap));
  cfg.set("num_users", std::to_string(scene.num_users));
  cfg.set("path_loss_exponent", format_double(scene.path_loss_exponent));
  cfg.set("noise_psd_dbm_hz", format_double(scene.noise_psd_dbm_hz));
  cfg.set("licensed_rbs", std::to_string(scene.licensed_rbs));
  cfg.set("unlicensed_channels", std::to_string(scene.unlicensed_channels));
  cfg.set("bs_range_m", format_double(scene.bs_range_m));
  cfg.set("wap_range_m", format_double(scene.wap_range_m));
  cfg.set("total_bandwidth_hz", format_double(scene.total_bandwidth_hz));
  cfg.set("unlicensed_channel_width_hz", format_double(scene.unlicensed_channel_width_hz));

  cfg.set("unlicensed_tx_power_w", format_double(radio.unlicensed_tx_power_w));
  cfg.set("wap_tx_power_w", format_double(radio.wap_tx_power_w));
  cfg.set("wifi_activity_prob", format_double(radio.wifi_activity_prob));
  cfg.set("interference_threshold_w", format_double(radio.i_th_w));
  cfg.set("nominal_bs_activity", format_double(radio.nominal_bs_activity));
  cfg.set("log_base", radio.natural_log ? "natural" : "log2");
  cfg.set("power_cap_w",
          std::isfinite(radio.power_cap_w) ? format_double(radio.power_cap_w) : "0");
  cfg.set("cost_per_watt", format_double(radio.cost_per_watt));

  cfg.set("type_thetas", format_list(thetas));
  cfg.set("type_probs", format_list(type_probs));
  std::vector<double> rates_mbps;
  for (double r : required_rates_bps) rates_mbps.push_back(r / 1e6);
  cfg.set("required_rates_mbps", format_list(rates_mbps));
  cfg.set("eta_v", format_double(eta_v));

  cfg.set("file_size_mbits", format_double(static_cast<double>(file_bits) / 1e6));
  cfg.set("chunk_size_mbits", format_double(static_cast<double>(chunk_bits) / 1e6));
  cfg.set("num_files", std::to_string(num_files));
  cfg.set("chunk_padding", chunk_padding ? "true" : "false");

  cfg.set("nominal_sinr_licensed", format_double(quotas.nominal_sinr_licensed));
  cfg.set("nominal_sinr_unlicensed", format_double(quotas.nominal_sinr_unlicensed));
  cfg.set("quota_licensed", std::to_string(quotas.licensed_override));
  cfg.set("quota_unlicensed", std::to_string(quotas.unlicensed_override));
  cfg.set("nominal_unlicensed_acceptance", format_double(nominal_unlicensed_acceptance));

  cfg.set("priority_coeff_1", format_double(priorities.first));
  cfg.set("priority_coeff_2", format_double(priorities.second));
  cfg.set("priority_coeff_3", format_double(priorities.third));

  cfg.set("activity_slots", std::to_string(sampling.activity_slots));
  cfg.set("cost_draws", std::to_string(sampling.cost_draws));
  cfg.set("ironing", ironing ? "true" : "false");

  cfg.set("mechanism", to_string(mechanism));
  cfg.set("sweep", sweep == sweep_kind::num_users ? "num_users" : "num_bs");
  cfg.set("sweep_values", format_list_ll(sweep_values));
  cfg.set("replications", std::to_string(replications));
  cfg.set("base_seed", std::to_string(base_seed));
  cfg.set("population_mode",
          population.grow ? "grow-type-" + std::to_string(population.grow_type + 1) : "mixed");
  cfg.set("base_users", std::to_string(population.base_users));
  cfg.set("slope_flatten_threshold", format_double(slope_flatten_threshold));
  cfg.set("jobs", std::to_string(jobs));
  return cfg;
}

}  // namespace lteu
