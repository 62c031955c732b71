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

#ifndef LTEU_CONTRACT_HPP
#define LTEU_CONTRACT_HPP

#include <algorithm>
#include <vector>

#include "lteu/common.hpp"

namespace lteu {

/// Traffic-split-and-price bundle offered per user type: the licensed and
/// unlicensed shares of the user's traffic, and the charge for the service.
/// A declined contract is (0, 0, 0).
struct contract {
  double alpha = 0.0;  // licensed traffic fraction
  double beta = 0.0;   // unlicensed traffic fraction
  double price = 0.0;

  void validate() const {
    if (alpha < 0.0 || alpha > 1.0) throw config_error("contract: alpha must be in [0,1]");
    if (beta < 0.0 || beta > 1.0) throw config_error("contract: beta must be in [0,1]");
    if (alpha + beta > 1.0 + 1e-12)
      throw config_error("contract: alpha + beta must not exceed 1");
    if (price < 0.0) throw config_error("contract: price must be nonnegative");
  }
};

/// Parameters of the rate-satisfaction curve: a concave quadratic peaking at
/// the demanded rate. v_offset is the value at the peak; the default choice
/// eta_v * r_req^2 makes the value of zero rate exactly zero.
struct valuation_params {
  double eta_v = 0.0;   // curvature scale, > 0
  double r_req = 0.0;   // demanded rate, >= 0
  double v_offset = 0.0;

  static valuation_params with_default_offset(double eta_v, double r_req) {
    return {eta_v, r_req, eta_v * r_req * r_req};
  }

  void validate() const {
    if (eta_v <= 0.0) throw config_error("valuation: eta_v must be positive");
    if (r_req < 0.0) throw config_error("valuation: r_req must be nonnegative");
  }
};

/// v_offset - eta_v * (rate - r_req)^2, clamped at zero below. Maximal
/// exactly at r_req; falls off symmetrically for under- and over-shoot.
inline double valuation(double rate_bps, const valuation_params& params) {
  const double miss = rate_bps - params.r_req;
  return std::max(0.0, params.v_offset - params.eta_v * miss * miss);
}

/// One contract per type, lowest type first.
struct contract_menu {
  std::vector<contract> entries;

  void validate() const {
    for (const auto& entry : entries) entry.validate();
  }
  std::vector<double> prices() const {
    std::vector<double> out(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) out[k] = entries[k].price;
    return out;
  }
};

}  // namespace lteu

#endif  // LTEU_CONTRACT_HPP
