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

#ifndef LTEU_POWER_HPP
#define LTEU_POWER_HPP

#include <limits>
#include <vector>

#include "lteu/scene.hpp"

namespace lteu {

inline constexpr double k_power_tolerance = 1e-9;  // relative
inline constexpr int k_power_max_iterations = 10000;

/// Demands for the licensed-band power solve. Serving powers across BSs are
/// mutually coupled through interference, so they are found jointly.
struct power_demand {
  std::vector<int> serving_bs;        // per user; -1 when unserved
  std::vector<double> rate_bps;       // per user, required downlink rate
  std::vector<double> bandwidth_hz;   // per user share of the serving BS band
  bool natural_log = true;            // rate convention; false selects log2
  double power_cap_w = std::numeric_limits<double>::infinity();
  double tolerance = k_power_tolerance;
  int max_iterations = k_power_max_iterations;
};

/// Converged serving powers. `bs_total_w` aggregates each BS's transmissions,
/// which is the interference source seen by users of other BSs.
struct power_profile {
  std::vector<double> user_power_w;  // per user; 0 when unserved
  std::vector<double> bs_total_w;    // per BS
  std::vector<int> serving_bs;       // echo of the demand association
  bool converged = false;
  int iterations = 0;
  double max_residual = 0.0;  // relative, against the coupled power equations
};

/// (e^{r/w} - 1), the SINR a rate demand requires; log2 variant when
/// natural_log is false. Zero rate maps to zero.
double required_sinr(double rate_bps, double bandwidth_hz, bool natural_log);

/// Jacobi fixed point for the coupled power equations. A diverging system
/// (demands mutually unsupportable) is reported via `converged == false`;
/// callers that cannot proceed should raise infeasible_error.
power_profile solve_power_profile(const power_demand& demand, const gain_matrix& gains,
                                  double noise_psd_w_hz);

}  // namespace lteu

#endif  // LTEU_POWER_HPP
