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

#ifndef LTEU_FEASIBILITY_HPP
#define LTEU_FEASIBILITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lteu/types.hpp"

namespace lteu {

inline constexpr double k_ic_tolerance_rel = 1e-6;   // truth-telling slack
inline constexpr double k_ir_tolerance_rel = 1e-6;   // participation slack
inline constexpr double k_envelope_tolerance = 1e-8;

/// Per-type interim quantities of a priced menu: expected valuation, price,
/// surplus (theta * v_bar - price), and expected serving cost.
struct expected_quantities {
  std::vector<double> v_bar;
  std::vector<double> pi_bar;
  std::vector<double> u_bar;
  std::vector<double> c_bar;

  static expected_quantities from_menu(const std::vector<double>& v_bar,
                                       const std::vector<double>& prices,
                                       const type_grid& grid,
                                       std::vector<double> c_bar = {});
};

/// One truth-telling violation: type `type` would gain `gain` by selecting
/// the contract designed for `claimed`.
struct tibs_violation {
  std::size_t type = 0;
  std::size_t claimed = 0;
  double gain = 0.0;
};

struct tibs_report {
  std::vector<tibs_violation> violations;
  double tolerance = 0.0;
  bool ok() const { return violations.empty(); }
};

struct iir_violation {
  std::size_t type = 0;
  double u_bar = 0.0;
};

struct iir_report {
  std::vector<iir_violation> violations;
  double tolerance = 0.0;
  bool ok() const { return violations.empty(); }
};

struct ordering_report {
  bool prices_nondecreasing = true;
  bool valuations_nondecreasing = true;
  bool prices_nonnegative = true;
  bool valuations_nonnegative = true;
  /// Adjacent pairs where the price step and the valuation step disagree in
  /// sign (a feasible menu charges more exactly when it delivers more).
  std::vector<std::size_t> sign_mismatches;
  bool ok() const {
    return prices_nondecreasing && valuations_nondecreasing && prices_nonnegative &&
           valuations_nonnegative && sign_mismatches.empty();
  }
};

struct conditions_report {
  bool monotone_valuations = true;   // condition 1
  bool envelope_identity = true;     // condition 2: u_bar = u_bar[0] + integral(v_bar)
  bool nonnegative_bottom = true;    // condition 3: u_bar at the lowest type >= 0
  double max_envelope_gap = 0.0;
  bool ok() const { return monotone_valuations && envelope_identity && nonnegative_bottom; }
};

/// Truth-telling check over every ordered type pair (k, claimed):
/// theta_k * v_bar[k] - pi[k] >= theta_k * v_bar[claimed] - pi[claimed],
/// within eps_rel scaled by the largest surplus magnitude.
tibs_report check_tibs(const expected_quantities& expected, const type_grid& grid,
                       double eps_rel = k_ic_tolerance_rel);

/// Participation check: every type's interim surplus is >= -tolerance.
iir_report check_iir(const expected_quantities& expected, const type_grid& grid,
                     double eps_rel = k_ir_tolerance_rel);

/// Monotone chains 0 <= pi_1 <= ... and 0 <= v_1 <= ..., plus the adjacent
/// price/valuation sign agreement.
ordering_report check_ordering(const expected_quantities& expected, double eps_rel = 1e-9);

/// The three equivalent feasibility conditions: monotone valuations, the
/// surplus envelope identity under the same trapezoid rule, and zero-floor
/// surplus at the lowest type.
conditions_report check_feasibility_conditions(const expected_quantities& expected, const type_grid& grid,
                              double eps_env = k_envelope_tolerance);

std::string describe(const tibs_report& r);
std::string describe(const iir_report& r);
std::string describe(const ordering_report& r);
std::string describe(const conditions_report& r);

}  // namespace lteu

#endif  // LTEU_FEASIBILITY_HPP
