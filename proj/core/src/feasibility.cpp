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

#include "lteu/feasibility.hpp"

#include <cmath>
#include <sstream>

#include "lteu/common.hpp"
#include "lteu/pricing.hpp"

namespace lteu {
namespace {

double surplus_scale(const expected_quantities& e) {
  double scale = 0.0;
  for (double u : e.u_bar) scale = std::max(scale, std::abs(u));
  return std::max(scale, 1e-12);
}

}  // namespace

expected_quantities expected_quantities::from_menu(const std::vector<double>& v_bar,
                                                   const std::vector<double>& prices,
                                                   const type_grid& grid,
                                                   std::vector<double> c_bar) {
  if (v_bar.size() != grid.size() || prices.size() != grid.size())
    throw config_error("expected quantities: per-type arrays must match the grid");
  expected_quantities out;
  out.v_bar = v_bar;
  out.pi_bar = prices;
  out.u_bar.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    out.u_bar[k] = grid.thetas[k] * v_bar[k] - prices[k];
  out.c_bar = c_bar.empty() ? std::vector<double>(grid.size(), 0.0) : std::move(c_bar);
  return out;
}

tibs_report check_tibs(const expected_quantities& e, const type_grid& grid, double eps_rel) {
  tibs_report report;
  report.tolerance = eps_rel * surplus_scale(e);
  const std::size_t K = grid.size();
  for (std::size_t k = 0; k < K; ++k) {
    const double own = grid.thetas[k] * e.v_bar[k] - e.pi_bar[k];
    for (std::size_t j = 0; j < K; ++j) {
      if (j == k) continue;
      const double other = grid.thetas[k] * e.v_bar[j] - e.pi_bar[j];
      if (other > own + report.tolerance)
        report.violations.push_back({k, j, other - own});
    }
  }
  return report;
}

iir_report check_iir(const expected_quantities& e, const type_grid& grid, double eps_rel) {
  iir_report report;
  report.tolerance = eps_rel * surplus_scale(e);
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (e.u_bar[k] < -report.tolerance) report.violations.push_back({k, e.u_bar[k]});
  return report;
}

ordering_report check_ordering(const expected_quantities& e, double eps_rel) {
  ordering_report report;
  const double pi_tol = eps_rel * surplus_scale(e);
  for (std::size_t k = 0; k < e.pi_bar.size(); ++k) {
    if (e.pi_bar[k] < -pi_tol) report.prices_nonnegative = false;
    if (e.v_bar[k] < -pi_tol) report.valuations_nonnegative = false;
    if (k == 0) continue;
    const double dpi = e.pi_bar[k] - e.pi_bar[k - 1];
    const double dv = e.v_bar[k] - e.v_bar[k - 1];
    if (dpi < -pi_tol) report.prices_nondecreasing = false;
    if (dv < -pi_tol) report.valuations_nondecreasing = false;
    // Paying more must coincide with receiving more, and vice versa.
    if ((dpi > pi_tol && dv < -pi_tol) || (dpi < -pi_tol && dv > pi_tol))
      report.sign_mismatches.push_back(k);
  }
  return report;
}

conditions_report check_feasibility_conditions(const expected_quantities& e, const type_grid& grid,
                              double eps_env) {
  conditions_report report;
  for (std::size_t k = 1; k < e.v_bar.size(); ++k)
    if (e.v_bar[k] + eps_env * surplus_scale(e) < e.v_bar[k - 1])
      report.monotone_valuations = false;
  const std::vector<double> rent = trapezoid_cumulative(grid.thetas, e.v_bar);
  const double tol = eps_env * surplus_scale(e);
  for (std::size_t k = 0; k < e.u_bar.size(); ++k) {
    const double gap = std::abs(e.u_bar[k] - (e.u_bar[0] + rent[k]));
    report.max_envelope_gap = std::max(report.max_envelope_gap, gap);
    if (gap > tol) report.envelope_identity = false;
  }
  if (e.u_bar[0] < -tol) report.nonnegative_bottom = false;
  return report;
}

std::string describe(const tibs_report& r) {
  if (r.ok()) return "truth-telling: ok";
  std::ostringstream out;
  out << "truth-telling: " << r.violations.size() << " violation(s);";
  for (const auto& v : r.violations)
    out << " type " << v.type + 1 << " gains " << v.gain << " claiming type " << v.claimed + 1
        << ";";
  return out.str();
}

std::string describe(const iir_report& r) {
  if (r.ok()) return "participation: ok";
  std::ostringstream out;
  out << "participation: " << r.violations.size() << " violation(s);";
  for (const auto& v : r.violations)
    out << " type " << v.type + 1 << " surplus " << v.u_bar << ";";
  return out.str();
}

std::string describe(const ordering_report& r) {
  if (r.ok()) return "ordering: ok";
  std::ostringstream out;
  out << "ordering:";
  if (!r.prices_nonnegative) out << " negative price;";
  if (!r.valuations_nonnegative) out << " negative valuation;";
  if (!r.prices_nondecreasing) out << " prices not nondecreasing;";
  if (!r.valuations_nondecreasing) out << " valuations not nondecreasing;";
  if (!r.sign_mismatches.empty()) out << " " << r.sign_mismatches.size() << " sign mismatch(es);";
  return out.str();
}

std::string describe(const conditions_report& r) {
  if (r.ok()) return "feasibility conditions: ok";
  std::ostringstream out;
  out << "feasibility conditions:";
  if (!r.monotone_valuations) out << " condition 1 (monotone valuations) failed;";
  if (!r.envelope_identity)
    out << " condition 2 (surplus envelope) failed, max gap " << r.max_envelope_gap << ";";
  if (!r.nonnegative_bottom) out << " condition 3 (bottom-type surplus) failed;";
  return out.str();
}

}  // namespace lteu
