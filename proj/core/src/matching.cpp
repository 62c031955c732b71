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

#include "lteu/matching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lteu {
namespace {

/// Classification that tolerates target being absent from the remaining
/// suffix (the stability verifier poses hypothetical applications after
/// lists have been struck down).
priority_assignment classify_any(const user_subfile_pair& pair, std::size_t next_index,
                                 int target, const option_menu& menu,
                                 const priority_coeffs& coeffs) {
  const auto& prefs = pair.pref_list;
  bool other_remaining = false;
  bool other_licensed_remaining = false;
  for (std::size_t i = next_index; i < prefs.size(); ++i) {
    if (prefs[i] == target) continue;
    other_remaining = true;
    if (menu.licensed(prefs[i])) other_licensed_remaining = true;
  }
  priority_assignment out;
  const bool target_licensed = menu.licensed(target);
  const bool only_remaining = !other_remaining;
  const bool first_preference = !prefs.empty() && prefs.front() == target;
  if (other_licensed_remaining) {
    out.cls = 3;
    out.phi = 1;
  } else if (target_licensed && only_remaining && first_preference) {
    out.cls = 1;
    out.phi = 0;
  } else if (target_licensed && !first_preference) {
    out.cls = 2;
    out.phi = 0;
  } else {
    out.cls = 3;
    out.phi = 0;
  }
  out.coeff = coeffs.of(out.cls);
  return out;
}

}  // namespace

priority_assignment classify_priority(const user_subfile_pair& pair, std::size_t next_index,
                                      int target, const option_menu& menu,
                                      const priority_coeffs& coeffs) {
  coeffs.validate();
  const auto& prefs = pair.pref_list;
  bool target_remaining = false;
  for (std::size_t i = next_index; i < prefs.size(); ++i)
    if (prefs[i] == target) target_remaining = true;
  if (!target_remaining)
    throw std::invalid_argument("classify_priority: target not among remaining options");
  return classify_any(pair, next_index, target, menu, coeffs);
}

da_result deferred_acceptance(const da_problem& problem) {
  const std::size_t n_pairs = problem.prefs.size();
  const std::size_t n_options = problem.quotas.size();
  da_result result;
  result.assignment.assign(n_pairs, -1);
  result.accepted.assign(n_options, {});
  result.next_index.assign(n_pairs, 0);

  std::vector<std::vector<int>> applicants(n_options);
  for (;;) {
    bool proposed = false;
    for (auto& a : applicants) a.clear();
    for (std::size_t p = 0; p < n_pairs; ++p) {
      if (result.assignment[p] >= 0) continue;
      if (result.next_index[p] >= problem.prefs[p].size()) continue;
      const int target = problem.prefs[p][result.next_index[p]];
      applicants[target].push_back(static_cast<int>(p));
      ++result.proposals;
      proposed = true;
    }
    if (!proposed) break;
    ++result.rounds;

    for (std::size_t m = 0; m < n_options; ++m) {
      if (applicants[m].empty()) continue;
      std::vector<int> pool = result.accepted[m];
      pool.insert(pool.end(), applicants[m].begin(), applicants[m].end());
      std::vector<int> ranked =
          problem.rank(static_cast<int>(m), std::move(pool), result.next_index);
      const std::size_t keep =
          std::min<std::size_t>(ranked.size(), std::max(problem.quotas[m], 0));

      std::vector<int> kept(ranked.begin(), ranked.begin() + keep);
      for (std::size_t i = keep; i < ranked.size(); ++i) {
        const int p = ranked[i];
        if (result.assignment[p] == static_cast<int>(m)) result.assignment[p] = -1;
        // The rejecting option is struck from the pair's list.
        ++result.next_index[p];
      }
      for (int p : kept) result.assignment[p] = static_cast<int>(m);
      result.accepted[m] = std::move(kept);
    }
    if (problem.on_round) problem.on_round(result.rounds, result.accepted);
  }
  return result;
}

std::vector<blocking_pair> verify_bayesian_stability(
    const da_problem& problem, const da_result& result,
    const std::function<double(int pair, int option)>& pair_utility, double tol) {
  std::vector<blocking_pair> blocking;
  for (std::size_t p = 0; p < problem.prefs.size(); ++p) {
    const int current = result.assignment[p];
    const double current_utility =
        current >= 0 ? pair_utility(static_cast<int>(p), current) : 0.0;
    for (int m : problem.prefs[p]) {
      if (m == current) continue;
      if (pair_utility(static_cast<int>(p), m) <= current_utility + tol) continue;
      const auto& incumbents = result.accepted[m];
      bool admits = static_cast<int>(incumbents.size()) < problem.quotas[m];
      if (!admits && problem.quotas[m] > 0) {
        std::vector<int> pool = incumbents;
        pool.push_back(static_cast<int>(p));
        const std::vector<int> ranked = problem.rank(m, std::move(pool), result.next_index);
        for (std::size_t i = 0; i < static_cast<std::size_t>(problem.quotas[m]); ++i)
          if (ranked[i] == static_cast<int>(p)) {
            admits = true;  // would evict a strictly less-preferred incumbent
            break;
          }
      }
      if (admits) blocking.push_back({static_cast<int>(p), m});
    }
  }
  return blocking;
}

std::vector<realized_allocation> matching_to_allocation(
    const da_result& result, const std::vector<user_subfile_pair>& pairs,
    const option_menu& menu, int num_users) {
  std::vector<realized_allocation> out(num_users);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    realized_allocation& a = out[pairs[p].user];
    a.total_bits += pairs[p].bits;
    const int m = result.assignment[p];
    if (m < 0) continue;
    if (menu.licensed(m))
      a.licensed_bits += pairs[p].bits;
    else
      a.unlicensed_bits += pairs[p].bits;
  }
  for (auto& a : out) {
    if (a.total_bits > 0) {
      a.alpha = static_cast<double>(a.licensed_bits) / static_cast<double>(a.total_bits);
      a.beta = static_cast<double>(a.unlicensed_bits) / static_cast<double>(a.total_bits);
    }
  }
  return out;
}

std::function<std::vector<int>(int, std::vector<int>, const std::vector<std::size_t>&)>
make_bs_ranker(const service_model& model, const std::vector<user_subfile_pair>& pairs,
               const priority_coeffs& coeffs) {
  coeffs.validate();
  return [&model, &pairs, coeffs](int option, std::vector<int> candidates,
                                  const std::vector<std::size_t>& next_index) {
    struct key {
      double psi;
      double gamma;
      int cls;
      std::size_t claimed;
      int user;
      int chunk;
    };
    std::vector<key> keys(candidates.size());
    const option_menu& menu = model.menu();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int p = candidates[i];
      const auto& pair = pairs[p];
      const priority_assignment pr = classify_any(pair, next_index[p], option, menu, coeffs);
      const double gamma = model.e_gamma(pair.user, option);
      const double psi = model.bs_utility(pair.user, option, false, pr.coeff);
      keys[i] = {psi,  gamma, pr.cls, model.signing(pair.user).claimed_entry,
                 pair.user, pair.chunk_index};
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (keys[a].psi != keys[b].psi) return keys[a].psi > keys[b].psi;
      if (keys[a].user != keys[b].user) return keys[a].user < keys[b].user;
      return keys[a].chunk < keys[b].chunk;
    });
    // Resemblant applicants (same priority class and claimed type) are
    // ordered among the positions they occupy by the plain margin.
    std::map<std::pair<int, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t rank_pos = 0; rank_pos < order.size(); ++rank_pos) {
      const key& k = keys[order[rank_pos]];
      groups[{k.cls, k.claimed}].push_back(rank_pos);
    }
    std::vector<int> ranked(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      ranked[pos] = candidates[order[pos]];
    for (const auto& [group_key, positions] : groups) {
      if (positions.size() < 2) continue;
      std::vector<std::size_t> members;
      members.reserve(positions.size());
      for (std::size_t pos : positions) members.push_back(order[pos]);
      std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a].gamma != keys[b].gamma) return keys[a].gamma > keys[b].gamma;
        if (keys[a].user != keys[b].user) return keys[a].user < keys[b].user;
        return keys[a].chunk < keys[b].chunk;
      });
      for (std::size_t i = 0; i < positions.size(); ++i)
        ranked[positions[i]] = candidates[members[i]];
    }
    return ranked;
  };
}

}  // namespace lteu
