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

#ifndef LTEU_MATCHING_HPP
#define LTEU_MATCHING_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lteu/chunks.hpp"
#include "lteu/estimates.hpp"
#include "lteu/options.hpp"

namespace lteu {

/// Promotion coefficients of the three priority classes; class 1 (smallest
/// coefficient) receives the largest cost-discount promotion.
struct priority_coeffs {
  double first = 1.0;
  double second = 2.0;
  double third = 4.0;

  double of(int cls) const { return cls == 1 ? first : cls == 2 ? second : third; }
  void validate() const {
    if (!(first > 0.0 && second > first && third > second))
      throw config_error("priority coefficients must be positive and increasing");
  }
};

struct priority_assignment {
  int cls = 3;          // 1, 2 or 3
  int phi = 0;          // 1 iff another licensed option remains beyond the target
  double coeff = 0.0;   // promotion coefficient of the class
};

/// Classifies a pair's stake in `target` given what remains of its
/// preference list (the suffix starting at `next_index`):
///   class 1: target is the pair's first and only remaining option, licensed;
///   class 2: target is the last remaining licensed option but was not the
///            first preference;
///   class 3: other licensed options remain (phi = 1), or the pair has no
///            licensed stake at all (phi = 0).
/// Throws std::invalid_argument when target is not in the remaining suffix.
priority_assignment classify_priority(const user_subfile_pair& pair, std::size_t next_index,
                                      int target, const option_menu& menu,
                                      const priority_coeffs& coeffs);

/// A deferred-acceptance instance over abstract pairs and options.
struct da_problem {
  /// Per-pair preference lists (option ids, best first).
  std::vector<std::vector<int>> prefs;
  /// Per-option admission caps.
  std::vector<int> quotas;
  /// Ranks `candidates` (pair ids) for an option, best first. `next_index`
  /// exposes each pair's remaining-suffix position so rankers may assign
  /// priorities. Must be deterministic.
  std::function<std::vector<int>(int option, std::vector<int> candidates,
                                 const std::vector<std::size_t>& next_index)>
      rank;
  /// Optional per-round observer (after acceptances settle).
  std::function<void(int round, const std::vector<std::vector<int>>& accepted)> on_round;
};

struct da_result {
  std::vector<int> assignment;             // pair -> option id, -1 when unmatched
  std::vector<std::vector<int>> accepted;  // option -> admitted pairs
  std::vector<std::size_t> next_index;     // terminal remaining-suffix position
  long long proposals = 0;
  int rounds = 0;
};

/// Propose/reject rounds: every unmatched pair proposes to its next
/// not-yet-tried option; each option re-ranks incumbents plus applicants and
/// keeps its quota's best; rejected pairs strike the rejecting option.
/// Terminates when a round produces no proposals; each pair proposes to each
/// option at most once, so proposals <= |pairs| * |options|.
da_result deferred_acceptance(const da_problem& problem);

struct blocking_pair {
  int pair = 0;
  int option = 0;
};

/// Flags every (pair, option) combination where the pair strictly prefers
/// the option to its assignment (by more than `tol`) and the option would
/// admit it, either through spare quota or by outranking an incumbent under
/// the option's own ranking. An empty report certifies stability.
std::vector<blocking_pair> verify_bayesian_stability(
    const da_problem& problem, const da_result& result,
    const std::function<double(int pair, int option)>& pair_utility, double tol);

/// Per-user traffic split realized by a matching: the licensed and
/// unlicensed bit fractions of each user's total request. Unmatched chunks
/// count toward neither share.
struct realized_allocation {
  double alpha = 0.0;
  double beta = 0.0;
  std::int64_t licensed_bits = 0;
  std::int64_t unlicensed_bits = 0;
  std::int64_t total_bits = 0;
};

std::vector<realized_allocation> matching_to_allocation(
    const da_result& result, const std::vector<user_subfile_pair>& pairs,
    const option_menu& menu, int num_users);

/// Ranking used by the spectrum-allocation game: applicants ordered by the
/// operator-side utility with promotions, except that applicants of the same
/// priority class and claimed type are ordered among themselves by the plain
/// expected margin (their promotions suppress pairwise).
std::function<std::vector<int>(int, std::vector<int>, const std::vector<std::size_t>&)>
make_bs_ranker(const service_model& model, const std::vector<user_subfile_pair>& pairs,
               const priority_coeffs& coeffs);

}  // namespace lteu

#endif  // LTEU_MATCHING_HPP
