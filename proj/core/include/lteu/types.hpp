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

#ifndef LTEU_TYPES_HPP
#define LTEU_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "lteu/common.hpp"
#include "lteu/rng.hpp"

namespace lteu {

inline constexpr double k_prob_sum_tolerance = 1e-12;

/// Ordered willingness-to-pay classes with their population distribution.
/// Index 0 is the lowest type.
struct type_grid {
  std::vector<double> thetas;  // strictly increasing
  std::vector<double> probs;   // nonnegative, sums to 1

  std::size_t size() const { return thetas.size(); }
  double lowest() const { return thetas.front(); }

  void validate() const {
    if (thetas.empty()) throw config_error("type grid must have at least one type");
    if (probs.size() != thetas.size())
      throw config_error("type grid: one probability per type required");
    for (std::size_t k = 1; k < thetas.size(); ++k)
      if (!(thetas[k] > thetas[k - 1]))
        throw config_error("type grid: thetas must be strictly increasing");
    double sum = 0.0;
    for (double p : probs) {
      if (p < 0.0) throw config_error("type grid: probabilities must be nonnegative");
      sum += p;
    }
    if (std::abs(sum - 1.0) > k_prob_sum_tolerance)
      throw config_error("type grid: probabilities must sum to 1");
  }

  /// Draws a type index from the distribution.
  std::size_t sample(rng& gen) const {
    const double u = gen.uniform01();
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      acc += probs[k];
      if (u < acc) return k;
    }
    return probs.size() - 1;
  }
};

}  // namespace lteu

#endif  // LTEU_TYPES_HPP
