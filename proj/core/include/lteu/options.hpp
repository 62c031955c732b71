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

#ifndef LTEU_OPTIONS_HPP
#define LTEU_OPTIONS_HPP

#include <cstdint>
#include <vector>

#include "lteu/scene.hpp"

namespace lteu {

enum class band : std::uint8_t { licensed, unlicensed };

/// One side of the matching: a BS paired with a channel it can serve on.
/// `channel` indexes licensed resource blocks in [0, C1) and unlicensed
/// channels in [C1, C1 + C2). `quota` caps admitted chunks.
struct bs_channel_pair {
  int bs = 0;
  int channel = 0;
  band b = band::licensed;
  int quota = 0;
};

/// Quota derivation: floor(band capacity at a nominal SINR / nominal chunk
/// rate demand), with explicit overrides.
struct quota_params {
  double nominal_sinr_licensed = 0.078;
  double nominal_sinr_unlicensed = 0.044;
  int licensed_override = 0;    // 0 selects the derived value
  int unlicensed_override = 0;  // 0 selects the derived value
};

/// The set of BS-channel pairs on offer. Each licensed resource block is
/// owned by one BS (round-robin by index); every BS can contend for every
/// unlicensed channel.
struct option_menu {
  std::vector<bs_channel_pair> options;
  int num_bs = 0;
  int licensed_channels = 0;
  int unlicensed_channels = 0;

  int size() const { return static_cast<int>(options.size()); }
  const bs_channel_pair& at(int id) const { return options[id]; }
  bool licensed(int id) const { return options[id].b == band::licensed; }

  /// Owner of a licensed resource block.
  int rb_owner(int rb) const { return num_bs > 0 ? rb % num_bs : 0; }
  /// Id of the option for BS `bs` on unlicensed channel `c` (0-based).
  int unlicensed_option_id(int bs, int c) const {
    return licensed_channels + bs * unlicensed_channels + c;
  }
  /// 0-based unlicensed channel of an unlicensed option.
  int unlicensed_channel_of(int id) const {
    return options[id].channel - licensed_channels;
  }
};

/// Nominal per-chunk rate demand used by the quota rule: the mean positive
/// per-type requirement spread over a full file's chunks.
double nominal_chunk_demand_bps(const std::vector<double>& required_rates_bps,
                                std::int64_t file_bits, std::int64_t chunk_bits);

option_menu build_option_menu(const scene_params& scene, const quota_params& quotas,
                              double nominal_chunk_demand_bps, bool natural_log = true);

}  // namespace lteu

#endif  // LTEU_OPTIONS_HPP
