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

#include "lteu/chunks.hpp"

#include "lteu/common.hpp"

namespace lteu {

std::vector<user_subfile_pair> chunk_files(const std::vector<file_request>& requests,
                                           std::int64_t chunk_bits, bool pad_last) {
  if (chunk_bits <= 0) throw config_error("chunk size must be positive");
  std::vector<user_subfile_pair> pairs;
  for (const auto& req : requests) {
    if (req.size_bits < 0) throw config_error("file size must be nonnegative");
    std::int64_t left = req.size_bits;
    int index = 0;
    while (left > 0) {
      user_subfile_pair pair;
      pair.user = req.user;
      pair.file = req.file;
      pair.chunk_index = index++;
      pair.bits = pad_last ? chunk_bits : std::min(left, chunk_bits);
      pair.type = req.type;
      pairs.push_back(std::move(pair));
      left -= chunk_bits;
    }
  }
  return pairs;
}

}  // namespace lteu
