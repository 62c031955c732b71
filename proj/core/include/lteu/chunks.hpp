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

#ifndef LTEU_CHUNKS_HPP
#define LTEU_CHUNKS_HPP

#include <cstdint>
#include <vector>

namespace lteu {

/// One user's download request.
struct file_request {
  int user = 0;
  int file = 0;
  std::int64_t size_bits = 0;
  std::size_t type = 0;  // index into the type grid
};

/// One proposing unit of the matching game: a user acting for one chunk of
/// its requested file. `pref_list` is filled by the preference builder; the
/// not-yet-proposed remainder is always a suffix of it.
struct user_subfile_pair {
  int user = 0;
  int file = 0;
  int chunk_index = 0;
  std::int64_t bits = 0;
  std::size_t type = 0;
  std::vector<int> pref_list;  // option ids, best first
};

/// Splits each request into ceil(size/chunk_bits) chunks. By default the
/// final chunk carries the remainder, so sizes sum exactly to the request;
/// with `pad_last` every chunk is full-size and the request is rounded up.
std::vector<user_subfile_pair> chunk_files(const std::vector<file_request>& requests,
                                           std::int64_t chunk_bits, bool pad_last = false);

}  // namespace lteu

#endif  // LTEU_CHUNKS_HPP
