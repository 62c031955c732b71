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

#ifndef LTEU_COMMON_HPP
#define LTEU_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lteu {

/// Malformed or semantically invalid configuration input.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A referenced input file is missing or unreadable.
class missing_file_error : public std::runtime_error {
 public:
  explicit missing_file_error(const std::string& what) : std::runtime_error(what) {}
};

/// A JSON/CSV document failed to parse or has the wrong shape.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Demands cannot be met (power fixed point diverged, or a priced menu
/// cannot be made monotone).
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Stable process exit codes used by the CLI.
enum exit_code : int {
  exit_ok = 0,
  exit_failure = 1,      // generic / check failed
  exit_config = 2,       // schema or value violation
  exit_missing_file = 3, // input file not found
  exit_infeasible = 4,   // infeasible demands
  exit_parse = 5,        // malformed input document
};

/// FNV-1a 64-bit content hash, used to fingerprint configuration text.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace lteu

#endif  // LTEU_COMMON_HPP
