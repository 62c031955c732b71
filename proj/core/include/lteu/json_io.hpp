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

#ifndef LTEU_JSON_IO_HPP
#define LTEU_JSON_IO_HPP

#include <string>
#include <vector>

#include "lteu/contract.hpp"
#include "lteu/chunks.hpp"
#include "lteu/matching.hpp"
#include "lteu/scene.hpp"

namespace lteu {

/// Versioned topology document.
std::string scene_to_json(const network_scene& scene);

/// Menu round trip: [{type, alpha, beta, price}, ...] inside a versioned
/// envelope. Types are 1-based in the document.
std::string menu_to_json(const contract_menu& menu);
contract_menu menu_from_json(const std::string& text);
contract_menu menu_from_file(const std::string& path);

/// Matching export: pair -> option assignments plus the unmatched list.
std::string matching_to_json(const da_result& result,
                             const std::vector<user_subfile_pair>& pairs);

/// Preference-table audit dump: per pair, its ranked options.
std::string preferences_to_json(const std::vector<user_subfile_pair>& pairs,
                                std::size_t max_pairs = 1000);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace lteu

#endif  // LTEU_JSON_IO_HPP
