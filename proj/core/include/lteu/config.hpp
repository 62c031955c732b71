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

#ifndef LTEU_CONFIG_HPP
#define LTEU_CONFIG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lteu {

/// Keyed text configuration: one `key = value` per line, `#` comments.
/// Key order is preserved so a config can be echoed verbatim into manifests.
class keyed_config {
 public:
  keyed_config() = default;

  static keyed_config from_file(const std::string& path);
  static keyed_config from_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& raw(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  void set(const std::string& key, const std::string& value);

  /// Keys in file order.
  const std::vector<std::string>& keys() const { return order_; }

  /// Rejects keys outside the known schema; throws config_error naming them.
  void require_known(const std::set<std::string>& known) const;

  /// Canonical `key = value` text (stable across echo round trips).
  std::string to_text() const;

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

}  // namespace lteu

#endif  // LTEU_CONFIG_HPP
