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

#include "lteu/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lteu/common.hpp"

namespace lteu {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double out = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw config_error("config key '" + key + "': expected a number, got '" + value + "'");
  return out;
}

}  // namespace

keyed_config keyed_config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw missing_file_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

keyed_config keyed_config::from_string(const std::string& text) {
  keyed_config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw config_error("config line " + std::to_string(lineno) + ": empty key");
    if (cfg.values_.count(key))
      throw config_error("config: duplicate key '" + key + "'");
    cfg.set(key, value);
  }
  return cfg;
}

bool keyed_config::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string& keyed_config::raw(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw config_error("config: missing key '" + key + "'");
  return it->second;
}

double keyed_config::get_double(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  return parse_double(key, raw(key));
}

long long keyed_config::get_int(const std::string& key, long long fallback) const {
  if (!has(key)) return fallback;
  const double v = parse_double(key, raw(key));
  const long long out = static_cast<long long>(v);
  if (static_cast<double>(out) != v)
    throw config_error("config key '" + key + "': expected an integer, got '" + raw(key) + "'");
  return out;
}

bool keyed_config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string& v = raw(key);
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw config_error("config key '" + key + "': expected a boolean, got '" + v + "'");
}

std::string keyed_config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? raw(key) : fallback;
}

std::vector<double> keyed_config::get_list(const std::string& key,
                                           const std::vector<double>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<double> out;
  std::istringstream in(raw(key));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw config_error("config key '" + key + "': empty list element");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw config_error("config key '" + key + "': empty list");
  return out;
}

void keyed_config::set(const std::string& key, const std::string& value) {
  if (!values_.count(key)) order_.push_back(key);
  values_[key] = value;
}

void keyed_config::require_known(const std::set<std::string>& known) const {
  std::string unknown;
  for (const auto& key : order_) {
    if (!known.count(key)) {
      if (!unknown.empty()) unknown += ", ";
      unknown += key;
    }
  }
  if (!unknown.empty()) throw config_error("config: unknown keys: " + unknown);
}

std::string keyed_config::to_text() const {
  std::string out;
  for (const auto& key : order_) {
    out += key;
    out += " = ";
    out += values_.at(key);
    out += "\n";
  }
  return out;
}

}  // namespace lteu
