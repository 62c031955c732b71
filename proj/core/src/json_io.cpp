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

#include "lteu/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lteu/common.hpp"
#include "lteu/harness.hpp"

namespace lteu {

using nlohmann::json;

std::string scene_to_json(const network_scene& scene) {
  json doc;
  doc["format_version"] = 1;
  doc["seed"] = scene.seed;
  json params;
  params["area_side_m"] = scene.params.area_side_m;
  params["num_bs"] = scene.params.num_bs;
  params["num_wap"] = scene.params.num_wap;
  params["num_users"] = scene.params.num_users;
  params["path_loss_exponent"] = scene.params.path_loss_exponent;
  params["noise_psd_dbm_hz"] = scene.params.noise_psd_dbm_hz;
  params["licensed_rbs"] = scene.params.licensed_rbs;
  params["unlicensed_channels"] = scene.params.unlicensed_channels;
  params["bs_range_m"] = scene.params.bs_range_m;
  params["wap_range_m"] = scene.params.wap_range_m;
  params["total_bandwidth_hz"] = scene.params.total_bandwidth_hz;
  params["unlicensed_channel_width_hz"] = scene.params.unlicensed_channel_width_hz;
  doc["params"] = params;
  auto points = [](const std::vector<vec2>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back({p.x, p.y});
    return arr;
  };
  doc["bs"] = points(scene.bs_positions);
  doc["wap"] = points(scene.wap_positions);
  doc["users"] = points(scene.user_positions);
  return doc.dump(2) + "\n";
}

std::string menu_to_json(const contract_menu& menu) {
  json doc;
  doc["format_version"] = 1;
  json entries = json::array();
  for (std::size_t k = 0; k < menu.entries.size(); ++k) {
    const contract& c = menu.entries[k];
    entries.push_back(
        {{"type", k + 1}, {"alpha", c.alpha}, {"beta", c.beta}, {"price", c.price}});
  }
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

contract_menu menu_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("menu document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw parse_error("menu document: expected an object with an 'entries' array");
  contract_menu menu;
  menu.entries.resize(doc["entries"].size());
  for (const auto& item : doc["entries"]) {
    if (!item.contains("type") || !item.contains("alpha") || !item.contains("beta") ||
        !item.contains("price"))
      throw parse_error("menu entry: expected type, alpha, beta and price");
    const std::size_t type = item["type"].get<std::size_t>();
    if (type < 1 || type > menu.entries.size())
      throw parse_error("menu entry: type index out of range");
    menu.entries[type - 1] = {item["alpha"].get<double>(), item["beta"].get<double>(),
                              item["price"].get<double>()};
  }
  menu.validate();
  return menu;
}

contract_menu menu_from_file(const std::string& path) {
  return menu_from_json(read_text_file(path));
}

std::string matching_to_json(const da_result& result,
                             const std::vector<user_subfile_pair>& pairs) {
  json doc;
  doc["format_version"] = 1;
  json assignments = json::array();
  json unmatched = json::array();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (result.assignment[p] >= 0)
      assignments.push_back({{"pair", p},
                             {"user", pairs[p].user},
                             {"chunk", pairs[p].chunk_index},
                             {"option", result.assignment[p]}});
    else
      unmatched.push_back(p);
  }
  doc["assignments"] = assignments;
  doc["unmatched"] = unmatched;
  return doc.dump(2) + "\n";
}

std::string preferences_to_json(const std::vector<user_subfile_pair>& pairs,
                                std::size_t max_pairs) {
  json doc;
  doc["format_version"] = 1;
  json out = json::array();
  for (std::size_t p = 0; p < pairs.size() && p < max_pairs; ++p) {
    json entry;
    entry["pair"] = p;
    entry["user"] = pairs[p].user;
    entry["chunk"] = pairs[p].chunk_index;
    entry["options"] = pairs[p].pref_list;
    out.push_back(entry);
  }
  doc["pairs"] = out;
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw missing_file_error("cannot write file: " + path);
  out << content;
  if (!out) throw missing_file_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw missing_file_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string make_manifest(const scenario_params& params) {
  const std::string config_text = params.to_config().to_text();
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_text)));
  json doc;
  doc["format_version"] = 1;
  doc["tool"] = "lteu 0.1.0";
  doc["config_hash"] = std::string("fnv1a64-") + hash;
  doc["config_text"] = config_text;
  return doc.dump(2) + "\n";
}

}  // namespace lteu
