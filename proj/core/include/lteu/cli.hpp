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

#ifndef LTEU_CLI_HPP
#define LTEU_CLI_HPP

#include <ostream>
#include <string>

namespace lteu::cli {

/// Options shared by the subcommands. Seed and output directory may also be
/// supplied through the LTEU_SEED / LTEU_OUT environment variables; explicit
/// flags win over the environment.
struct run_config {
  std::string config_path;
  std::string out_dir;    // empty resolves to "." after the environment
  std::string mechanism;  // empty keeps the config's mechanism
  long long seed = -1;    // -1 keeps the config's seed
  bool quiet = false;
  bool dump_preferences = false;
};

/// Applies LTEU_SEED / LTEU_OUT to unset fields.
void apply_env_overrides(run_config& cfg);

/// Full experiment: writes metrics.csv and manifest.json into out_dir.
int cmd_run(const run_config& cfg, std::ostream& out, std::ostream& err);

/// Prices a menu for the configured scenario and writes menu.json.
int cmd_price(const run_config& cfg, std::ostream& out, std::ostream& err);

/// Feasibility audit of a priced menu against a scenario; prints one
/// pass/fail line per condition, exit 0 iff all pass.
int cmd_check(const std::string& menu_path, const run_config& cfg, std::ostream& out,
              std::ostream& err);

/// Dumps the generated topology as scene.json.
int cmd_scene(const run_config& cfg, std::ostream& out, std::ostream& err);

}  // namespace lteu::cli

#endif  // LTEU_CLI_HPP
