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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lteu/cli.hpp"
#include "lteu/common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"LTE-over-unlicensed spectrum market simulator"};
  app.require_subcommand(1);

  lteu::cli::run_config cfg;
  std::string menu_path;

  auto add_common = [&](CLI::App* sub, bool with_mechanism) {
    sub->add_option("--config", cfg.config_path, "scenario config file (keyed text)")
        ->required();
    sub->add_option("--out", cfg.out_dir, "output directory (default: ., env LTEU_OUT)");
    sub->add_option("--seed", cfg.seed, "base seed override (env LTEU_SEED)");
    sub->add_flag("--quiet", cfg.quiet, "suppress progress output");
    if (with_mechanism)
      sub->add_option("--mechanism", cfg.mechanism,
                      "proposed | complete-info | uniform-price | random");
  };

  CLI::App* run = app.add_subcommand("run", "run the configured experiment sweep");
  add_common(run, true);
  run->add_flag("--dump-prefs", cfg.dump_preferences,
                "also write the preference-table audit dump");

  CLI::App* price = app.add_subcommand("price", "price a contract menu for the scenario");
  add_common(price, false);

  CLI::App* check = app.add_subcommand("check", "audit a priced menu for feasibility");
  add_common(check, false);
  check->add_option("--menu", menu_path, "menu JSON file to audit")->required();

  CLI::App* scene = app.add_subcommand("scene", "dump the generated topology");
  add_common(scene, false);

  CLI11_PARSE(app, argc, argv);
  lteu::cli::apply_env_overrides(cfg);

  if (run->parsed()) return lteu::cli::cmd_run(cfg, std::cout, std::cerr);
  if (price->parsed()) return lteu::cli::cmd_price(cfg, std::cout, std::cerr);
  if (check->parsed()) return lteu::cli::cmd_check(menu_path, cfg, std::cout, std::cerr);
  if (scene->parsed()) return lteu::cli::cmd_scene(cfg, std::cout, std::cerr);
  return lteu::exit_failure;
}
