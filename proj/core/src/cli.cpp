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

#include "lteu/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>

#include "lteu/common.hpp"
#include "lteu/feasibility.hpp"
#include "lteu/harness.hpp"
#include "lteu/json_io.hpp"
#include "lteu/pricing.hpp"
#include "lteu/scenario.hpp"

namespace lteu::cli {
namespace {

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const missing_file_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_missing_file;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const config_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const infeasible_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

scenario_params load_scenario(const run_config& cfg) {
  if (cfg.config_path.empty()) throw config_error("no config file given (--config)");
  scenario_params params = scenario_params::from_config(keyed_config::from_file(cfg.config_path));
  if (!cfg.mechanism.empty()) params.mechanism = mechanism_from_string(cfg.mechanism);
  if (cfg.seed >= 0) params.base_seed = static_cast<std::uint64_t>(cfg.seed);
  return params;
}

std::filesystem::path ensure_out_dir(const run_config& cfg) {
  const std::filesystem::path dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir))
    throw missing_file_error("cannot create output directory: " + dir.string());
  return dir;
}

/// A single-instance copy of the scenario pinned to its configured size
/// (pricing and topology commands do not sweep).
scenario_params pinned_instance(const scenario_params& params) {
  scenario_params single = params;
  single.sweep = sweep_kind::num_users;
  single.sweep_values = {params.scene.num_users};
  return single;
}

}  // namespace

void apply_env_overrides(run_config& cfg) {
  if (cfg.seed < 0) {
    if (const char* env_seed = std::getenv("LTEU_SEED")) cfg.seed = std::atoll(env_seed);
  }
  if (cfg.out_dir.empty()) {
    if (const char* env_out = std::getenv("LTEU_OUT")) cfg.out_dir = env_out;
  }
}

int cmd_run(const run_config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const scenario_params params = load_scenario(cfg);
        const std::vector<experiment_record> records = run_experiment(params);
        const std::string csv =
            records_to_csv(records, params.base_seed, params.thetas.size());
        const std::string manifest = make_manifest(params);

        std::string prefs_doc;
        std::string matching_doc;
        if (cfg.dump_preferences) {
          // Audit dump: the first replication's preference tables and outcome.
          const auto game = play_matching_game(params, params.mechanism,
                                               params.sweep_values.front(), 0);
          prefs_doc = preferences_to_json(game->pairs);
          matching_doc = matching_to_json(game->result, game->pairs);
        }

        const auto dir = ensure_out_dir(cfg);
        write_text_file((dir / "metrics.csv").string(), csv);
        write_text_file((dir / "manifest.json").string(), manifest);
        if (cfg.dump_preferences) {
          write_text_file((dir / "preferences.json").string(), prefs_doc);
          write_text_file((dir / "matching.json").string(), matching_doc);
        }
        if (!cfg.quiet)
          out << "wrote " << (dir / "metrics.csv").string() << " ("
              << records.size() << " records) and manifest.json\n";
        return static_cast<int>(exit_ok);
      },
      err);
}

int cmd_price(const run_config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const scenario_params params = pinned_instance(load_scenario(cfg));
        const run_detail detail =
            run_single(params, mechanism_kind::proposed, params.scene.num_users, 0);
        const auto dir = ensure_out_dir(cfg);
        write_text_file((dir / "menu.json").string(), menu_to_json(detail.menu));
        if (!cfg.quiet) out << "wrote " << (dir / "menu.json").string() << "\n";
        return static_cast<int>(exit_ok);
      },
      err);
}

int cmd_check(const std::string& menu_path, const run_config& cfg, std::ostream& out,
              std::ostream& err) {
  return guarded(
      [&] {
        const contract_menu menu = menu_from_file(menu_path);
        const scenario_params params = pinned_instance(load_scenario(cfg));
        if (menu.entries.empty()) {
          out << "warning: empty menu, all conditions hold vacuously\n";
          out << "truth-telling: ok\nparticipation: ok\nordering: ok\n"
              << "feasibility conditions: ok\n";
          return static_cast<int>(exit_ok);
        }
        const type_grid grid = params.grid();
        if (menu.entries.size() != grid.size())
          throw config_error("menu has " + std::to_string(menu.entries.size()) +
                             " entries but the scenario has " + std::to_string(grid.size()) +
                             " types");

        // Interim valuations under the menu's own splits, reproducing the
        // sampling the pricing stage uses.
        const service_model model =
            model_for(params, mechanism_kind::proposed, params.scene.num_users, 0);
        std::vector<double> v_raw(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k)
          v_raw[k] = model.pooled_type_valuation(k, menu.entries[k].alpha,
                                                 menu.entries[k].beta,
                                                 params.required_rates_bps[k]);
        std::vector<double> weights(grid.size(), 1e-9);
        for (int u = 0; u < model.num_users(); ++u) weights[model.user_type(u)] += 1.0;
        const std::vector<double> v_bar =
            params.ironing ? iron_nondecreasing(v_raw, weights) : v_raw;

        const expected_quantities expected =
            expected_quantities::from_menu(v_bar, menu.prices(), grid);
        const tibs_report tibs = check_tibs(expected, grid);
        const iir_report iir = check_iir(expected, grid);
        const ordering_report ordering = check_ordering(expected);
        const conditions_report conditions = check_feasibility_conditions(expected, grid);

        out << describe(tibs) << "\n"
            << describe(iir) << "\n"
            << describe(ordering) << "\n"
            << describe(conditions) << "\n";
        const bool all_ok = tibs.ok() && iir.ok() && ordering.ok() && conditions.ok();
        return static_cast<int>(all_ok ? exit_ok : exit_failure);
      },
      err);
}

int cmd_scene(const run_config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const scenario_params params = pinned_instance(load_scenario(cfg));
        const network_scene scene = scene_for(params, params.scene.num_users, 0);
        const auto dir = ensure_out_dir(cfg);
        write_text_file((dir / "scene.json").string(), scene_to_json(scene));
        if (!cfg.quiet) out << "wrote " << (dir / "scene.json").string() << "\n";
        return static_cast<int>(exit_ok);
      },
      err);
}

}  // namespace lteu::cli
