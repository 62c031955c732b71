#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lteu/cli.hpp"
#include "lteu/common.hpp"
#include "lteu/harness.hpp"
#include "lteu/json_io.hpp"
#include "lteu/scenario.hpp"

#include "helpers.hpp"

using namespace lteu;

namespace {

std::string small_config_text() {
  return lteu_test::small_params().to_config().to_text();
}

cli::run_config make_cfg(const std::filesystem::path& config,
                         const std::filesystem::path& out) {
  cli::run_config cfg;
  cfg.config_path = config.string();
  cfg.out_dir = out.string();
  cfg.quiet = true;
  return cfg;
}

}  // namespace

TEST_CASE("run writes metrics and a replayable manifest") {
  lteu_test::temp_dir dir("run");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());

  std::ostringstream out, err;
  const auto cfg = make_cfg(config, dir.path / "out1");
  REQUIRE(cli::cmd_run(cfg, out, err) == exit_ok);
  REQUIRE(std::filesystem::exists(dir.path / "out1" / "metrics.csv"));
  REQUIRE(std::filesystem::exists(dir.path / "out1" / "manifest.json"));

  // Replay: extract the echoed config from the manifest, run it elsewhere,
  // and demand byte-identical metrics.
  const auto manifest =
      nlohmann::json::parse(read_text_file((dir.path / "out1" / "manifest.json").string()));
  const auto config2 = dir.path / "replay.cfg";
  write_text_file(config2.string(), manifest["config_text"].get<std::string>());
  const auto cfg2 = make_cfg(config2, dir.path / "out2");
  REQUIRE(cli::cmd_run(cfg2, out, err) == exit_ok);
  CHECK(read_text_file((dir.path / "out1" / "metrics.csv").string()) ==
        read_text_file((dir.path / "out2" / "metrics.csv").string()));
}

TEST_CASE("a missing config file exits with its own code and a message") {
  std::ostringstream out, err;
  cli::run_config cfg;
  cfg.config_path = "/nonexistent/scenario.cfg";
  CHECK(cli::cmd_run(cfg, out, err) == exit_missing_file);
  CHECK(err.str().find("scenario.cfg") != std::string::npos);
}

TEST_CASE("schema violations exit with the config code") {
  lteu_test::temp_dir dir("schema");
  const auto config = dir.path / "bad.cfg";

  SUBCASE("zero replications") {
    scenario_params p = lteu_test::small_params();
    p.replications = 0;
    write_text_file(config.string(), p.to_config().to_text());
  }
  SUBCASE("unknown key") {
    write_text_file(config.string(), small_config_text() + "not_a_key = 1\n");
  }
  SUBCASE("bad mechanism") {
    keyed_config kc = lteu_test::small_params().to_config();
    kc.set("mechanism", "magic");
    write_text_file(config.string(), kc.to_text());
  }
  std::ostringstream out, err;
  CHECK(cli::cmd_run(make_cfg(config, dir.path / "out"), out, err) == exit_config);
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("priced menus audit clean") {
  lteu_test::temp_dir dir("price");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());

  std::ostringstream out, err;
  const auto cfg = make_cfg(config, dir.path);
  REQUIRE(cli::cmd_price(cfg, out, err) == exit_ok);
  const auto menu_path = dir.path / "menu.json";
  REQUIRE(std::filesystem::exists(menu_path));
  const contract_menu menu = menu_from_file(menu_path.string());
  CHECK(menu.entries.size() == 3);

  std::ostringstream check_out;
  CHECK(cli::cmd_check(menu_path.string(), cfg, check_out, err) == exit_ok);
  CHECK(check_out.str().find("truth-telling: ok") != std::string::npos);
  CHECK(check_out.str().find("participation: ok") != std::string::npos);
  CHECK(check_out.str().find("ordering: ok") != std::string::npos);
  CHECK(check_out.str().find("feasibility conditions: ok") != std::string::npos);
}

TEST_CASE("a single-type scenario prices one entry at theta times value") {
  lteu_test::temp_dir dir("single");
  scenario_params p = lteu_test::small_params();
  p.thetas = {2.0};
  p.type_probs = {1.0};
  p.required_rates_bps = {0.3e6};
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), p.to_config().to_text());

  std::ostringstream out, err;
  const auto cfg = make_cfg(config, dir.path);
  REQUIRE(cli::cmd_price(cfg, out, err) == exit_ok);
  const contract_menu menu = menu_from_file((dir.path / "menu.json").string());
  REQUIRE(menu.entries.size() == 1);
  CHECK(menu.entries[0].price >= 0.0);
  // The single entry extracts the full surplus: interim surplus is zero, so
  // the audit passes with equality.
  const run_detail d = run_single(p, mechanism_kind::proposed, p.scene.num_users, 0);
  CHECK(menu.entries[0].price == doctest::Approx(2.0 * d.v_bar_nominal[0]));
  std::ostringstream check_out;
  CHECK(cli::cmd_check((dir.path / "menu.json").string(), cfg, check_out, err) == exit_ok);
}

TEST_CASE("the preference audit dump lists ranked options per pair") {
  lteu_test::temp_dir dir("prefs");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  std::ostringstream out, err;
  auto cfg = make_cfg(config, dir.path);
  cfg.dump_preferences = true;
  REQUIRE(cli::cmd_run(cfg, out, err) == exit_ok);
  const auto doc =
      nlohmann::json::parse(read_text_file((dir.path / "preferences.json").string()));
  REQUIRE(doc["pairs"].size() > 0);
  CHECK(doc["pairs"][0].contains("options"));
  const auto matching =
      nlohmann::json::parse(read_text_file((dir.path / "matching.json").string()));
  CHECK(matching.contains("assignments"));
  CHECK(matching.contains("unmatched"));
}

TEST_CASE("a hand-broken price is reported and fails the audit") {
  lteu_test::temp_dir dir("broken");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  std::ostringstream out, err;
  const auto cfg = make_cfg(config, dir.path);
  REQUIRE(cli::cmd_price(cfg, out, err) == exit_ok);

  auto doc = nlohmann::json::parse(read_text_file((dir.path / "menu.json").string()));
  doc["entries"][0]["price"] = doc["entries"][0]["price"].get<double>() + 1.0;
  const auto broken = dir.path / "broken.json";
  write_text_file(broken.string(), doc.dump());

  std::ostringstream check_out;
  CHECK(cli::cmd_check(broken.string(), cfg, check_out, err) == exit_failure);
  CHECK(check_out.str().find("participation:") != std::string::npos);
  CHECK(check_out.str().find("violation") != std::string::npos);
}

TEST_CASE("an empty menu passes vacuously with a warning") {
  lteu_test::temp_dir dir("empty");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  const auto menu_path = dir.path / "empty.json";
  write_text_file(menu_path.string(), "{\"format_version\": 1, \"entries\": []}\n");
  std::ostringstream out, err;
  CHECK(cli::cmd_check(menu_path.string(), make_cfg(config, dir.path), out, err) == exit_ok);
  CHECK(out.str().find("warning") != std::string::npos);
}

TEST_CASE("malformed menu documents exit with the parse code") {
  lteu_test::temp_dir dir("badmenu");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  const auto menu_path = dir.path / "garbage.json";
  write_text_file(menu_path.string(), "{{{");
  std::ostringstream out, err;
  CHECK(cli::cmd_check(menu_path.string(), make_cfg(config, dir.path), out, err) ==
        exit_parse);
}

TEST_CASE("scene dumps are versioned topology documents") {
  lteu_test::temp_dir dir("scene");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  std::ostringstream out, err;
  REQUIRE(cli::cmd_scene(make_cfg(config, dir.path), out, err) == exit_ok);
  const auto doc =
      nlohmann::json::parse(read_text_file((dir.path / "scene.json").string()));
  CHECK(doc["format_version"] == 1);
  CHECK(doc["bs"].size() == 3);
  CHECK(doc["users"].size() == 12);
}

TEST_CASE("environment variables fill unset seed and output directory") {
  cli::run_config cfg;
  setenv("LTEU_SEED", "77", 1);
  setenv("LTEU_OUT", "/tmp/lteu_env_out", 1);
  cli::apply_env_overrides(cfg);
  CHECK(cfg.seed == 77);
  CHECK(cfg.out_dir == "/tmp/lteu_env_out");
  // Explicit values win.
  cfg.seed = 5;
  cfg.out_dir = "explicit";
  cli::apply_env_overrides(cfg);
  CHECK(cfg.seed == 5);
  CHECK(cfg.out_dir == "explicit");
  unsetenv("LTEU_SEED");
  unsetenv("LTEU_OUT");
}

TEST_CASE("seed overrides change the outputs deterministically") {
  lteu_test::temp_dir dir("seed");
  const auto config = dir.path / "scenario.cfg";
  write_text_file(config.string(), small_config_text());
  std::ostringstream out, err;
  auto cfg = make_cfg(config, dir.path / "a");
  cfg.seed = 101;
  REQUIRE(cli::cmd_run(cfg, out, err) == exit_ok);
  auto cfg_b = make_cfg(config, dir.path / "b");
  cfg_b.seed = 101;
  REQUIRE(cli::cmd_run(cfg_b, out, err) == exit_ok);
  CHECK(read_text_file((dir.path / "a" / "metrics.csv").string()) ==
        read_text_file((dir.path / "b" / "metrics.csv").string()));
  auto cfg_c = make_cfg(config, dir.path / "c");
  cfg_c.seed = 102;
  REQUIRE(cli::cmd_run(cfg_c, out, err) == exit_ok);
  CHECK(read_text_file((dir.path / "a" / "metrics.csv").string()) !=
        read_text_file((dir.path / "c" / "metrics.csv").string()));
}
