#include <doctest.h>

#include "lteu/common.hpp"
#include "lteu/config.hpp"
#include "lteu/scenario.hpp"

#include "helpers.hpp"

using namespace lteu;

TEST_CASE("keyed config parses values, comments and lists") {
  const auto cfg = keyed_config::from_string(
      "# comment line\n"
      "num_bs = 20\n"
      "eta_v = 2e-12   # trailing comment\n"
      "type_thetas = 1, 2, 3.5\n"
      "mechanism = proposed\n");
  CHECK(cfg.get_int("num_bs", 0) == 20);
  CHECK(cfg.get_double("eta_v", 0) == doctest::Approx(2e-12));
  CHECK(cfg.get_list("type_thetas", {}) == std::vector<double>{1.0, 2.0, 3.5});
  CHECK(cfg.get_string("mechanism", "") == "proposed");
  CHECK(cfg.get_int("absent", 7) == 7);
}

TEST_CASE("keyed config rejects malformed input") {
  CHECK_THROWS_AS(keyed_config::from_string("novalue\n"), config_error);
  CHECK_THROWS_AS(keyed_config::from_string("a = 1\na = 2\n"), config_error);
  CHECK_THROWS_AS(keyed_config::from_string("n = abc\n").get_int("n", 0), config_error);
  CHECK_THROWS_AS(keyed_config::from_string("n = 1.5\n").get_int("n", 0), config_error);
  CHECK_THROWS_AS(keyed_config::from_string("xs = 1,,2\n").get_list("xs", {}), config_error);
}

TEST_CASE("unknown keys are named in the schema error") {
  const auto cfg = keyed_config::from_string("num_bs = 5\nbogus_key = 1\n");
  try {
    scenario_params::from_config(cfg);
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
  }
}

TEST_CASE("scenario parameters survive an echo round trip") {
  const scenario_params p = lteu_test::small_params();
  const scenario_params q = scenario_params::from_config(
      keyed_config::from_string(p.to_config().to_text()));
  CHECK(q.to_config().to_text() == p.to_config().to_text());
  CHECK(q.scene.num_users == p.scene.num_users);
  CHECK(q.thetas == p.thetas);
  CHECK(q.required_rates_bps == p.required_rates_bps);
  CHECK(q.quotas.licensed_override == p.quotas.licensed_override);
}

TEST_CASE("scenario validation rejects bad values") {
  scenario_params p = lteu_test::small_params();
  p.replications = 0;
  CHECK_THROWS_AS(p.validate(), config_error);

  p = lteu_test::small_params();
  p.sweep_values.clear();
  CHECK_THROWS_AS(p.validate(), config_error);

  p = lteu_test::small_params();
  p.thetas = {2.0, 2.0, 4.0};  // not strictly increasing
  CHECK_THROWS_AS(p.validate(), config_error);

  p = lteu_test::small_params();
  p.type_probs = {0.5, 0.3, 0.3};  // sums to 1.1
  CHECK_THROWS_AS(p.validate(), config_error);
}

TEST_CASE("mechanism names round trip") {
  for (auto m : {mechanism_kind::proposed, mechanism_kind::complete_info,
                 mechanism_kind::uniform_price, mechanism_kind::random_alloc})
    CHECK(mechanism_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(mechanism_from_string("nonsense"), config_error);
}
