#include <doctest.h>

#include "lteu/common.hpp"
#include "lteu/contract.hpp"
#include "lteu/json_io.hpp"
#include "lteu/types.hpp"

using namespace lteu;

TEST_CASE("the satisfaction curve peaks exactly at the demanded rate") {
  const auto vp = valuation_params::with_default_offset(2e-12, 0.5e6);
  CHECK(valuation(0.5e6, vp) == doctest::Approx(vp.v_offset));
  // Symmetric falloff on both sides of the peak.
  CHECK(valuation(0.4e6, vp) == doctest::Approx(valuation(0.6e6, vp)));
  CHECK(valuation(0.4e6, vp) < vp.v_offset);
  // The default offset pins the value of zero rate at zero.
  CHECK(valuation(0.0, vp) == doctest::Approx(0.0));
}

TEST_CASE("valuation matches an independent evaluation") {
  const double eta = 3.7e-13, r_req = 0.5e6, rate = 0.3e6;
  const auto vp = valuation_params::with_default_offset(eta, r_req);
  const long double expected =
      static_cast<long double>(eta) * r_req * r_req -
      static_cast<long double>(eta) * (rate - r_req) * (rate - r_req);
  CHECK(valuation(rate, vp) ==
        doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
}

TEST_CASE("valuation clamps at zero on extreme overshoot") {
  const auto vp = valuation_params::with_default_offset(2e-12, 0.2e6);
  CHECK(valuation(10e6, vp) == 0.0);
}

TEST_CASE("contract bounds are enforced") {
  CHECK_NOTHROW((contract{0.6, 0.4, 1.0}.validate()));
  CHECK_NOTHROW((contract{0.0, 0.0, 0.0}.validate()));  // declined
  CHECK_THROWS_AS((contract{0.7, 0.4, 1.0}.validate()), config_error);
  CHECK_THROWS_AS((contract{-0.1, 0.0, 1.0}.validate()), config_error);
  CHECK_THROWS_AS((contract{0.5, 0.2, -1.0}.validate()), config_error);
}

TEST_CASE("type grids demand strict order and unit mass") {
  type_grid ok{{1.0, 2.0, 3.0}, {0.2, 0.3, 0.5}};
  CHECK_NOTHROW(ok.validate());
  type_grid unordered{{1.0, 1.0, 3.0}, {0.2, 0.3, 0.5}};
  CHECK_THROWS_AS(unordered.validate(), config_error);
  type_grid short_mass{{1.0, 2.0}, {0.2, 0.3}};
  CHECK_THROWS_AS(short_mass.validate(), config_error);
  type_grid negative{{1.0, 2.0}, {-0.1, 1.1}};
  CHECK_THROWS_AS(negative.validate(), config_error);
}

TEST_CASE("type sampling follows the distribution") {
  type_grid grid{{1.0, 2.0, 3.0}, {0.5, 0.3, 0.2}};
  rng gen(31);
  std::vector<int> counts(3, 0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) ++counts[grid.sample(gen)];
  CHECK(counts[0] / static_cast<double>(draws) == doctest::Approx(0.5).epsilon(0.05));
  CHECK(counts[1] / static_cast<double>(draws) == doctest::Approx(0.3).epsilon(0.08));
  CHECK(counts[2] / static_cast<double>(draws) == doctest::Approx(0.2).epsilon(0.1));
}

TEST_CASE("menu documents round trip through JSON") {
  contract_menu menu;
  menu.entries = {{0.1, 0.2, 0.0}, {0.5, 0.25, 1.5}, {1.0, 0.0, 3.75}};
  const contract_menu back = menu_from_json(menu_to_json(menu));
  REQUIRE(back.entries.size() == menu.entries.size());
  for (std::size_t k = 0; k < menu.entries.size(); ++k) {
    CHECK(back.entries[k].alpha == menu.entries[k].alpha);
    CHECK(back.entries[k].beta == menu.entries[k].beta);
    CHECK(back.entries[k].price == menu.entries[k].price);
  }
}

TEST_CASE("malformed menu documents raise parse errors") {
  CHECK_THROWS_AS(menu_from_json("not json"), parse_error);
  CHECK_THROWS_AS(menu_from_json("{\"entries\": 3}"), parse_error);
  CHECK_THROWS_AS(menu_from_json("{\"entries\": [{\"type\": 1}]}"), parse_error);
  // Out-of-range type index.
  CHECK_THROWS_AS(
      menu_from_json(
          "{\"entries\": [{\"type\": 5, \"alpha\": 0, \"beta\": 0, \"price\": 0}]}"),
      parse_error);
}
