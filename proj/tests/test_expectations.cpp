#include <doctest.h>

#include <cmath>

#include "lteu/common.hpp"
#include "lteu/estimates.hpp"
#include "lteu/harness.hpp"
#include "lteu/options.hpp"

#include "helpers.hpp"

using namespace lteu;

namespace {

struct manual_setup {
  scene_params sp;
  radio_params radio;
  std::vector<vec2> bs, wap, users;
  std::vector<std::size_t> types;
  type_grid grid{{1.0, 2.0}, {0.5, 0.5}};
  std::vector<double> rates{0.0, 1.0};
  double eta_v = 0.5;
  int activity_slots = 16;
  int cost_draws = 64;
  std::uint64_t seed = 9;

  manual_setup() {
    sp.area_side_m = 100.0;
    sp.num_bs = 1;
    sp.num_wap = 0;
    sp.num_users = 1;
    sp.licensed_rbs = 1;
    sp.unlicensed_channels = 1;
    sp.total_bandwidth_hz = 1.0;       // 1 Hz per resource block
    sp.unlicensed_channel_width_hz = 1.0;
    sp.noise_psd_dbm_hz = 30.0;        // 1 W/Hz
    bs = {{0.0, 0.0}};
    users = {{0.0, 0.0}};  // clamped distance, unit gain
    types = {1};
    radio.wifi_activity_prob = 0.0;
    radio.nominal_bs_activity = 0.0;
  }

  service_model build() {
    sp.num_bs = static_cast<int>(bs.size());
    sp.num_wap = static_cast<int>(wap.size());
    sp.num_users = static_cast<int>(users.size());
    network_scene scene;
    scene.params = sp;
    scene.bs_positions = bs;
    scene.wap_positions = wap;
    scene.user_positions = users;
    quota_params quotas;
    quotas.licensed_override = 1;
    quotas.unlicensed_override = 1;
    service_model::inputs in;
    in.scene = scene;
    in.grid = grid;
    in.required_rate_by_type = rates;
    in.eta_v = eta_v;
    in.radio = radio;
    in.sampling = {activity_slots, cost_draws};
    in.menu = build_option_menu(sp, quotas, 1.0, radio.natural_log);
    in.user_type = types;
    in.file_bits = 4;
    in.chunk_bits = 4;  // one chunk per user
    in.seed = seed;
    return service_model(in);
  }
};

}  // namespace

TEST_CASE("declined split yields zero valuation") {
  manual_setup setup;
  const service_model model = setup.build();
  CHECK(model.expected_valuation(0, 1, 0.0, 0.0, 8, 1) == doctest::Approx(0.0));
}

TEST_CASE("degenerate uncertainty reduces to the deterministic valuation") {
  manual_setup setup;
  const service_model model = setup.build();
  // Licensed-only split: no slot sampling enters; the estimate is exactly
  // the curve at alpha * r.
  const double alpha = 0.6;
  const auto vp = valuation_params::with_default_offset(setup.eta_v, setup.rates[1]);
  const double expected = valuation(alpha * setup.rates[1], vp);
  CHECK(model.expected_valuation(0, 1, alpha, 0.0, 1, 7) == doctest::Approx(expected));
  CHECK(model.expected_valuation(0, 1, alpha, 0.0, 64, 8) == doctest::Approx(expected));
}

TEST_CASE("slot-sampled valuation matches exhaustive activity enumeration") {
  manual_setup setup;
  setup.wap = {{2.0, 0.0}, {3.0, 0.0}};  // both materially above the noise
  setup.radio.wifi_activity_prob = 0.5;
  setup.radio.unlicensed_tx_power_w = 2.0;
  setup.radio.wap_tx_power_w = 8.0;
  setup.radio.i_th_w = 100.0;  // never defer in this test
  setup.activity_slots = 4096;
  const service_model model = setup.build();

  const double alpha = 0.3, beta = 0.5;
  const auto vp = valuation_params::with_default_offset(setup.eta_v, setup.rates[1]);
  const double g_srv = 1.0;  // clamped distance
  const double sigma2 = std::pow(10.0, 30.0 / 10.0) * 1e-3 * 1.0;

  // Two independent WAPs: enumerate the four activity states exactly.
  double mean = 0.0, second = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double interference = 0.0;
      if (a) interference += 8.0 * std::pow(2.0, -3.0);
      if (b) interference += 8.0 * std::pow(3.0, -3.0);
      const double kappa =
          1.0 * std::log1p(2.0 * g_srv / (sigma2 + interference));
      const double v = valuation(alpha * setup.rates[1] + beta * kappa, vp);
      mean += 0.25 * v;
      second += 0.25 * v * v;
    }
  const double sd = std::sqrt(std::max(0.0, second - mean * mean));
  const double se = sd / std::sqrt(4096.0);

  const double estimate = model.expected_valuation(0, 1, alpha, beta, 4096, 21);
  CHECK(std::abs(estimate - mean) <= std::max(3.0 * se, 1e-9));
}

TEST_CASE("serving cost is zero for a zero-rate profile") {
  manual_setup setup;
  const service_model model = setup.build();
  CHECK(model.serving_cost({0}, 0) == doctest::Approx(0.0));
}

TEST_CASE("single-user serving cost has the closed form") {
  manual_setup setup;
  setup.radio.cost_per_watt = 3.0;
  const service_model model = setup.build();
  // Unit gain, 1 Hz share, 1 W/Hz noise: power = e^{r/w} - 1 = e - 1.
  CHECK(model.nominal_bandwidth_hz(0) == doctest::Approx(1.0));
  CHECK(model.serving_cost({1}, 0) ==
        doctest::Approx(3.0 * (std::exp(1.0) - 1.0)).epsilon(1e-9));
}

TEST_CASE("coupled two-cell serving cost matches the algebraic solution") {
  manual_setup setup;
  setup.bs = {{0.0, 0.0}, {40.0, 0.0}};
  setup.users = {{1.0, 0.0}, {39.0, 0.0}};
  setup.types = {1, 1};
  setup.sp.licensed_rbs = 2;  // one block per cell
  setup.sp.total_bandwidth_hz = 2.0;
  const service_model model = setup.build();

  const gain_matrix g = build_gain_matrix(model.scene());
  const double w0 = model.nominal_bandwidth_hz(0), w1 = model.nominal_bandwidth_hz(1);
  const double noise = std::pow(10.0, 30.0 / 10.0) * 1e-3;
  const double a0 = std::expm1(setup.rates[1] / w0), a1 = std::expm1(setup.rates[1] / w1);
  const double A = a0 * noise * w0 / g.bs_gain(0, 0);
  const double B = a0 * g.bs_gain(1, 0) / g.bs_gain(0, 0);
  const double C = a1 * noise * w1 / g.bs_gain(1, 1);
  const double D = a1 * g.bs_gain(0, 1) / g.bs_gain(1, 1);
  const double p0 = (A + B * C) / (1.0 - B * D);

  CHECK(model.serving_bs(0) == 0);
  CHECK(model.serving_bs(1) == 1);
  CHECK(model.serving_cost({1, 1}, 0) == doctest::Approx(p0).epsilon(1e-8));
}

TEST_CASE("expected chunk cost agrees with profile enumeration") {
  manual_setup setup;
  setup.bs = {{0.0, 0.0}, {40.0, 0.0}};
  setup.users = {{1.0, 0.0}, {39.0, 0.0}};
  setup.types = {1, 1};
  setup.cost_draws = 4000;
  const service_model model = setup.build();
  std::vector<user_signing> signings(2);
  signings[0] = {true, 1, setup.rates[1], 2.0};
  signings[1] = {true, 1, setup.rates[1], 2.0};
  service_model priced = setup.build();
  priced.set_signings(signings);

  // Enumerate the opponent-type profiles (both users i.i.d. over two types)
  // and average the interference factor seen by user 0.
  const gain_matrix g = build_gain_matrix(model.scene());
  const double noise = std::pow(10.0, 30.0 / 10.0) * 1e-3;
  const double w0 = model.nominal_bandwidth_hz(0), w1 = model.nominal_bandwidth_hz(1);
  double mean_factor = 0.0, second = 0.0;
  for (std::size_t t0 : {0, 1})
    for (std::size_t t1 : {0, 1}) {
      power_demand d;
      d.serving_bs = {0, 1};
      d.rate_bps = {setup.rates[t0], setup.rates[t1]};
      d.bandwidth_hz = {w0, w1};
      const power_profile p = solve_power_profile(d, g, noise);
      REQUIRE(p.converged);
      const double factor = noise * w0 + p.bs_total_w[1] * g.bs_gain(1, 0);
      mean_factor += 0.25 * factor;
      second += 0.25 * factor * factor;
    }
  const double sd = std::sqrt(std::max(0.0, second - mean_factor * mean_factor));
  const double se = sd / std::sqrt(4000.0);

  const double a0 = std::expm1(setup.rates[1] / w0);
  const double expected_cost = a0 * mean_factor / g.bs_gain(0, 0);
  const double tolerance = 3.0 * a0 * se / g.bs_gain(0, 0) + 1e-15;
  // Option 0 is BS 0's first resource block.
  CHECK(std::abs(priced.chunk_cost(0, 0) - expected_cost) <= tolerance);
}

TEST_CASE("operator margin and promotion behave as defined") {
  manual_setup setup;
  service_model model = setup.build();
  std::vector<user_signing> signings(1);
  signings[0] = {true, 1, setup.rates[1], 2.0};
  model.set_signings(signings);

  const double cost = model.chunk_cost(0, 0);
  CHECK(model.e_gamma(0, 0) == doctest::Approx(2.0 - cost));
  // Resemblance suppresses the promotion entirely.
  CHECK(model.bs_utility(0, 0, true, 1.0) == doctest::Approx(model.e_gamma(0, 0)));
  // Smaller priority coefficient, larger promotion.
  const double promoted_1 = model.bs_utility(0, 0, false, 1.0);
  const double promoted_4 = model.bs_utility(0, 0, false, 4.0);
  CHECK(promoted_1 > promoted_4);
  CHECK(promoted_4 > model.e_gamma(0, 0));
  const double theta = setup.grid.thetas[1];
  CHECK(promoted_1 - model.e_gamma(0, 0) == doctest::Approx(cost / (theta * 1.0)));
}

TEST_CASE("zero-cost chunks earn the full price as margin") {
  manual_setup setup;
  service_model model = setup.build();
  std::vector<user_signing> signings(1);
  signings[0] = {true, 0, 0.0, 1.5};  // zero-rate entry, priced anyway
  model.set_signings(signings);
  CHECK(model.chunk_cost(0, 0) == 0.0);
  CHECK(model.e_gamma(0, 0) == doctest::Approx(1.5));
  // The declined contract earns nothing.
  signings[0] = {true, 0, 0.0, 0.0};
  model.set_signings(signings);
  CHECK(model.e_gamma(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("nonpositive promotion denominators are rejected") {
  manual_setup setup;
  setup.grid = type_grid{{-2.0, 1.0}, {0.5, 0.5}};
  service_model model = setup.build();
  std::vector<user_signing> signings(1);
  signings[0] = {true, 0, 0.0, 1.0};  // claimed entry has theta = -2
  model.set_signings(signings);
  CHECK_THROWS_AS(model.bs_utility(0, 0, false, 1.0), config_error);
}

TEST_CASE("preference lists rank by utility and drop losses") {
  manual_setup setup;
  setup.radio.unlicensed_tx_power_w = 1e-9;  // unlicensed barely delivers
  service_model model = setup.build();
  std::vector<user_signing> signings(1);
  signings[0] = {true, 1, setup.rates[1], 0.1};
  model.set_signings(signings);

  user_subfile_pair probe;
  probe.user = 0;
  const std::vector<int> prefs = model.build_preference_list(probe);
  REQUIRE_FALSE(prefs.empty());
  // The weak unlicensed link prices itself out: only the licensed block
  // clears the participation bar.
  CHECK(prefs.size() == 1);

  // Order must match a direct utility sort of the same candidates.
  for (std::size_t i = 1; i < prefs.size(); ++i)
    CHECK(model.option_utility(0, prefs[i - 1]) >=
          model.option_utility(0, prefs[i]) - 1e-15);
  for (int m : prefs) CHECK(model.option_utility(0, m) >= 0.0);

  // Licensed service at the demanded rate dominates a weak unlicensed link.
  CHECK(model.menu().licensed(prefs.front()));

  // A price hike shifts every option utility down by the same amount and
  // can empty the list entirely.
  const double before = model.option_utility(0, prefs.front());
  signings[0].price = 0.6;
  model.set_signings(signings);
  CHECK(model.option_utility(0, prefs.front()) == doctest::Approx(before - 0.5));
  signings[0].price = 1e9;
  model.set_signings(signings);
  CHECK(model.build_preference_list(probe).empty());

  // Non-participants have no preferences at all.
  signings[0] = {};
  model.set_signings(signings);
  CHECK(model.build_preference_list(probe).empty());
}

TEST_CASE("an always-on WAP inside its range silences the channel") {
  manual_setup setup;
  setup.wap = {{20.0, 0.0}};  // 20 m from the user, range 90 m
  setup.radio.wifi_activity_prob = 1.0;
  setup.radio.wap_tx_power_w = 2e-9;
  setup.radio.i_th_w = 0.0;  // derive from the WAP range
  const service_model model = setup.build();
  CHECK(model.kappa_nominal(0, 0, 0) == 0.0);
  // The same WAP never transmitting leaves the channel clear.
  manual_setup quiet = setup;
  quiet.radio.wifi_activity_prob = 0.0;
  const service_model clear_model = quiet.build();
  CHECK(clear_model.kappa_nominal(0, 0, 0) > 0.0);
}

TEST_CASE("capacity-greedy policy fills licensed slots from the top type down") {
  scenario_params p = lteu_test::small_params();
  const service_model model = model_for(p, mechanism_kind::proposed, 12, 0);
  const split_policy policy = model.nominal_policy(p.nominal_unlicensed_acceptance);
  REQUIRE(policy.alpha.size() == 3);
  // Licensed capacity: 6 blocks x quota 2 = 12 chunk slots for 24 chunks.
  // The top type must be covered at least as well as the ones below it.
  CHECK(policy.alpha[2] >= policy.alpha[1]);
  CHECK(policy.alpha[1] >= policy.alpha[0]);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(policy.alpha[k] >= 0.0);
    CHECK(policy.alpha[k] + policy.beta[k] <= 1.0 + 1e-12);
  }
}

TEST_CASE("interim valuations are deterministic in the model seed") {
  scenario_params p = lteu_test::small_params();
  const service_model a = model_for(p, mechanism_kind::proposed, 12, 0);
  const service_model b = model_for(p, mechanism_kind::proposed, 12, 0);
  const split_policy policy = a.nominal_policy(p.nominal_unlicensed_acceptance);
  CHECK(a.v_bar_under(policy) == b.v_bar_under(policy));
}
