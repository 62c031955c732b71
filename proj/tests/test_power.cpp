#include <doctest.h>

#include <cmath>

#include "lteu/power.hpp"
#include "lteu/rng.hpp"

using namespace lteu;

namespace {

gain_matrix manual_gains(int num_bs, int num_users, const std::vector<double>& bs_user) {
  gain_matrix g;
  g.num_bs = num_bs;
  g.num_users = num_users;
  g.bs_user = bs_user;
  return g;
}

}  // namespace

TEST_CASE("zero rate demands need zero power") {
  const gain_matrix g = manual_gains(2, 3, {1, 1, 1, 1, 1, 1});
  power_demand d;
  d.serving_bs = {0, 1, 0};
  d.rate_bps = {0, 0, 0};
  d.bandwidth_hz = {1, 1, 1};
  const power_profile p = solve_power_profile(d, g, 1.0);
  CHECK(p.converged);
  for (double w : p.user_power_w) CHECK(w == 0.0);
}

TEST_CASE("single user with unit gain and unit-bandwidth noise") {
  // One served user, no interferers: demanding r = w costs e - 1 watts.
  const gain_matrix g = manual_gains(1, 1, {1.0});
  power_demand d;
  d.serving_bs = {0};
  d.rate_bps = {1.0};
  d.bandwidth_hz = {1.0};
  const power_profile p = solve_power_profile(d, g, 1.0);
  CHECK(p.converged);
  CHECK(p.user_power_w[0] == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-9));
  CHECK(p.max_residual <= k_power_tolerance);
}

TEST_CASE("two coupled cells match the algebraic solution") {
  // Users 0 and 1 served by BSs 0 and 1; cross gains couple the powers:
  //   p0 = a0 (n0 + g10 p1) / g00,  p1 = a1 (n1 + g01 p0) / g11,
  // a linear 2x2 system solved in closed form here.
  const double g00 = 1.0, g10 = 0.2, g01 = 0.3, g11 = 0.8;
  const gain_matrix g = manual_gains(2, 2, {g00, g01, g10, g11});
  power_demand d;
  d.serving_bs = {0, 1};
  d.rate_bps = {0.9, 1.4};
  d.bandwidth_hz = {1.0, 2.0};
  const double noise_psd = 0.5;

  const double a0 = std::expm1(d.rate_bps[0] / d.bandwidth_hz[0]);
  const double a1 = std::expm1(d.rate_bps[1] / d.bandwidth_hz[1]);
  const double n0 = noise_psd * d.bandwidth_hz[0];
  const double n1 = noise_psd * d.bandwidth_hz[1];
  // p0 = A + B p1, p1 = C + D p0.
  const double A = a0 * n0 / g00, B = a0 * g10 / g00;
  const double C = a1 * n1 / g11, D = a1 * g01 / g11;
  const double p0_expected = (A + B * C) / (1.0 - B * D);
  const double p1_expected = C + D * p0_expected;

  const power_profile p = solve_power_profile(d, g, noise_psd);
  REQUIRE(p.converged);
  CHECK(p.user_power_w[0] == doctest::Approx(p0_expected).epsilon(1e-8));
  CHECK(p.user_power_w[1] == doctest::Approx(p1_expected).epsilon(1e-8));
  CHECK(p.max_residual <= k_power_tolerance);
}

TEST_CASE("raising one demand never lowers any converged power") {
  rng gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int S = 3, N = 6;
    std::vector<double> gains(S * N);
    for (auto& x : gains) x = gen.uniform(1e-4, 1.0);
    const gain_matrix g = manual_gains(S, N, gains);
    power_demand d;
    d.serving_bs.resize(N);
    d.rate_bps.resize(N);
    d.bandwidth_hz.assign(N, 1.0);
    for (int i = 0; i < N; ++i) {
      d.serving_bs[i] = static_cast<int>(gen.uniform_int(S));
      d.rate_bps[i] = gen.uniform(0.0, 0.3);
    }
    const power_profile before = solve_power_profile(d, g, 1e-3);
    if (!before.converged) continue;
    power_demand d2 = d;
    const int bump = static_cast<int>(gen.uniform_int(N));
    d2.rate_bps[bump] += 0.2;
    const power_profile after = solve_power_profile(d2, g, 1e-3);
    if (!after.converged) continue;
    for (int i = 0; i < N; ++i)
      CHECK(after.user_power_w[i] >= before.user_power_w[i] * (1.0 - 1e-7));
  }
}

TEST_CASE("mutually unsupportable demands are flagged, not returned") {
  // Symmetric cell pair with cross gains as strong as the direct links and
  // demands whose product of required SINRs exceeds the coupling limit.
  const gain_matrix g = manual_gains(2, 2, {1.0, 1.0, 1.0, 1.0});
  power_demand d;
  d.serving_bs = {0, 1};
  d.rate_bps = {2.0, 2.0};  // a = e^2 - 1 = 6.39 each, a0*a1 > 1
  d.bandwidth_hz = {1.0, 1.0};
  const power_profile p = solve_power_profile(d, g, 1.0);
  CHECK_FALSE(p.converged);
}

TEST_CASE("the power cap reports infeasibility") {
  const gain_matrix g = manual_gains(1, 1, {1.0});
  power_demand d;
  d.serving_bs = {0};
  d.rate_bps = {1.0};
  d.bandwidth_hz = {1.0};
  d.power_cap_w = 0.5;  // e - 1 needed
  const power_profile p = solve_power_profile(d, g, 1.0);
  CHECK_FALSE(p.converged);
}

TEST_CASE("solver output is deterministic") {
  const gain_matrix g = manual_gains(2, 2, {1.0, 0.1, 0.2, 0.9});
  power_demand d;
  d.serving_bs = {0, 1};
  d.rate_bps = {0.5, 0.7};
  d.bandwidth_hz = {1.0, 1.0};
  const power_profile a = solve_power_profile(d, g, 1.0);
  const power_profile b = solve_power_profile(d, g, 1.0);
  CHECK(a.user_power_w == b.user_power_w);
  CHECK(a.iterations == b.iterations);
}
