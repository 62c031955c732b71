#include <benchmark/benchmark.h>

#include "lteu/power.hpp"
#include "lteu/rng.hpp"
#include "lteu/scene.hpp"

namespace {

struct fixture {
  lteu::network_scene scene;
  lteu::gain_matrix gains;
  lteu::power_demand demand;

  explicit fixture(int users) {
    lteu::scene_params p;
    p.num_users = users;
    scene = lteu::generate_scene(p, 7);
    gains = lteu::build_gain_matrix(scene);
    lteu::rng gen(11);
    demand.serving_bs.resize(users);
    demand.rate_bps.resize(users);
    demand.bandwidth_hz.assign(users, p.rb_bandwidth_hz());
    for (int u = 0; u < users; ++u) {
      int best = 0;
      for (int s = 1; s < p.num_bs; ++s)
        if (gains.bs_gain(s, u) > gains.bs_gain(best, u)) best = s;
      demand.serving_bs[u] = best;
      demand.rate_bps[u] = gen.uniform(0.0, 0.7e6);
    }
  }
};

void BM_power_fixed_point(benchmark::State& state) {
  const fixture fx(static_cast<int>(state.range(0)));
  const double noise = fx.scene.params.noise_psd_w_hz();
  for (auto _ : state) {
    auto profile = lteu::solve_power_profile(fx.demand, fx.gains, noise);
    benchmark::DoNotOptimize(profile.user_power_w.data());
  }
}

}  // namespace

BENCHMARK(BM_power_fixed_point)->Arg(50)->Arg(200)->Arg(1000);
BENCHMARK_MAIN();
