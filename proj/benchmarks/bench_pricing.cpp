#include <benchmark/benchmark.h>

#include "lteu/pricing.hpp"
#include "lteu/rng.hpp"

namespace {

void BM_optimal_prices(benchmark::State& state) {
  const std::size_t K = static_cast<std::size_t>(state.range(0));
  lteu::rng gen(3);
  lteu::type_grid grid;
  std::vector<double> v_bar;
  double theta = 1.0, v = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    grid.thetas.push_back(theta);
    grid.probs.push_back(1.0 / K);
    theta += gen.uniform(0.5, 2.0);
    v += gen.uniform(0.0, 1.0);
    v_bar.push_back(v);
  }
  for (auto _ : state) {
    auto prices = lteu::optimal_prices(v_bar, grid);
    benchmark::DoNotOptimize(prices.data());
  }
}

void BM_ironing(benchmark::State& state) {
  const std::size_t K = static_cast<std::size_t>(state.range(0));
  lteu::rng gen(5);
  std::vector<double> values(K), weights(K, 1.0);
  for (auto& x : values) x = gen.uniform(0.0, 1.0);
  for (auto _ : state) {
    auto fit = lteu::iron_nondecreasing(values, weights);
    benchmark::DoNotOptimize(fit.data());
  }
}

}  // namespace

BENCHMARK(BM_optimal_prices)->Arg(6)->Arg(64);
BENCHMARK(BM_ironing)->Arg(6)->Arg(64)->Arg(1024);
BENCHMARK_MAIN();
