#include <benchmark/benchmark.h>

#include <algorithm>

#include "lteu/matching.hpp"
#include "lteu/rng.hpp"

namespace {

struct synthetic_game {
  lteu::da_problem problem;
  std::vector<std::vector<double>> score;  // [option][pair]

  synthetic_game(int pairs, int options, int quota) {
    lteu::rng gen(17);
    problem.quotas.assign(options, quota);
    score.assign(options, std::vector<double>(pairs));
    for (auto& row : score)
      for (auto& s : row) s = gen.uniform01();
    problem.prefs.resize(pairs);
    for (int p = 0; p < pairs; ++p) {
      std::vector<std::pair<double, int>> ranked;
      for (int m = 0; m < options; ++m) ranked.emplace_back(gen.uniform01(), m);
      std::sort(ranked.begin(), ranked.end(), std::greater<>());
      const int keep = 8 + static_cast<int>(gen.uniform_int(8));
      for (int i = 0; i < keep && i < options; ++i)
        problem.prefs[p].push_back(ranked[i].second);
    }
    problem.rank = [this](int option, std::vector<int> candidates,
                          const std::vector<std::size_t>&) {
      std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        if (score[option][a] != score[option][b])
          return score[option][a] > score[option][b];
        return a < b;
      });
      return candidates;
    };
  }
};

void BM_deferred_acceptance(benchmark::State& state) {
  const synthetic_game game(static_cast<int>(state.range(0)), 120, 12);
  for (auto _ : state) {
    auto result = lteu::deferred_acceptance(game.problem);
    benchmark::DoNotOptimize(result.proposals);
  }
}

}  // namespace

BENCHMARK(BM_deferred_acceptance)->Arg(200)->Arg(2000)->Arg(10000);
BENCHMARK_MAIN();
