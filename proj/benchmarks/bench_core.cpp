#include <benchmark/benchmark.h>

#include "interactionkit/exact_cii.hpp"
#include "interactionkit/permutation_baselines.hpp"
#include "interactionkit/soum_game.hpp"
#include "interactionkit/svarm_iq.hpp"

using namespace interactionkit;

namespace {

void BM_SoumEvaluate(benchmark::State& state) {
  const auto game = SoumGame::generate(static_cast<int>(state.range(0)), 50, 1);
  std::uint64_t s = 0;
  const std::uint64_t mask = full_mask(game.players());
  for (auto _ : state) {
    benchmark::DoNotOptimize(game.value(s & mask));
    s = s * 6364136223846793005ull + 1442695040888963407ull;
  }
}
BENCHMARK(BM_SoumEvaluate)->Arg(12)->Arg(16);

void BM_ExactCii(benchmark::State& state) {
  const auto game = SoumGame::generate(static_cast<int>(state.range(0)), 50, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_cii(game, IndexKind::sii, 2));
  }
}
BENCHMARK(BM_ExactCii)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SoumClosedForm(benchmark::State& state) {
  const auto game = SoumGame::generate(static_cast<int>(state.range(0)), 50, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(soum_exact_cii(game, IndexKind::sii, 2));
  }
}
BENCHMARK(BM_SoumClosedForm)->Arg(12)->Arg(20)->Arg(32);

void BM_SvarmIqRun(benchmark::State& state) {
  const auto game = SoumGame::generate(static_cast<int>(state.range(0)), 50, 1);
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = ++seed;
    benchmark::DoNotOptimize(run_svarm_iq(game, 2000, cfg));
  }
}
BENCHMARK(BM_SvarmIqRun)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PermutationSii(benchmark::State& state) {
  const auto game = SoumGame::generate(static_cast<int>(state.range(0)), 50, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    BudgetedOracle oracle(game, 2000);
    benchmark::DoNotOptimize(permutation_sii(oracle, 2, ++seed));
  }
}
BENCHMARK(BM_PermutationSii)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
