#include "doctest.h"

#include <cmath>

#include "interactionkit/exact_cii.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/svarm_iq.hpp"
#include "test_support.hpp"

using namespace interactionkit;
using namespace testsupport;

TEST_CASE("full budget reproduces exact scores") {
  for (int n : {5, 6, 8}) {
    const auto g = SoumGame::generate(n, 30, 7);
    EstimatorConfig cfg;
    cfg.orders = {1, 2};
    cfg.kinds = {IndexKind::sii, IndexKind::bii};
    cfg.seed = 42;
    const auto res = run_svarm_iq(g, std::uint64_t{1} << n, cfg);
    for (int k : cfg.orders) {
      for (IndexKind kind : cfg.kinds) {
        CHECK(max_abs_diff(res.map_for(k, kind), exact_cii(g, kind, k)) < 1e-9);
      }
    }
    CHECK(res.diagnostics.total_calls() == (std::uint64_t{1} << n));
    CHECK(res.diagnostics.loop_calls == 0);
  }
}

TEST_CASE("identical seeds give identical estimates") {
  const auto g = SoumGame::generate(8, 50, 11);
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii};
  cfg.seed = 5;
  const auto a = run_svarm_iq(g, 96, cfg);
  const auto b = run_svarm_iq(g, 96, cfg);
  for (std::size_t r = 0; r < a.maps[0].size(); ++r) CHECK(a.maps[0][r] == b.maps[0][r]);
  cfg.seed = 6;
  const auto c = run_svarm_iq(g, 96, cfg);
  CHECK(max_abs_diff(a.maps[0], c.maps[0]) > 0.0);
}

TEST_CASE("budget is conserved across the phases") {
  const auto g = SoumGame::generate(8, 50, 11);
  for (std::uint64_t budget : {18ull, 96ull, 150ull, 240ull}) {
    BudgetedOracle oracle(g, budget);
    EstimatorConfig cfg;
    cfg.orders = {2};
    cfg.kinds = {IndexKind::sii};
    cfg.seed = 1;
    const auto res = run_svarm_iq(oracle, cfg);
    CHECK(oracle.calls_used() == res.diagnostics.total_calls());
    if (!res.diagnostics.unused_budget) {
      CHECK(res.diagnostics.total_calls() == budget);
    }
    CHECK(res.diagnostics.border_calls + res.diagnostics.b_bar == budget);
  }
}

TEST_CASE("each draw updates one stratum per interaction set per order") {
  const auto g = SoumGame::generate(8, 50, 11);
  EstimatorConfig cfg;
  cfg.orders = {1, 2, 3};
  cfg.kinds = {IndexKind::sii};
  cfg.seed = 3;
  cfg.warmup = false;
  const auto res = run_svarm_iq(g, 150, cfg);
  for (const auto& t : res.tables) {
    CHECK(t.implicit_sample_total() == res.diagnostics.loop_calls * t.num_sets());
  }
}

TEST_CASE("scaling the game by two scales every estimate by two exactly") {
  const auto g = SoumGame::generate(8, 40, 19);
  const LambdaGame doubled(8, [&](std::uint64_t s) { return 2.0 * g.value(s); });
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii, IndexKind::sti};
  cfg.seed = 9;
  const auto a = run_svarm_iq(g, 120, cfg);
  const auto b = run_svarm_iq(doubled, 120, cfg);
  for (std::size_t m = 0; m < a.maps.size(); ++m) {
    for (std::size_t r = 0; r < a.maps[m].size(); ++r) {
      CHECK(b.maps[m][r] == 2.0 * a.maps[m][r]);
    }
  }
}

TEST_CASE("the pairwise distribution is only used for pure pairwise runs") {
  const auto g = SoumGame::generate(8, 40, 19);
  EstimatorConfig cfg;
  cfg.kinds = {IndexKind::sii};
  cfg.seed = 2;
  cfg.orders = {2};
  CHECK(run_svarm_iq(g, 60, cfg).diagnostics.distribution == "pairs-p2");
  cfg.orders = {1, 2};
  CHECK(run_svarm_iq(g, 60, cfg).diagnostics.distribution == "pairs-p2");
  cfg.orders = {2, 3};
  CHECK(run_svarm_iq(g, 60, cfg).diagnostics.distribution == "uniform");
  cfg.orders = {1};
  CHECK(run_svarm_iq(g, 60, cfg).diagnostics.distribution == "uniform");
}

TEST_CASE("invalid configurations are rejected") {
  const auto g = SoumGame::generate(8, 40, 19);
  EstimatorConfig cfg;
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};

  CHECK_THROWS_AS(run_svarm_iq(g, 17, cfg), std::invalid_argument);  // below 2n+2

  cfg.kinds = {IndexKind::sv};
  cfg.orders = {2};
  CHECK_THROWS_AS(run_svarm_iq(g, 100, cfg), std::invalid_argument);

  cfg.kinds = {IndexKind::sii};
  cfg.orders = {};
  CHECK_THROWS_AS(run_svarm_iq(g, 100, cfg), std::invalid_argument);

  const auto tiny = SoumGame::generate(3, 5, 1);
  cfg.orders = {1};
  CHECK_THROWS_AS(run_svarm_iq(tiny, 100, cfg), std::invalid_argument);  // n < 4

  cfg.orders = {2};
  cfg.warmup = true;
  const auto g6 = SoumGame::generate(6, 20, 3);
  // Warm-up needs 14 + 180 calls at n=6; 100 cannot cover it.
  CHECK_THROWS_AS(run_svarm_iq(g6, 100, cfg), std::invalid_argument);
}

TEST_CASE("warm-up runs leave no empty strata and conserve budget") {
  const auto g = SoumGame::generate(6, 20, 3);
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii};
  cfg.warmup = true;
  cfg.seed = 8;
  BudgetedOracle oracle(g, 220);
  const auto res = run_svarm_iq(oracle, cfg);
  CHECK(res.diagnostics.s_exp == 1);
  CHECK(res.diagnostics.border_calls == 14);
  CHECK(res.diagnostics.warmup_calls == 180);
  CHECK(res.diagnostics.b_tilde == 26);
  CHECK(res.diagnostics.loop_calls == 26);
  CHECK(oracle.calls_used() == 220);
  CHECK(res.diagnostics.empty_strata_per_order.at(2) == 0);
}

TEST_CASE("conditional uniformity of the draw inside a stratum") {
  // Fix K = {0,1}; among size-3 draws whose overlap with K is exactly {0},
  // the outside pair must be uniform over the 15 pairs from the other six
  // players. Chi-square with 14 degrees of freedom at alpha = 0.001.
  const int n = 8;
  Rng rng(1234);
  std::vector<int> players(n);
  for (int i = 0; i < n; ++i) players[i] = i;
  std::vector<std::uint64_t> cells(15, 0);
  const auto pairs = enumerate_k_subsets(6, 2);  // compact outside pairs
  for (int draw = 0; draw < 100000; ++draw) {
    const std::uint64_t a = rng.subset_of_size(players, 3);
    if ((a & 0b11) != 0b01) continue;
    std::uint64_t outside_compact = 0;
    int idx = 0;
    for (int p = 2; p < n; ++p, ++idx) {
      if ((a >> p) & 1u) outside_compact |= std::uint64_t{1} << idx;
    }
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      if (pairs[c] == outside_compact) {
        ++cells[c];
        break;
      }
    }
  }
  const double stat = chi_square_uniform(cells);
  CHECK(stat < 36.123);  // chi-square 0.999 quantile, 14 dof
}

TEST_CASE("budget beyond full enumeration is reported as unused") {
  const auto g = SoumGame::generate(6, 20, 3);
  BudgetedOracle oracle(g, (1ull << 6) + 10);
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii};
  cfg.seed = 4;
  const auto res = run_svarm_iq(oracle, cfg);
  CHECK(res.diagnostics.unused_budget == 10);
  CHECK(res.diagnostics.loop_calls == 0);
  CHECK(oracle.calls_used() == (1ull << 6));
  CHECK(max_abs_diff(res.maps.front(), exact_cii(g, IndexKind::sii, 2)) < 1e-9);
}

TEST_CASE("an oracle that was already used is rejected") {
  const auto g = SoumGame::generate(6, 20, 3);
  BudgetedOracle oracle(g, 64);
  oracle.evaluate(0);
  EstimatorConfig cfg;
  cfg.orders = {2};
  cfg.kinds = {IndexKind::sii};
  CHECK_THROWS_AS(run_svarm_iq(oracle, cfg), std::invalid_argument);
}
