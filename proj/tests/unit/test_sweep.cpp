#include "doctest.h"

#include <sstream>

#include "interactionkit/sweep.hpp"
#include "interactionkit/soum_game.hpp"
#include "test_support.hpp"

using namespace interactionkit;
using namespace testsupport;

TEST_CASE("record count follows methods x budgets x runs per supported pair") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq, Method::perm_sii};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {60, 90, 120, 150, 180};
  cfg.runs = 10;
  cfg.master_seed = 4;
  const auto res = run_sweep(g, cfg);
  CHECK(res.records.size() == 2 * 5 * 10);
  CHECK(res.aggregates.size() == 2 * 5);
  CHECK(res.skipped.empty());
}

TEST_CASE("unsupported method and kind pairings are skipped with a note") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq, Method::perm_sii, Method::perm_sti};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {80};
  cfg.runs = 3;
  const auto res = run_sweep(g, cfg);
  CHECK(res.records.size() == 2 * 1 * 3);
  REQUIRE(res.skipped.size() == 1);
  CHECK(res.skipped[0].find("perm-sti") != std::string::npos);
}

TEST_CASE("single-run sweeps reproduce the individual record verbatim") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {100};
  cfg.runs = 1;
  cfg.master_seed = 9;
  const auto once = run_sweep(g, cfg);
  REQUIRE(once.records.size() == 1);
  REQUIRE(once.aggregates.size() == 1);
  CHECK(once.aggregates[0].mse_mean == once.records[0].mse_value);
  CHECK(once.aggregates[0].mse_se == 0.0);
  const auto again = run_sweep(g, cfg);
  CHECK(again.records[0].mse_value == once.records[0].mse_value);
  CHECK(again.records[0].seed == once.records[0].seed);
}

TEST_CASE("aggregate means equal the mean of the per-run records") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::perm_sii};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {120, 240};
  cfg.runs = 8;
  cfg.master_seed = 17;
  const auto res = run_sweep(g, cfg);
  for (const auto& agg : res.aggregates) {
    double mean = 0.0;
    int count = 0;
    for (const auto& rec : res.records) {
      if (rec.budget == agg.budget) {
        mean += rec.mse_value;
        ++count;
      }
    }
    mean /= count;
    CHECK(std::abs(agg.mse_mean - mean) < 1e-12);
  }
}

TEST_CASE("sweeps are independent of the thread count") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq, Method::perm_sii};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {80, 160};
  cfg.runs = 6;
  cfg.master_seed = 23;
  cfg.jobs = 1;
  const auto serial = run_sweep(g, cfg);
  cfg.jobs = 4;
  const auto parallel = run_sweep(g, cfg);
  REQUIRE(serial.records.size() == parallel.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    CHECK(serial.records[i].mse_value == parallel.records[i].mse_value);
    CHECK(serial.records[i].seed == parallel.records[i].seed);
  }
}

TEST_CASE("csv writers emit the documented headers") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {80};
  cfg.runs = 2;
  const auto res = run_sweep(g, cfg);
  std::ostringstream rec, agg;
  write_records_csv(rec, res.records);
  write_aggregates_csv(agg, res.aggregates);
  CHECK(rec.str().rfind("method,kind,order,budget,run,seed,mse,prec_at_10,calls,wall_ms\n", 0) ==
        0);
  CHECK(agg.str().rfind("method,kind,order,budget,mse_mean,mse_se,prec_mean,prec_se\n", 0) == 0);
}

TEST_CASE("a full-budget sweep point is exact for the stratified estimator") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::svarm_iq};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {1ull << 8};
  cfg.runs = 3;
  cfg.master_seed = 12;
  const auto res = run_sweep(g, cfg);
  for (const auto& rec : res.records) {
    CHECK(rec.mse_value <= 1e-18);
    CHECK(rec.prec_at_10 == 1.0);
    CHECK(rec.calls == (1ull << 8));
  }
}

TEST_CASE("sweeps with no viable method are rejected") {
  const auto g = SoumGame::generate(8, 40, 2);
  SweepConfig cfg;
  cfg.methods = {Method::perm_sti};
  cfg.kinds = {IndexKind::sii};
  cfg.orders = {2};
  cfg.budgets = {80};
  cfg.runs = 2;
  CHECK_THROWS_AS(run_sweep(g, cfg), std::invalid_argument);
}
