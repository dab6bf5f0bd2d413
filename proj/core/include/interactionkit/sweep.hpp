#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "interactionkit/estimate_map.hpp"
#include "interactionkit/game.hpp"
#include "interactionkit/weights.hpp"

namespace interactionkit {

enum class Method { svarm_iq, perm_sii, perm_sti };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

/// Whether the baseline construction targets the given index family.
/// The stratified estimator serves every family.
bool method_supports(Method m, IndexKind kind);

struct SweepRecord {
  Method method;
  IndexKind kind;
  int order;
  std::uint64_t budget;
  int run;
  std::uint64_t seed;
  double mse_value;
  double prec_at_10;
  std::uint64_t calls;
  double wall_ms;
};

struct SweepAggregate {
  Method method;
  IndexKind kind;
  int order;
  std::uint64_t budget;
  double mse_mean;
  double mse_se;
  double prec_mean;
  double prec_se;
};

struct SweepConfig {
  std::vector<Method> methods;
  std::vector<IndexKind> kinds;
  std::vector<int> orders;
  std::vector<std::uint64_t> budgets;
  int runs = 1;
  std::uint64_t master_seed = 0;
  bool warmup = false;
  int jobs = 1;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<SweepAggregate> aggregates;
  std::vector<std::string> skipped;  // method/kind pairs the method cannot estimate
};

/// Budget-sweep evaluation harness. Ground truth is computed once per
/// (kind, order) — closed form for sum-of-unanimity games, brute force
/// otherwise (player count capped at 16 for the latter). Each (method,
/// budget, run) gets an independent seeded run; the stratified estimator
/// produces all requested (kind, order) maps from a single run per budget.
/// Runs are distributed over `jobs` threads; records and aggregates are
/// independent of the thread count.
SweepResult run_sweep(const Game& game, const SweepConfig& config);

/// records CSV: method,kind,order,budget,run,seed,mse,prec_at_10,calls,wall_ms
void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records);
/// aggregate CSV: method,kind,order,budget,mse_mean,mse_se,prec_mean,prec_se
void write_aggregates_csv(std::ostream& out, const std::vector<SweepAggregate>& aggregates);

}  // namespace interactionkit
