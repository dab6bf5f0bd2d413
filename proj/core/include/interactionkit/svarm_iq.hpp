#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "interactionkit/borders.hpp"
#include "interactionkit/estimate_map.hpp"
#include "interactionkit/game.hpp"
#include "interactionkit/size_distribution.hpp"
#include "interactionkit/strata_table.hpp"
#include "interactionkit/weights.hpp"

namespace interactionkit {

struct EstimatorConfig {
  std::vector<int> orders;
  std::vector<IndexKind> kinds;
  bool warmup = false;
  std::uint64_t seed = 0;
};

struct RunDiagnostics {
  std::uint64_t budget = 0;
  int s_exp = 1;
  std::uint64_t b_bar = 0;    // budget left after the border phase
  std::uint64_t b_tilde = 0;  // budget left after borders and warm-up
  std::uint64_t border_calls = 0;
  std::uint64_t warmup_calls = 0;
  std::uint64_t loop_calls = 0;
  std::uint64_t unused_budget = 0;  // nonzero only when no implicit sizes remain
  std::uint64_t seed = 0;
  std::string distribution;  // "pairs-p2" or "uniform"
  std::map<int, std::uint64_t> empty_strata_per_order;

  std::uint64_t total_calls() const { return border_calls + warmup_calls + loop_calls; }
  std::string csv_header() const;
  std::string csv_row() const;
};

/// Output of one estimation run: one map per requested (order, kind) pair,
/// the per-order strata tables, and budget diagnostics.
struct SvarmIqResult {
  std::vector<EstimateMap> maps;
  std::vector<StrataTable> tables;  // parallel to config.orders
  RunDiagnostics diagnostics;

  const EstimateMap& map_for(int order, IndexKind kind) const;
  const StrataTable& table_for(int order) const;
};

/// Stratified estimation of every interaction set of the requested orders:
/// borders, optional warm-up, then a sampling loop that draws a size from the
/// renormalized distribution, draws a coalition of that size uniformly,
/// evaluates it once, and folds the worth into exactly one stratum per
/// interaction set per maintained order. Afterwards each (order, kind) pair
/// is aggregated from the shared strata.
///
/// The pairwise-tailored size distribution is used when order 2 is maintained
/// and no higher order is; otherwise the uniform one.
///
/// When warm-up is off, strata that end the run unsampled stay at zero; each
/// sampled stratum's mean is divided by its probability of having been
/// sampled at least once. Leaving the zeros uncorrected would bias every
/// aggregate toward zero; the correction keeps estimates exactly unbiased and
/// is the identity whenever every stratum holds a sample.
///
/// Requires n >= 4 and budget >= 2n+2. The run consumes the oracle's entire
/// budget unless no implicit sizes remain after the border phase.
SvarmIqResult run_svarm_iq(BudgetedOracle& oracle, const EstimatorConfig& config);

/// Convenience overload owning its oracle.
SvarmIqResult run_svarm_iq(const Game& game, std::uint64_t budget, const EstimatorConfig& config);

}  // namespace interactionkit
