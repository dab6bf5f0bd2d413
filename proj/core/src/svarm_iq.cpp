#include "interactionkit/svarm_iq.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "interactionkit/rng.hpp"

namespace interactionkit {

std::string RunDiagnostics::csv_header() const {
  return "budget,s_exp,b_bar,b_tilde,border_calls,warmup_calls,loop_calls,unused_budget,"
         "empty_strata,seed,distribution";
}

std::string RunDiagnostics::csv_row() const {
  std::ostringstream out;
  out << budget << "," << s_exp << "," << b_bar << "," << b_tilde << "," << border_calls << ","
      << warmup_calls << "," << loop_calls << "," << unused_budget << ",";
  bool first = true;
  for (const auto& [k, c] : empty_strata_per_order) {
    if (!first) out << ";";
    out << k << ":" << c;
    first = false;
  }
  out << "," << seed << "," << distribution;
  return out.str();
}

const EstimateMap& SvarmIqResult::map_for(int order, IndexKind kind) const {
  for (const auto& m : maps) {
    if (m.order() == order && m.kind() == kind) return m;
  }
  throw std::invalid_argument("SvarmIqResult: no map for the requested order and kind");
}

const StrataTable& SvarmIqResult::table_for(int order) const {
  for (const auto& t : tables) {
    if (t.order() == order) return t;
  }
  throw std::invalid_argument("SvarmIqResult: no table for the requested order");
}

namespace {

void validate(const BudgetedOracle& oracle, const EstimatorConfig& config) {
  const int n = oracle.players();
  if (n < 4) throw std::invalid_argument("run_svarm_iq: requires at least 4 players");
  if (config.orders.empty()) throw std::invalid_argument("run_svarm_iq: no orders requested");
  if (config.kinds.empty()) throw std::invalid_argument("run_svarm_iq: no index kinds requested");
  for (int k : config.orders) {
    if (k < 1 || k > n) throw std::invalid_argument("run_svarm_iq: order out of range");
  }
  for (IndexKind kind : config.kinds) {
    if (kind == IndexKind::sv) {
      for (int k : config.orders) {
        if (k != 1) {
          throw std::invalid_argument(
              "run_svarm_iq: the Shapley value pairs only with order 1; request sii for "
              "higher orders");
        }
      }
    }
  }
  if (oracle.calls_used() != 0) {
    throw std::invalid_argument("run_svarm_iq: oracle has already been used");
  }
}

/// Per-draw probability that the sampling loop updates stratum (K, W, l):
/// the drawn size must be l+|W| and the drawn coalition must meet K in W.
double stratum_hit_probability(int n, int k, int ell, int w, const std::vector<double>& p_bar) {
  const int size = ell + w;
  return p_bar[static_cast<std::size_t>(size)] * binomial_d(n - k, ell) / binomial_d(n, size);
}

}  // namespace

SvarmIqResult run_svarm_iq(BudgetedOracle& oracle, const EstimatorConfig& config) {
  validate(oracle, config);
  const int n = oracle.players();

  SvarmIqResult result;
  result.diagnostics.budget = oracle.budget();
  result.diagnostics.seed = config.seed;

  const bool pairs_only =
      std::count(config.orders.begin(), config.orders.end(), 2) > 0 &&
      *std::max_element(config.orders.begin(), config.orders.end()) <= 2;
  const SizeDistribution P = pairs_only ? size_distribution_pairs(n) : size_distribution_uniform(n);
  result.diagnostics.distribution = pairs_only ? "pairs-p2" : "uniform";

  result.tables.reserve(config.orders.size());
  std::vector<StrataTable*> table_ptrs;
  for (int k : config.orders) {
    result.tables.emplace_back(n, k);
    table_ptrs.push_back(&result.tables.back());
  }

  Rng rng(config.seed);
  const BorderPlan plan = compute_borders(oracle, P, table_ptrs, config.warmup);
  result.diagnostics.s_exp = plan.s_exp;
  result.diagnostics.b_bar = plan.b_bar;
  result.diagnostics.border_calls = plan.border_calls;

  if (config.warmup && !plan.implicit_empty()) {
    result.diagnostics.warmup_calls = run_warmup(table_ptrs, oracle, plan, rng);
  }
  result.diagnostics.b_tilde = oracle.remaining();

  std::uint64_t loop_iterations = 0;
  if (plan.implicit_empty()) {
    result.diagnostics.unused_budget = oracle.remaining();
  } else {
    // Sampling loop: runs until the budget is exhausted.
    std::vector<int> players(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) players[static_cast<std::size_t>(i)] = i;
    const auto implicit = plan.implicit_sizes();
    while (oracle.remaining() > 0) {
      const double u = rng.unit();
      int a_size = implicit.back();
      double cum = 0.0;
      for (int s : implicit) {
        cum += plan.p_bar[static_cast<std::size_t>(s)];
        if (u < cum) {
          a_size = s;
          break;
        }
      }
      const std::uint64_t a_bits = rng.subset_of_size(players, a_size);
      const double v = oracle.evaluate(a_bits);
      for (auto* t : table_ptrs) t->update_sample(a_bits, a_size, v);
      ++loop_iterations;
    }
  }
  result.diagnostics.loop_calls = loop_iterations;

  for (const auto& t : result.tables) {
    result.diagnostics.empty_strata_per_order[t.order()] = t.empty_implicit_strata();
  }

  // Aggregation. Without warm-up, sampled strata are reweighted by their
  // probability of holding at least one sample (unsampled ones are zero and
  // stay zero), which keeps the aggregate unbiased.
  for (std::size_t ti = 0; ti < result.tables.size(); ++ti) {
    const StrataTable& table = result.tables[ti];
    const int k = table.order();
    std::vector<double> scale;
    const double* scale_ptr = nullptr;
    if (!config.warmup && !plan.implicit_empty() && loop_iterations > 0) {
      scale.assign(table.num_strata(), 1.0);
      const double draws = static_cast<double>(loop_iterations);
      for (unsigned wi = 0; wi < (1u << k); ++wi) {
        const int w = std::popcount(wi);
        for (int ell = 0; ell <= n - k; ++ell) {
          if (table.is_explicit(static_cast<unsigned>(w), ell)) continue;
          const double q = stratum_hit_probability(n, k, ell, w, plan.p_bar);
          const double seen = q > 0.0 ? -std::expm1(draws * std::log1p(-q)) : 0.0;
          const double factor = seen > 0.0 ? 1.0 / seen : 1.0;
          for (std::size_t r = 0; r < table.num_sets(); ++r) {
            scale[table.slot(r, wi, ell)] = factor;
          }
        }
      }
      scale_ptr = scale.data();
    }
    for (IndexKind kind : config.kinds) {
      result.maps.push_back(table.aggregate(WeightProfile(kind, n, k), scale_ptr));
    }
  }
  return result;
}

SvarmIqResult run_svarm_iq(const Game& game, std::uint64_t budget, const EstimatorConfig& config) {
  BudgetedOracle oracle(game, budget);
  return run_svarm_iq(oracle, config);
}

}  // namespace interactionkit
