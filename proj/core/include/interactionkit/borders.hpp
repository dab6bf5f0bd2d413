#pragma once

#include <cstdint>
#include <vector>

#include "interactionkit/game.hpp"
#include "interactionkit/size_distribution.hpp"
#include "interactionkit/strata_table.hpp"

namespace interactionkit {

/// Split of coalition sizes into an exhaustively enumerated border region
/// {0..s_exp} U {n-s_exp..n} and a sampled middle region, plus the sampling
/// distribution renormalized onto the middle.
struct BorderPlan {
  int n = 0;
  int s_exp = 1;
  std::vector<double> p_bar;        // renormalized over implicit sizes, 0 elsewhere
  std::uint64_t border_calls = 0;   // sum of C(n,s) over explicit sizes
  std::uint64_t b_bar = 0;          // budget remaining after the border phase

  std::vector<int> explicit_sizes() const;
  std::vector<int> implicit_sizes() const;
  bool implicit_empty() const { return s_exp + 1 > n - s_exp - 1; }
};

/// Number of strata of one order left to estimation (not computed explicitly)
/// for a given border threshold. This is exactly the warm-up cost of that
/// order: C(n,k) * sum_w C(k,w) * |{l : s_exp < l+w < n-s_exp}|.
std::uint64_t implicit_strata_count(int n, int k, int s_exp);

/// Grows the border threshold from 1 while the expected number of sampled
/// coalitions of the next size pair covers enumerating them outright, then
/// evaluates every coalition of every border size once, routing each worth
/// into the explicit strata of all maintained orders.
///
/// `P` must be symmetric. Budget below the mandatory 2n+2 border evaluations
/// is an error. When `reserve_warmup` is set, the growth condition charges
/// the warm-up cost of the current implicit strata against the remaining
/// budget, since those evaluations are not available to the sampling loop.
BorderPlan compute_borders(BudgetedOracle& oracle, const SizeDistribution& P,
                           const std::vector<StrataTable*>& tables, bool reserve_warmup = false);

/// Seeds every implicit stratum with the worth of one uniformly drawn
/// coalition: for each (K, W, l) it evaluates nu(S union W) with S a uniform
/// l-subset of the players outside K. Returns the number of evaluations,
/// which equals the implicit_strata_count sum over the tables. Throws if the
/// oracle cannot afford that many calls.
std::uint64_t run_warmup(const std::vector<StrataTable*>& tables, BudgetedOracle& oracle,
                         const BorderPlan& plan, class Rng& rng);

}  // namespace interactionkit
