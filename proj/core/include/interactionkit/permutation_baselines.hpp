#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "interactionkit/estimate_map.hpp"
#include "interactionkit/game.hpp"

namespace interactionkit {

struct PermutationDiagnostics {
  std::uint64_t calls = 0;
  std::uint64_t permutations = 0;   // fully or partially processed (sii), completed (sti)
  std::uint64_t windows = 0;        // sii only
  std::vector<std::uint64_t> updates_per_set;
  std::uint64_t never_updated_sets = 0;
};

/// Permutation-sampling baseline for Shapley-interaction scores of order k.
/// Each drawn permutation updates only the interaction sets whose players
/// appear consecutively: window t covers the k players at positions t..t+k-1
/// with the preceding players as the outside coalition. Discrete derivatives
/// are evaluated through a per-permutation cache so overlapping windows do
/// not pay twice; cache hits cost no budget, and nothing carries over between
/// permutations. A full window sweep costs exactly 2^k + (n-k) 2^(k-1)
/// evaluations; the run stops when the remaining budget falls below that, so
/// every processed permutation is complete and every sample keeps the window
/// position uniformly distributed.
///
/// Sets never updated report a zero score; the diagnostics carry per-set
/// update counts.
EstimateMap permutation_sii(BudgetedOracle& oracle, int k, std::uint64_t seed,
                            PermutationDiagnostics* diagnostics = nullptr);

/// Permutation-sampling baseline for the top-order Shapley-Taylor index: per
/// permutation, every interaction set K gets one discrete derivative at the
/// set of players preceding K's first element. A permutation is processed
/// only if all of its evaluations fit the remaining budget; otherwise the run
/// stops before touching any set, keeping per-set means unbiased.
EstimateMap permutation_sti(BudgetedOracle& oracle, int k, std::uint64_t seed,
                            PermutationDiagnostics* diagnostics = nullptr);

namespace detail {

/// One permutation's worth of window updates (testing seam).
/// Returns false when the budget was exhausted mid-permutation.
bool sii_process_permutation(const std::vector<int>& perm, BudgetedOracle& oracle, int k,
                             std::vector<double>& means, std::vector<std::uint64_t>& counts,
                             const EstimateMap& layout, PermutationDiagnostics* diagnostics);

/// Predecessor sets pred(K) for every order-k set under the permutation:
/// the players strictly before the first member of K.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sti_predecessors(
    const std::vector<int>& perm, int k);

}  // namespace detail

}  // namespace interactionkit
