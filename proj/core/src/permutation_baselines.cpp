#include "interactionkit/permutation_baselines.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "interactionkit/combinatorics.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/strata_table.hpp"

namespace interactionkit {

namespace {

void check_preconditions(const BudgetedOracle& oracle, int k) {
  const int n = oracle.players();
  if (k < 1 || k > n) {
    throw std::invalid_argument("permutation baseline: order must satisfy 1 <= k <= n");
  }
  if (oracle.budget() < (std::uint64_t{1} << k)) {
    throw std::invalid_argument("permutation baseline: budget below one discrete derivative");
  }
  if (oracle.calls_used() != 0) {
    throw std::invalid_argument("permutation baseline: oracle has already been used");
  }
}

/// Evaluations one full window sweep costs with caching: the first window
/// pays 2^k, each later one shares half its coalitions with the previous.
std::uint64_t sii_permutation_cost(int n, int k) {
  return (std::uint64_t{1} << k) +
         static_cast<std::uint64_t>(n - k) * (std::uint64_t{1} << (k - 1));
}

/// Evaluates nu(S union W) for all W inside k_bits through the cache, charging
/// the oracle only for coalitions not seen in this permutation. Returns the
/// discrete derivative, or nothing if the uncached part exceeds the budget.
bool derivative_cached(BudgetedOracle& oracle, std::unordered_map<std::uint64_t, double>& cache,
                       std::uint64_t k_bits, std::uint64_t s_bits, int k, double* out) {
  std::uint64_t needed = 0;
  std::uint64_t w = 0;
  while (true) {
    if (!cache.count(s_bits | w)) ++needed;
    if (w == k_bits) break;
    w = (w - k_bits) & k_bits;
  }
  if (needed > oracle.remaining()) return false;

  double acc = 0.0;
  w = 0;
  while (true) {
    const std::uint64_t coalition = s_bits | w;
    auto it = cache.find(coalition);
    if (it == cache.end()) {
      it = cache.emplace(coalition, oracle.evaluate(coalition)).first;
    }
    if (((k - std::popcount(w)) & 1) != 0) {
      acc -= it->second;
    } else {
      acc += it->second;
    }
    if (w == k_bits) break;
    w = (w - k_bits) & k_bits;
  }
  *out = acc;
  return true;
}

EstimateMap finish(const EstimateMap& layout, const std::vector<double>& means,
                   const std::vector<std::uint64_t>& counts,
                   PermutationDiagnostics* diagnostics, const BudgetedOracle& oracle) {
  EstimateMap out = layout;
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = means[r];
  if (diagnostics) {
    diagnostics->calls = oracle.calls_used();
    diagnostics->updates_per_set = counts;
    diagnostics->never_updated_sets =
        static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), 0u));
  }
  return out;
}

}  // namespace

namespace detail {

bool sii_process_permutation(const std::vector<int>& perm, BudgetedOracle& oracle, int k,
                             std::vector<double>& means, std::vector<std::uint64_t>& counts,
                             const EstimateMap& layout, PermutationDiagnostics* diagnostics) {
  const int n = static_cast<int>(perm.size());
  std::unordered_map<std::uint64_t, double> cache;
  cache.reserve(static_cast<std::size_t>(n - k + 1) << k);
  std::uint64_t prefix = 0;
  for (int t = 0; t + k <= n; ++t) {
    std::uint64_t k_bits = 0;
    for (int j = 0; j < k; ++j) {
      k_bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(t + j)];
    }
    double delta = 0.0;
    if (!derivative_cached(oracle, cache, k_bits, prefix, k, &delta)) return false;
    const std::size_t rank = layout.rank_of(k_bits);
    means[rank] = update_mean(means[rank], counts[rank], delta);
    ++counts[rank];
    if (diagnostics) ++diagnostics->windows;
    prefix |= std::uint64_t{1} << perm[static_cast<std::size_t>(t)];
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sti_predecessors(
    const std::vector<int>& perm, int k) {
  const int n = static_cast<int>(perm.size());
  // prefix_bits[t] = players at positions < t.
  std::vector<std::uint64_t> prefix_bits(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> position(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    prefix_bits[static_cast<std::size_t>(t) + 1] =
        prefix_bits[static_cast<std::size_t>(t)] | (std::uint64_t{1} << perm[static_cast<std::size_t>(t)]);
    position[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] = t;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t k_bits : enumerate_k_subsets(n, k)) {
    int first = n;
    for (std::uint64_t m = k_bits; m; m &= m - 1) {
      first = std::min(first, position[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    out.emplace_back(k_bits, prefix_bits[static_cast<std::size_t>(first)]);
  }
  return out;
}

}  // namespace detail

EstimateMap permutation_sii(BudgetedOracle& oracle, int k, std::uint64_t seed,
                            PermutationDiagnostics* diagnostics) {
  check_preconditions(oracle, k);
  const int n = oracle.players();
  const std::uint64_t per_permutation = sii_permutation_cost(n, k);
  if (oracle.budget() < per_permutation) {
    throw std::invalid_argument(
        "permutation_sii: budget below one full window sweep (" +
        std::to_string(per_permutation) +
        " evaluations); truncated sweeps would skew the sampled coalition sizes");
  }
  EstimateMap layout(n, k, k == 1 ? IndexKind::sv : IndexKind::sii);
  std::vector<double> means(layout.size(), 0.0);
  std::vector<std::uint64_t> counts(layout.size(), 0);

  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

  // Only whole permutations are processed. A truncated window sweep would
  // feed the running means outside coalitions of systematically small size.
  while (oracle.remaining() >= per_permutation) {
    rng.shuffle(perm);
    detail::sii_process_permutation(perm, oracle, k, means, counts, layout, diagnostics);
    if (diagnostics) ++diagnostics->permutations;
  }
  return finish(layout, means, counts, diagnostics, oracle);
}

EstimateMap permutation_sti(BudgetedOracle& oracle, int k, std::uint64_t seed,
                            PermutationDiagnostics* diagnostics) {
  check_preconditions(oracle, k);
  const int n = oracle.players();
  EstimateMap layout(n, k, IndexKind::sti);
  std::vector<double> means(layout.size(), 0.0);
  std::vector<std::uint64_t> counts(layout.size(), 0);

  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

  while (true) {
    rng.shuffle(perm);
    const auto preds = detail::sti_predecessors(perm, k);

    // The whole permutation is either affordable or abandoned: count the
    // distinct coalitions it would evaluate before touching anything.
    std::unordered_map<std::uint64_t, double> cache;
    cache.reserve(preds.size() << k);
    std::uint64_t distinct = 0;
    for (const auto& [k_bits, s_bits] : preds) {
      std::uint64_t w = 0;
      while (true) {
        if (cache.emplace(s_bits | w, 0.0).second) ++distinct;
        if (w == k_bits) break;
        w = (w - k_bits) & k_bits;
      }
    }
    if (distinct > oracle.remaining()) break;
    for (auto& [coalition, value] : cache) value = oracle.evaluate(coalition);

    for (const auto& [k_bits, s_bits] : preds) {
      double delta = 0.0;
      std::uint64_t w = 0;
      while (true) {
        const double v = cache.at(s_bits | w);
        if (((k - std::popcount(w)) & 1) != 0) {
          delta -= v;
        } else {
          delta += v;
        }
        if (w == k_bits) break;
        w = (w - k_bits) & k_bits;
      }
      const std::size_t rank = layout.rank_of(k_bits);
      means[rank] = update_mean(means[rank], counts[rank], delta);
      ++counts[rank];
    }
    if (diagnostics) ++diagnostics->permutations;
  }
  return finish(layout, means, counts, diagnostics, oracle);
}

}  // namespace interactionkit
