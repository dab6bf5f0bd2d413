#include "interactionkit/exact_cii.hpp"

#include <bit>
#include <stdexcept>

namespace interactionkit {

StrataTable exact_strata(const Game& game, int k) {
  const int n = game.players();
  if (n > 20) {
    throw std::invalid_argument("exact_strata: brute force is capped at 20 players");
  }
  StrataTable table(n, k);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    table.accumulate_raw(a, std::popcount(a), game.value(a));
  }
  table.normalize_all();
  return table;
}

EstimateMap exact_cii(const Game& game, IndexKind kind, int k) {
  const StrataTable table = exact_strata(game, k);
  return table.aggregate(WeightProfile(kind, game.players(), k));
}

EstimateMap soum_exact_cii(const SoumGame& game, IndexKind kind, int k) {
  const int n = game.players();
  const WeightProfile weights(kind, n, k);
  EstimateMap out(n, k, kind);

  // Unanimity score of any K inside a term of size t, precomputed per t.
  std::vector<double> unanimity_score(static_cast<std::size_t>(n + 1), 0.0);
  for (int t = k; t <= n; ++t) {
    double acc = 0.0;
    for (int ell = t - k; ell <= n - k; ++ell) {
      acc += binomial_d(n - t, ell - (t - k)) * weights.lambda(ell);
    }
    unanimity_score[static_cast<std::size_t>(t)] = acc;
  }

  for (const auto& term : game.terms()) {
    const int t = std::popcount(term.subset);
    if (t < k) continue;
    const double add = term.coefficient * unanimity_score[static_cast<std::size_t>(t)];
    // Every k-subset of the term's support receives the contribution.
    const auto members = members_of(term.subset);
    const std::uint64_t count = binomial(t, k);
    std::uint64_t picks = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t kbits = 0;
      for (std::uint64_t p = picks; p; p &= p - 1) {
        kbits |= std::uint64_t{1} << members[static_cast<std::size_t>(std::countr_zero(p))];
      }
      out.scores()[out.rank_of(kbits)] += add;
      if (i + 1 < count) picks = next_k_subset(picks);
    }
  }
  return out;
}

}  // namespace interactionkit
