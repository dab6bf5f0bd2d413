#include "interactionkit/strata_statistics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace interactionkit {

StrataStats::StrataStats(int n, int k, int s_exp)
    : n_(n), k_(k), s_exp_(s_exp), kbits_(enumerate_k_subsets(n, k)) {
  const std::size_t total =
      kbits_.size() * (std::size_t{1} << k) * static_cast<std::size_t>(n - k + 1);
  variance_.assign(total, 0.0);
  range_.assign(total, 0.0);
}

std::size_t StrataStats::rank_of(std::uint64_t kbits) const {
  const auto it = std::lower_bound(kbits_.begin(), kbits_.end(), kbits);
  if (it == kbits_.end() || *it != kbits) {
    throw std::invalid_argument("StrataStats: unknown interaction set");
  }
  return static_cast<std::size_t>(it - kbits_.begin());
}

double StrataStats::range_sum(std::size_t rank) const {
  double acc = 0.0;
  for (unsigned wi = 0; wi < (1u << k_); ++wi) {
    const int w = std::popcount(wi);
    for (int ell = 0; ell <= n_ - k_; ++ell) {
      if (is_implicit(w, ell)) acc += range_[slot(rank, wi, ell)];
    }
  }
  return acc;
}

StrataStats strata_statistics(const Game& game, int k, const BorderPlan& plan) {
  const int n = game.players();
  if (n > 16) {
    throw std::invalid_argument("strata_statistics: full enumeration is capped at 16 players");
  }
  if (plan.n != n) throw std::invalid_argument("strata_statistics: plan is for a different n");
  StrataStats stats(n, k, plan.s_exp);

  // Pass 1: per-stratum means. Pass 2: centered second moments and extrema.
  // Routing mirrors the estimator's update rule.
  StrataTable sums(n, k);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> worth(static_cast<std::size_t>(total));
  for (std::uint64_t a = 0; a < total; ++a) {
    worth[a] = game.value(a);
    sums.accumulate_raw(a, std::popcount(a), worth[a]);
  }

  const std::size_t slots = stats.variances().size();
  std::vector<double> mean(slots, 0.0);
  std::vector<double> m2(slots, 0.0);
  std::vector<double> lo(slots, std::numeric_limits<double>::infinity());
  std::vector<double> hi(slots, -std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < slots; ++s) {
    if (sums.count(s) > 0) mean[s] = sums.estimate(s) / static_cast<double>(sums.count(s));
  }
  for (std::uint64_t a = 0; a < total; ++a) {
    const int a_size = std::popcount(a);
    const double v = worth[a];
    for (std::size_t r = 0; r < sums.num_sets(); ++r) {
      const std::uint64_t w_bits = a & sums.set_bits(r);
      const unsigned wi = sums.w_index_of(r, a);
      const int ell = a_size - std::popcount(w_bits);
      const std::size_t s = sums.slot(r, wi, ell);
      const double d = v - mean[s];
      m2[s] += d * d;
      lo[s] = std::min(lo[s], v);
      hi[s] = std::max(hi[s], v);
    }
  }

  for (std::size_t rank = 0; rank < stats.num_sets(); ++rank) {
    for (unsigned wi = 0; wi < (1u << k); ++wi) {
      const int w = std::popcount(wi);
      for (int ell = 0; ell <= n - k; ++ell) {
        if (!stats.is_implicit(w, ell)) continue;
        const std::size_t s = stats.slot(rank, wi, ell);
        const double members = binomial_d(n - k, ell);
        stats.variances()[s] = m2[s] / members;
        stats.ranges()[s] = hi[s] - lo[s];
      }
    }
  }
  return stats;
}

}  // namespace interactionkit
