#include "interactionkit/borders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "interactionkit/rng.hpp"

namespace interactionkit {

std::vector<int> BorderPlan::explicit_sizes() const {
  std::vector<int> out;
  for (int s = 0; s <= std::min(s_exp, n); ++s) out.push_back(s);
  for (int s = std::max(n - s_exp, s_exp + 1); s <= n; ++s) out.push_back(s);
  return out;
}

std::vector<int> BorderPlan::implicit_sizes() const {
  std::vector<int> out;
  for (int s = s_exp + 1; s <= n - s_exp - 1; ++s) out.push_back(s);
  return out;
}

std::uint64_t implicit_strata_count(int n, int k, int s_exp) {
  std::uint64_t per_set = 0;
  for (int w = 0; w <= k; ++w) {
    const int lo = std::max(0, s_exp + 1 - w);
    const int hi = std::min(n - k, n - s_exp - 1 - w);
    if (hi >= lo) per_set += binomial(k, w) * static_cast<std::uint64_t>(hi - lo + 1);
  }
  return binomial(n, k) * per_set;
}

namespace {

/// P renormalized onto [lo, hi]; uniform placeholder when the range is empty.
std::vector<double> renormalize(const SizeDistribution& P, int lo, int hi) {
  const int n = P.n;
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  if (lo > hi) {
    const double u = 1.0 / static_cast<double>(n + 1);
    for (int s = 0; s <= n; ++s) out[static_cast<std::size_t>(s)] = u;
    return out;
  }
  double total = 0.0;
  for (int s = lo; s <= hi; ++s) total += P(s);
  if (total <= 0.0) {
    throw std::invalid_argument("compute_borders: distribution has no mass on implicit sizes");
  }
  for (int s = lo; s <= hi; ++s) out[static_cast<std::size_t>(s)] = P(s) / total;
  return out;
}

}  // namespace

BorderPlan compute_borders(BudgetedOracle& oracle, const SizeDistribution& P,
                           const std::vector<StrataTable*>& tables, bool reserve_warmup) {
  const int n = oracle.players();
  if (P.n != n) throw std::invalid_argument("compute_borders: distribution has wrong n");
  if (!P.symmetric()) {
    throw std::invalid_argument("compute_borders: size distribution must be symmetric");
  }
  const std::uint64_t budget = oracle.budget();
  const std::uint64_t mandatory = 2 * static_cast<std::uint64_t>(n) + 2;
  if (budget < mandatory) {
    throw std::invalid_argument("compute_borders: budget below the mandatory 2n+2 evaluations");
  }

  const auto warmup_cost = [&](int s_exp) -> std::uint64_t {
    std::uint64_t c = 0;
    for (const auto* t : tables) c += implicit_strata_count(n, t->order(), s_exp);
    return c;
  };

  BorderPlan plan;
  plan.n = n;
  plan.s_exp = 1;
  plan.b_bar = budget - mandatory;
  int lo = 2, hi = n - 2;
  plan.p_bar = renormalize(P, lo, hi);

  while (2 * (plan.s_exp + 1) <= n) {
    const int next = plan.s_exp + 1;
    std::uint64_t avail = plan.b_bar;
    if (reserve_warmup) {
      const std::uint64_t reserve = warmup_cost(plan.s_exp);
      avail = avail > reserve ? avail - reserve : 0;
    }
    if (!(binomial_d(n, next) <=
          plan.p_bar[static_cast<std::size_t>(next)] * static_cast<double>(avail))) {
      break;
    }
    plan.s_exp = next;
    if (2 * plan.s_exp == n) {
      plan.b_bar -= binomial(n, plan.s_exp);
      lo = 1;
      hi = 0;
    } else if (2 * plan.s_exp == n - 1) {
      plan.b_bar -= 2 * binomial(n, plan.s_exp);
      lo = 1;
      hi = 0;
    } else {
      plan.b_bar -= 2 * binomial(n, plan.s_exp);
      lo = plan.s_exp + 1;
      hi = n - plan.s_exp - 1;
    }
    plan.p_bar = renormalize(P, lo, hi);
  }

  // Evaluate every coalition of every border size exactly once.
  for (int s : plan.explicit_sizes()) {
    for (std::uint64_t a : enumerate_k_subsets(n, s)) {
      const double v = oracle.evaluate(a);
      for (auto* t : tables) t->accumulate_raw(a, s, v);
    }
    plan.border_calls += binomial(n, s);
  }
  for (auto* t : tables) t->normalize_explicit(plan.s_exp);
  return plan;
}

std::uint64_t run_warmup(const std::vector<StrataTable*>& tables, BudgetedOracle& oracle,
                         const BorderPlan& plan, Rng& rng) {
  const int n = plan.n;
  std::uint64_t needed = 0;
  for (const auto* t : tables) needed += implicit_strata_count(n, t->order(), plan.s_exp);
  if (oracle.remaining() < needed) {
    throw std::invalid_argument(
        "run_warmup: insufficient budget to seed every implicit stratum (need " +
        std::to_string(needed) + " evaluations)");
  }
  std::uint64_t used = 0;
  for (auto* table : tables) {
    const int k = table->order();
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n - k));
    for (std::size_t r = 0; r < table->num_sets(); ++r) {
      const std::uint64_t kbits = table->set_bits(r);
      pool.clear();
      for (int i = 0; i < n; ++i) {
        if (((kbits >> i) & 1u) == 0) pool.push_back(i);
      }
      for (unsigned wi = 0; wi < (1u << k); ++wi) {
        const int w = std::popcount(wi);
        std::uint64_t w_bits = 0;
        for (int j = 0; j < k; ++j) {
          if ((wi >> j) & 1u) w_bits |= std::uint64_t{1} << table->member(r, j);
        }
        const int lo = std::max(0, plan.s_exp + 1 - w);
        const int hi = std::min(n - k, n - plan.s_exp - 1 - w);
        for (int ell = lo; ell <= hi; ++ell) {
          const std::uint64_t s_bits = rng.subset_of_size(pool, ell);
          const double v = oracle.evaluate(s_bits | w_bits);
          table->seed_stratum(r, wi, ell, v);
          ++used;
        }
      }
    }
  }
  return used;
}

}  // namespace interactionkit
