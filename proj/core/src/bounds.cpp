#include "interactionkit/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace interactionkit {

double gamma_factor(int n, int k) {
  if (n < 4) throw std::invalid_argument("gamma_factor: requires n >= 4");
  if (k < 2) throw std::invalid_argument("gamma_factor: defined for orders k >= 2");
  if (k == 2) return 2.0 * static_cast<double>(n - 1) * (n - 1);
  return std::pow(static_cast<double>(n), k - 1) * static_cast<double>(n - k + 1) * (n - k + 1);
}

std::uint64_t leftover_budget(std::uint64_t budget, const BorderPlan& plan,
                              std::uint64_t warmup_cost) {
  if (budget < plan.border_calls + warmup_cost) {
    throw std::invalid_argument("leftover_budget: borders and warm-up exceed the budget");
  }
  const std::uint64_t left = budget - plan.border_calls - warmup_cost;
  if (left == 0) {
    throw std::invalid_argument("leftover_budget: nothing left for the sampling loop");
  }
  return left;
}

double variance_bound(const StrataStats& stats, const WeightProfile& weights,
                      std::uint64_t b_tilde, double gamma_k, std::uint64_t k_bits) {
  if (b_tilde == 0) throw std::invalid_argument("variance_bound: b_tilde must be positive");
  if (weights.n() != stats.n() || weights.order() != stats.order()) {
    throw std::invalid_argument("variance_bound: weight profile shape mismatch");
  }
  const int n = stats.n();
  const int k = stats.order();
  const std::size_t rank = stats.rank_of(k_bits);
  double acc = 0.0;
  for (unsigned wi = 0; wi < (1u << k); ++wi) {
    const int w = std::popcount(wi);
    for (int ell = 0; ell <= n - k; ++ell) {
      if (!stats.is_implicit(w, ell)) continue;
      const double cw = binomial_d(n - k, ell) * weights.lambda(ell);
      acc += cw * cw * stats.variance(stats.slot(rank, wi, ell));
    }
  }
  return gamma_k / static_cast<double>(b_tilde) * acc;
}

double chebyshev_bound(const StrataStats& stats, const WeightProfile& weights,
                       std::uint64_t b_tilde, double gamma_k, std::uint64_t k_bits, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("chebyshev_bound: eps must be positive");
  return variance_bound(stats, weights, b_tilde, gamma_k, k_bits) / (eps * eps);
}

ProbabilityBound hoeffding_bound(const StrataStats& stats, const WeightProfile& weights,
                                 const BorderPlan& plan, std::uint64_t b_tilde, double gamma_k,
                                 std::uint64_t k_bits, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("hoeffding_bound: eps must be positive");
  if (b_tilde == 0) throw std::invalid_argument("hoeffding_bound: b_tilde must be positive");
  if (plan.s_exp != stats.s_exp()) {
    throw std::invalid_argument("hoeffding_bound: plan and stats disagree on the border split");
  }
  const int n = stats.n();
  const int k = stats.order();
  const std::size_t rank = stats.rank_of(k_bits);
  const double range_total = stats.range_sum(rank);

  ProbabilityBound bound;
  if (range_total == 0.0) return bound;

  const double base = std::exp(-static_cast<double>(b_tilde) / (2.0 * gamma_k * gamma_k));
  const double floor_term =
      std::floor(static_cast<double>(b_tilde) / (2.0 * gamma_k));
  double acc = 0.0;
  for (unsigned wi = 0; wi < (1u << k); ++wi) {
    const int w = std::popcount(wi);
    for (int ell = 0; ell <= n - k; ++ell) {
      if (!stats.is_implicit(w, ell)) continue;
      if (stats.range(stats.slot(rank, wi, ell)) == 0.0) continue;
      const double cw = binomial_d(n - k, ell) * weights.lambda(ell);
      const double x = 2.0 * eps * eps / (cw * cw * range_total * range_total);
      // q = exp(-x); the geometric tail is 2 q^floor / (1/q - 1) = 2 e^{-x m} / (e^x - 1).
      acc += base + 2.0 * std::exp(-x * floor_term) / std::expm1(x);
    }
  }
  bound.raw = acc;
  bound.clipped = acc > 1.0;
  return bound;
}

}  // namespace interactionkit
