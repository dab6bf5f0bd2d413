#pragma once

#include <cstdint>

#include "interactionkit/borders.hpp"
#include "interactionkit/strata_statistics.hpp"
#include "interactionkit/weights.hpp"

namespace interactionkit {

/// Analysis constant entering all concentration bounds:
/// 2(n-1)^2 at order 2, n^(k-1) (n-k+1)^2 at orders >= 3.
double gamma_factor(int n, int k);

/// Budget left for the sampling loop after the border phase and warm-up.
/// A result of zero or less violates the bounds' standing assumption and is
/// rejected.
std::uint64_t leftover_budget(std::uint64_t budget, const BorderPlan& plan,
                              std::uint64_t warmup_cost);

/// Upper bound on the variance of one interaction estimate under warm-up:
/// (gamma_k / b_tilde) * sum over implicit strata of C(n-k,l)^2 lambda^2 sigma^2.
double variance_bound(const StrataStats& stats, const WeightProfile& weights,
                      std::uint64_t b_tilde, double gamma_k, std::uint64_t k_bits);

/// Probability that the absolute estimation error exceeds eps, from the
/// variance bound and Chebyshev's inequality. Raw value; may exceed 1.
double chebyshev_bound(const StrataStats& stats, const WeightProfile& weights,
                       std::uint64_t b_tilde, double gamma_k, std::uint64_t k_bits, double eps);

struct ProbabilityBound {
  double raw = 0.0;
  bool clipped = false;  // raw exceeded 1
  double value() const { return clipped ? 1.0 : raw; }
};

/// Range-based tail bound: per implicit stratum,
///   exp(-b_tilde / (2 gamma^2)) + 2 q^floor(b_tilde / (2 gamma)) / (1/q - 1)
/// with q = exp(-2 eps^2 / (C(n-k,l)^2 lambda^2 R_K^2)) and R_K the sum of the
/// set's implicit-stratum ranges, summed over strata. Strata with zero range
/// contribute nothing (their estimation error is exactly zero); if every
/// range is zero the bound is zero.
ProbabilityBound hoeffding_bound(const StrataStats& stats, const WeightProfile& weights,
                                 const BorderPlan& plan, std::uint64_t b_tilde, double gamma_k,
                                 std::uint64_t k_bits, double eps);

}  // namespace interactionkit
