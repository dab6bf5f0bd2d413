#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "interactionkit/game.hpp"

namespace interactionkit {

/// Discrete derivative of the game at S with respect to K:
/// the alternating sum over W subset of K of nu(S union W), sign (-1)^(|K|-|W|).
/// S and K must be disjoint. Performs exactly 2^|K| evaluations.
template <typename Evaluator>
double discrete_derivative_with(Evaluator&& eval, std::uint64_t k_bits, std::uint64_t s_bits) {
  if ((k_bits & s_bits) != 0) {
    throw std::invalid_argument("discrete_derivative: S and K overlap");
  }
  const int k = std::popcount(k_bits);
  double acc = 0.0;
  // Enumerate submasks of k_bits, empty set included.
  std::uint64_t w = 0;
  while (true) {
    const double v = eval(s_bits | w);
    if (((k - std::popcount(w)) & 1) != 0) {
      acc -= v;
    } else {
      acc += v;
    }
    if (w == k_bits) break;
    w = (w - k_bits) & k_bits;
  }
  return acc;
}

inline double discrete_derivative(const Game& game, std::uint64_t k_bits, std::uint64_t s_bits) {
  return discrete_derivative_with([&](std::uint64_t c) { return game.value(c); }, k_bits, s_bits);
}

inline double discrete_derivative(BudgetedOracle& oracle, std::uint64_t k_bits,
                                  std::uint64_t s_bits) {
  return discrete_derivative_with([&](std::uint64_t c) { return oracle.evaluate(c); }, k_bits,
                                  s_bits);
}

}  // namespace interactionkit
