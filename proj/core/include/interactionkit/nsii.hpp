#pragma once

#include <cstdint>
#include <map>

#include "interactionkit/estimate_map.hpp"

namespace interactionkit {

/// Efficiency-restoring aggregation of Shapley-interaction scores across
/// orders. Input: one sii map per order 1..k_max over the same game (exact or
/// estimated). Output: a value for every interaction set of size 1..k_max.
///
/// Built iteratively over the running aggregation order n': at |K| = n' the
/// value is the order-n' sii score; below that, the previous order's value
/// plus B_{n'-|K|} times the sum of order-n' sii scores over supersets of K,
/// with B the Bernoulli numbers (B_1 = -1/2).
///
/// The values of sets of size 1..k_max sum to nu(N) - nu(empty); for games
/// with a zero-worth empty coalition that is the grand coalition's worth.
std::map<std::uint64_t, double> nsii_aggregate(const std::map<int, EstimateMap>& sii_per_order,
                                               int k_max);

}  // namespace interactionkit
