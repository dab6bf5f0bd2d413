#pragma once

#include "interactionkit/estimate_map.hpp"
#include "interactionkit/game.hpp"
#include "interactionkit/soum_game.hpp"
#include "interactionkit/strata_table.hpp"
#include "interactionkit/weights.hpp"

namespace interactionkit {

/// Ground-truth strata for one order from a single pass over all 2^n
/// coalitions: each worth is routed to its stratum of every interaction set,
/// then sums are turned into exact averages. Capped at n <= 20.
StrataTable exact_strata(const Game& game, int k);

/// Exact index scores by brute force, one enumeration of the value function.
/// Equivalent to the defining weighted sum of discrete derivatives but costs
/// 2^n evaluations instead of recomputing them per interaction set.
EstimateMap exact_cii(const Game& game, IndexKind kind, int k);

/// Closed-form exact scores for a sum-of-unanimity game, by linearity over
/// its terms. For a unanimity term on T (|T| = t) and K inside T:
///   I_K(u_T) = sum_{l = t-k}^{n-k} C(n-t, l-(t-k)) * lambda_{k,l},
/// and 0 when K is not inside T. Runs in O(D * C(n,k) * n); no evaluations.
EstimateMap soum_exact_cii(const SoumGame& game, IndexKind kind, int k);

}  // namespace interactionkit
