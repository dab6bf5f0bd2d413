#pragma once

#include "interactionkit/estimate_map.hpp"

namespace interactionkit {

/// Mean squared error over all interaction sets of the shared order.
double mse(const EstimateMap& est, const EstimateMap& gt);

/// Fraction of the m largest-|score| sets of the ground truth recovered among
/// the m largest-|score| estimated sets, with m capped at the number of sets.
/// Ties are broken by ascending coalition key, so the metric is deterministic.
double prec_at(const EstimateMap& est, const EstimateMap& gt, int m = 10);

}  // namespace interactionkit
