#include "interactionkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace interactionkit {

namespace {

void check_same_keys(const EstimateMap& a, const EstimateMap& b) {
  if (a.n() != b.n() || a.order() != b.order()) {
    throw std::invalid_argument("metric: maps disagree on player count or order");
  }
}

std::vector<std::size_t> top_ranks_by_magnitude(const EstimateMap& map, std::size_t m) {
  std::vector<std::size_t> ranks(map.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
  std::sort(ranks.begin(), ranks.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(map[a]);
    const double mb = std::abs(map[b]);
    if (ma != mb) return ma > mb;
    return map.key(a) < map.key(b);
  });
  ranks.resize(m);
  return ranks;
}

}  // namespace

double mse(const EstimateMap& est, const EstimateMap& gt) {
  check_same_keys(est, gt);
  double acc = 0.0;
  for (std::size_t r = 0; r < est.size(); ++r) {
    const double d = est[r] - gt[r];
    acc += d * d;
  }
  return acc / static_cast<double>(est.size());
}

double prec_at(const EstimateMap& est, const EstimateMap& gt, int m) {
  check_same_keys(est, gt);
  if (m < 1) throw std::invalid_argument("prec_at: m must be positive");
  const std::size_t mm = std::min<std::size_t>(static_cast<std::size_t>(m), est.size());
  const auto top_est = top_ranks_by_magnitude(est, mm);
  const auto top_gt = top_ranks_by_magnitude(gt, mm);
  std::vector<bool> in_gt(est.size(), false);
  for (std::size_t r : top_gt) in_gt[r] = true;
  std::size_t hits = 0;
  for (std::size_t r : top_est) {
    if (in_gt[r]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(mm);
}

}  // namespace interactionkit
