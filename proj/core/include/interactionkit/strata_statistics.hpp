#pragma once

#include <cstdint>
#include <vector>

#include "interactionkit/borders.hpp"
#include "interactionkit/game.hpp"
#include "interactionkit/strata_table.hpp"

namespace interactionkit {

/// Population variance and range of the worths inside each implicit stratum:
/// the multiset { nu(S union W) : S outside K, |S| = l }. Explicit strata are
/// computed exactly by the border phase and carry zeros here.
class StrataStats {
 public:
  StrataStats(int n, int k, int s_exp);

  int n() const { return n_; }
  int order() const { return k_; }
  int s_exp() const { return s_exp_; }
  std::size_t num_sets() const { return kbits_.size(); }
  std::uint64_t set_bits(std::size_t rank) const { return kbits_[rank]; }
  std::size_t rank_of(std::uint64_t kbits) const;

  std::size_t slot(std::size_t rank, unsigned w_index, int ell) const {
    return ((rank << k_) + w_index) * static_cast<std::size_t>(n_ - k_ + 1) +
           static_cast<std::size_t>(ell);
  }
  bool is_implicit(int w_size, int ell) const {
    const int s = ell + w_size;
    return s > s_exp_ && s < n_ - s_exp_;
  }

  double variance(std::size_t s) const { return variance_[s]; }
  double range(std::size_t s) const { return range_[s]; }

  /// Sum of implicit-stratum ranges of one interaction set.
  double range_sum(std::size_t rank) const;

  std::vector<double>& variances() { return variance_; }
  std::vector<double>& ranges() { return range_; }

 private:
  int n_;
  int k_;
  int s_exp_;
  std::vector<std::uint64_t> kbits_;
  std::vector<double> variance_;
  std::vector<double> range_;
};

/// Exact strata statistics by full enumeration (two passes over all 2^n
/// coalitions, worths routed to their stratum per interaction set). Capped at
/// n <= 16.
StrataStats strata_statistics(const Game& game, int k, const BorderPlan& plan);

}  // namespace interactionkit
