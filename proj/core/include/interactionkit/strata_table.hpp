#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "interactionkit/combinatorics.hpp"
#include "interactionkit/estimate_map.hpp"
#include "interactionkit/weights.hpp"

namespace interactionkit {

/// The stratum a sampled coalition A contributes to for interaction set K:
/// W = A intersect K (as bits), l = |A| - |W|.
inline std::pair<std::uint64_t, int> stratum_assign(std::uint64_t a_bits, std::uint64_t k_bits) {
  const std::uint64_t w = a_bits & k_bits;
  return {w, std::popcount(a_bits) - std::popcount(w)};
}

/// Incremental running mean: the average after folding `value` into a mean of
/// `count` samples.
inline double update_mean(double old_mean, std::uint64_t count, double value) {
  return (old_mean * static_cast<double>(count) + value) / static_cast<double>(count + 1);
}

/// Per-order store of stratum estimates I_hat[K, W, l] and sample counters.
/// One stratum per (interaction set K, W subset of K, outside size l); a
/// sampled coalition touches exactly one stratum of every K.
///
/// Memory is dense: C(n,k) * 2^k * (n-k+1) slots, which is what limits large
/// interaction orders.
class StrataTable {
 public:
  StrataTable(int n, int k);

  int n() const { return n_; }
  int order() const { return k_; }
  std::size_t num_sets() const { return kbits_.size(); }
  std::size_t num_strata() const { return est_.size(); }
  std::uint64_t set_bits(std::size_t rank) const { return kbits_[rank]; }

  /// Flat slot of stratum (K-rank, W-index within K, l).
  std::size_t slot(std::size_t rank, unsigned w_index, int ell) const {
    return ((rank << k_) + w_index) * static_cast<std::size_t>(n_ - k_ + 1) +
           static_cast<std::size_t>(ell);
  }

  /// W as a compact index: bit j set iff the j-th smallest member of K is in A.
  unsigned w_index_of(std::size_t rank, std::uint64_t a_bits) const {
    const std::uint8_t* mem = &members_[rank * static_cast<std::size_t>(k_)];
    unsigned wi = 0;
    for (int j = 0; j < k_; ++j) {
      wi |= static_cast<unsigned>((a_bits >> mem[j]) & 1u) << j;
    }
    return wi;
  }

  double estimate(std::size_t s) const { return est_[s]; }
  std::uint64_t count(std::size_t s) const { return cnt_[s]; }

  /// Position of the j-th smallest member of the rank-th interaction set.
  int member(std::size_t rank, int j) const {
    return members_[rank * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)];
  }

  /// One-sample initialization used by the warm-up phase.
  void seed_stratum(std::size_t rank, unsigned w_index, int ell, double value) {
    const std::size_t s = slot(rank, w_index, ell);
    est_[s] = value;
    cnt_[s] = 1;
  }

  /// Folds one sampled coalition of size `a_size` into the running mean of
  /// exactly one stratum per interaction set.
  void update_sample(std::uint64_t a_bits, int a_size, double value);

  /// Accumulates a raw worth into the stratum sums (exhaustive phases). Call
  /// normalize_explicit / normalize_all afterwards to turn sums into averages.
  void accumulate_raw(std::uint64_t a_bits, int a_size, double value);

  /// Converts raw sums of every stratum with l + |W| in the explicit size set
  /// {0..s_exp, n-s_exp..n} into exact averages with counters C(n-k,l).
  void normalize_explicit(int s_exp);

  /// Marks every size explicit and normalizes everything (full enumeration).
  void normalize_all();

  int explicit_threshold() const { return s_exp_; }
  bool is_explicit(unsigned w_size, int ell) const {
    const int s = ell + static_cast<int>(w_size);
    return s_exp_ >= 0 && (s <= s_exp_ || s >= n_ - s_exp_);
  }

  /// Number of implicit strata with zero samples.
  std::uint64_t empty_implicit_strata() const;

  /// Sum of implicit-stratum counters (loop + warm-up samples).
  std::uint64_t implicit_sample_total() const;

  /// Generic aggregation of the strata into index scores:
  ///   I_hat[K] = sum_l aggregation_weight(l) * sum_W (-1)^(k-|W|) I_hat[K,W,l].
  /// `scale`, when given, multiplies each stratum estimate (same indexing as
  /// the table) before summation.
  EstimateMap aggregate(const WeightProfile& weights, const double* scale = nullptr) const;

 private:
  int n_;
  int k_;
  int s_exp_ = -1;
  std::vector<std::uint64_t> kbits_;
  std::vector<std::uint8_t> members_;
  std::vector<double> est_;
  std::vector<std::uint64_t> cnt_;
};

/// Order-2 Shapley-interaction aggregation written out by hand, four strata
/// per size with coefficient 1/(n-1). Exists as a cross-check: it must agree
/// with StrataTable::aggregate under sii weights bit for bit.
EstimateMap aggregate_pairs_check(const StrataTable& table);

}  // namespace interactionkit
