#include "interactionkit/strata_table.hpp"

#include <stdexcept>

namespace interactionkit {

StrataTable::StrataTable(int n, int k) : n_(n), k_(k), kbits_(enumerate_k_subsets(n, k)) {
  if (k < 1 || k > n) throw std::invalid_argument("StrataTable: order must satisfy 1 <= k <= n");
  members_.resize(kbits_.size() * static_cast<std::size_t>(k));
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    std::uint64_t bits = kbits_[r];
    for (int j = 0; j < k; ++j) {
      members_[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  const std::size_t total =
      kbits_.size() * (std::size_t{1} << k) * static_cast<std::size_t>(n - k + 1);
  est_.assign(total, 0.0);
  cnt_.assign(total, 0);
}

void StrataTable::update_sample(std::uint64_t a_bits, int a_size, double value) {
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    const std::uint64_t w_bits = a_bits & kbits_[r];
    const unsigned wi = w_index_of(r, a_bits);
    const int ell = a_size - std::popcount(w_bits);
    const std::size_t s = slot(r, wi, ell);
    est_[s] = update_mean(est_[s], cnt_[s], value);
    ++cnt_[s];
  }
}

void StrataTable::accumulate_raw(std::uint64_t a_bits, int a_size, double value) {
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    const std::uint64_t w_bits = a_bits & kbits_[r];
    const unsigned wi = w_index_of(r, a_bits);
    const int ell = a_size - std::popcount(w_bits);
    const std::size_t s = slot(r, wi, ell);
    est_[s] += value;
    ++cnt_[s];
  }
}

void StrataTable::normalize_explicit(int s_exp) {
  s_exp_ = s_exp;
  const int len = n_ - k_ + 1;
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    for (unsigned wi = 0; wi < (1u << k_); ++wi) {
      const unsigned w_size = static_cast<unsigned>(std::popcount(wi));
      for (int ell = 0; ell < len; ++ell) {
        if (!is_explicit(w_size, ell)) continue;
        const std::size_t s = slot(r, wi, ell);
        const std::uint64_t members = binomial(n_ - k_, ell);
        est_[s] /= static_cast<double>(members);
        cnt_[s] = members;
      }
    }
  }
}

void StrataTable::normalize_all() { normalize_explicit(n_ / 2 + 1); }

std::uint64_t StrataTable::empty_implicit_strata() const {
  std::uint64_t empty = 0;
  const int len = n_ - k_ + 1;
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    for (unsigned wi = 0; wi < (1u << k_); ++wi) {
      const unsigned w_size = static_cast<unsigned>(std::popcount(wi));
      for (int ell = 0; ell < len; ++ell) {
        if (is_explicit(w_size, ell)) continue;
        if (cnt_[slot(r, wi, ell)] == 0) ++empty;
      }
    }
  }
  return empty;
}

std::uint64_t StrataTable::implicit_sample_total() const {
  std::uint64_t total = 0;
  const int len = n_ - k_ + 1;
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    for (unsigned wi = 0; wi < (1u << k_); ++wi) {
      const unsigned w_size = static_cast<unsigned>(std::popcount(wi));
      for (int ell = 0; ell < len; ++ell) {
        if (is_explicit(w_size, ell)) continue;
        total += cnt_[slot(r, wi, ell)];
      }
    }
  }
  return total;
}

EstimateMap StrataTable::aggregate(const WeightProfile& weights, const double* scale) const {
  if (weights.n() != n_ || weights.order() != k_) {
    throw std::invalid_argument("StrataTable::aggregate: weight profile shape mismatch");
  }
  EstimateMap out(n_, k_, weights.kind());
  const int len = n_ - k_ + 1;
  for (std::size_t r = 0; r < kbits_.size(); ++r) {
    double acc = 0.0;
    for (int ell = 0; ell < len; ++ell) {
      double inner = 0.0;
      for (unsigned wi = 0; wi < (1u << k_); ++wi) {
        const std::size_t s = slot(r, wi, ell);
        const double v = scale ? est_[s] * scale[s] : est_[s];
        if (((k_ - std::popcount(wi)) & 1) != 0) {
          inner -= v;
        } else {
          inner += v;
        }
      }
      acc += weights.aggregation_weight(ell) * inner;
    }
    out[r] = acc;
  }
  return out;
}

EstimateMap aggregate_pairs_check(const StrataTable& table) {
  if (table.order() != 2) {
    throw std::invalid_argument("aggregate_pairs_check: table must have order 2");
  }
  const int n = table.n();
  EstimateMap out(n, 2, IndexKind::sii);
  const double coeff = 1.0 / static_cast<double>(n - 1);
  for (std::size_t r = 0; r < table.num_sets(); ++r) {
    double acc = 0.0;
    for (int ell = 0; ell <= n - 2; ++ell) {
      // Four cases per size: neither of {i,j} sampled, i only, j only, both.
      double inner = table.estimate(table.slot(r, 0u, ell));
      inner -= table.estimate(table.slot(r, 1u, ell));
      inner -= table.estimate(table.slot(r, 2u, ell));
      inner += table.estimate(table.slot(r, 3u, ell));
      acc += coeff * inner;
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace interactionkit
