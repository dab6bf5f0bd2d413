#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace interactionkit {

/// Hard upper bound on the number of players; coalitions live in one 64-bit word.
inline constexpr int kMaxPlayers = 32;

/// A coalition is a set of players 0..n-1 stored as membership bits.
/// Player i is present iff bit i is set. No bit at position >= n may be set.
struct CoalitionSet {
  std::uint64_t bits = 0;
  int n = 0;

  CoalitionSet() = default;
  CoalitionSet(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
    if (n_ < 1 || n_ > kMaxPlayers) {
      throw std::invalid_argument("CoalitionSet: player count must be in [1, 32]");
    }
    if (n_ < 64 && (bits_ >> n_) != 0) {
      throw std::invalid_argument("CoalitionSet: bit set beyond player count");
    }
  }

  int size() const { return std::popcount(bits); }
  bool contains(int player) const { return (bits >> player) & 1u; }
  bool subset_of(const CoalitionSet& other) const { return (bits & ~other.bits) == 0; }
};

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Binomial coefficient as an exact 64-bit integer. Valid for n <= 62.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline double binomial_d(int n, int k) { return static_cast<double>(binomial(n, k)); }

/// Next k-subset mask in increasing numeric (= colexicographic) order.
/// Gosper's hack; undefined once the largest k-subset is reached.
inline std::uint64_t next_k_subset(std::uint64_t v) {
  std::uint64_t c = v & (~v + 1);
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

/// All k-subsets of {0..n-1} in ascending numeric order.
inline std::vector<std::uint64_t> enumerate_k_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = full_mask(n);
  while (true) {
    out.push_back(v);
    if (out.size() == binomial(n, k)) break;
    v = next_k_subset(v);
    if (v > limit) break;
  }
  return out;
}

/// Positions of set bits, ascending.
inline std::vector<int> members_of(std::uint64_t bits) {
  std::vector<int> ms;
  while (bits) {
    ms.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return ms;
}

/// Factorials 0!..63! in double precision (exact up to 18!, ~1 ulp beyond).
inline double factorial_d(int m) {
  static const std::vector<double> table = [] {
    std::vector<double> t(64);
    t[0] = 1.0;
    for (int i = 1; i < 64; ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  return table.at(static_cast<std::size_t>(m));
}

}  // namespace interactionkit
