#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace interactionkit {

/// SplitMix64 output function. Used to spread seeds before feeding the engine
/// and to derive independent per-run streams from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed for run `index` of a sweep or repeated experiment. Runs are indexed
/// deterministically, so results do not depend on scheduling or thread count.
inline std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix64(master_seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

/// mt19937_64 with unbiased integer draws and a 53-bit unit double.
/// std::uniform_int_distribution is implementation-defined, so draws are
/// hand-rolled to keep identical seeds reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t zone = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= zone);
    return r % bound;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle of the first `count` slots against the whole array.
  /// The prefix is a uniform `count`-permutation of the array's contents.
  void partial_shuffle(std::vector<int>& v, int count) {
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < count; ++i) {
      const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(v[i], v[static_cast<std::size_t>(j)]);
    }
  }

  /// Uniform subset of the given size, drawn from the players listed in `pool`.
  /// `pool` is reused across calls; its contents stay a permutation of itself.
  std::uint64_t subset_of_size(std::vector<int>& pool, int size) {
    partial_shuffle(pool, size);
    std::uint64_t bits = 0;
    for (int i = 0; i < size; ++i) bits |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
    return bits;
  }

  void shuffle(std::vector<int>& v) { partial_shuffle(v, static_cast<int>(v.size())); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace interactionkit
