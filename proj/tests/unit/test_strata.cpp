#include "doctest.h"

#include "interactionkit/exact_cii.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/strata_table.hpp"
#include "test_support.hpp"

using namespace interactionkit;
using namespace testsupport;

TEST_CASE("stratum assignment") {
  {
    const auto [w, ell] = stratum_assign(0b11010, 0b00110);  // A={1,3,4}, K={1,2}
    CHECK(w == 0b00010);
    CHECK(ell == 2);
  }
  {
    const auto [w, ell] = stratum_assign(0, 0b101);
    CHECK(w == 0);
    CHECK(ell == 0);
  }
  {
    const auto [w, ell] = stratum_assign(full_mask(6), 0b101);
    CHECK(w == 0b101);
    CHECK(ell == 4);
  }
}

TEST_CASE("running mean update") {
  CHECK(update_mean(0.0, 0, 5.0) == 5.0);
  CHECK(update_mean(2.0, 1, 4.0) == 3.0);
  CHECK(update_mean(3.0, 3, 3.0) == 3.0);
}

TEST_CASE("update_sample touches exactly one stratum per set") {
  StrataTable t(6, 2);
  Rng rng(5);
  std::vector<int> players{0, 1, 2, 3, 4, 5};
  std::uint64_t draws = 0;
  for (int i = 0; i < 37; ++i) {
    const auto bits = rng.subset_of_size(players, 3);
    t.update_sample(bits, 3, 1.0);
    ++draws;
  }
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < t.num_strata(); ++s) total += t.count(s);
  CHECK(total == draws * t.num_sets());
}

TEST_CASE("pairwise aggregation shortcut equals the generic path bit for bit") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));  // 4..10
    StrataTable t(n, 2);
    // Populate with arbitrary values and counts, a few left untouched.
    std::vector<int> players(n);
    for (int i = 0; i < n; ++i) players[i] = i;
    const int samples = 20 + static_cast<int>(rng.below(100));
    for (int i = 0; i < samples; ++i) {
      const int size = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
      const auto bits = rng.subset_of_size(players, size);
      t.update_sample(bits, size, rng.unit() * 10 - 5);
    }
    const auto generic = t.aggregate(WeightProfile(IndexKind::sii, n, 2));
    const auto pairs = aggregate_pairs_check(t);
    for (std::size_t r = 0; r < generic.size(); ++r) {
      CHECK(generic[r] == pairs[r]);  // exact equality
    }
  }
}

TEST_CASE("pairwise shortcut on an empty table is all zeros") {
  StrataTable t(7, 2);
  const auto m = aggregate_pairs_check(t);
  for (std::size_t r = 0; r < m.size(); ++r) CHECK(m[r] == 0.0);
}

TEST_CASE("pairwise shortcut on fully enumerated strata equals exact scores") {
  const auto g = SoumGame::generate(5, 20, 31);
  const auto table = exact_strata(g, 2);
  const auto pairs = aggregate_pairs_check(table);
  const auto exact = exact_cii(g, IndexKind::sii, 2);
  CHECK(max_abs_diff(pairs, exact) < 1e-12);
}

TEST_CASE("aggregate rejects mismatched weight shapes") {
  StrataTable t(6, 2);
  CHECK_THROWS_AS(t.aggregate(WeightProfile(IndexKind::sii, 6, 3)), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_pairs_check(StrataTable(6, 3)), std::invalid_argument);
}
