#include "doctest.h"

#include <stdexcept>

#include "interactionkit/size_distribution.hpp"

using namespace interactionkit;

TEST_CASE("uniform size distribution") {
  const auto d5 = size_distribution_uniform(5);
  CHECK(d5(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d5(3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d5(0) == 0.0);
  CHECK(d5(4) == 0.0);

  const auto d4 = size_distribution_uniform(4);
  CHECK(d4(2) == 1.0);

  for (int n = 4; n <= 20; ++n) {
    const auto d = size_distribution_uniform(n);
    double total = 0.0;
    for (int s = 0; s <= n; ++s) total += d(s);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(size_distribution_uniform(3), std::invalid_argument);
}

TEST_CASE("pairwise size distribution hand values") {
  const auto d4 = size_distribution_pairs(4);
  CHECK(d4(2) == doctest::Approx(1.0).epsilon(1e-15));

  const auto d5 = size_distribution_pairs(5);
  CHECK(d5(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d5(3) == doctest::Approx(0.5).epsilon(1e-15));

  const auto d6 = size_distribution_pairs(6);
  CHECK(d6(2) == doctest::Approx(3.0 / 7).epsilon(1e-15));
  CHECK(d6(3) == doctest::Approx(1.0 / 7).epsilon(1e-15));
  CHECK(d6(4) == doctest::Approx(3.0 / 7).epsilon(1e-15));

  CHECK_THROWS_AS(size_distribution_pairs(3), std::invalid_argument);
}

TEST_CASE("pairwise distribution sums to one and is symmetric, n up to 50") {
  for (int n = 4; n <= 50; ++n) {
    const auto d = size_distribution_pairs(n);
    double total = 0.0;
    for (int s = 0; s <= n; ++s) total += d(s);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.symmetric());
    CHECK(d(0) == 0.0);
    CHECK(d(1) == 0.0);
    CHECK(d(n - 1) == 0.0);
    CHECK(d(n) == 0.0);
  }
}
