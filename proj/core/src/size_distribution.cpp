#include "interactionkit/size_distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace interactionkit {

bool SizeDistribution::symmetric(double tol) const {
  for (int s = 0; s <= n; ++s) {
    if (std::abs(p[static_cast<std::size_t>(s)] - p[static_cast<std::size_t>(n - s)]) > tol) {
      return false;
    }
  }
  return true;
}

SizeDistribution size_distribution_uniform(int n) {
  if (n < 4) throw std::invalid_argument("size_distribution_uniform: requires n >= 4");
  SizeDistribution d;
  d.n = n;
  d.p.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const double mass = 1.0 / static_cast<double>(n - 3);
  for (int s = 2; s <= n - 2; ++s) d.p[static_cast<std::size_t>(s)] = mass;
  return d;
}

SizeDistribution size_distribution_pairs(int n) {
  if (n < 4) throw std::invalid_argument("size_distribution_pairs: requires n >= 4");
  SizeDistribution d;
  d.n = n;
  d.p.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const double beta =
      (n % 2 == 0)
          ? static_cast<double>(n) * (n - 2) / (2.0 * (static_cast<double>(n) * n - 4 * n + 2))
          : static_cast<double>(n - 1) / (2.0 * (n - 3));
  for (int s = 2; s <= n - 2; ++s) {
    double mass;
    if (2 * s <= n - 1) {
      mass = beta / (static_cast<double>(s) * (s - 1));
    } else {
      // 2s >= n; the two branch conditions tile the integers with no gap.
      mass = beta / (static_cast<double>(n - s) * (n - s - 1));
    }
    d.p[static_cast<std::size_t>(s)] = mass;
  }
  return d;
}

}  // namespace interactionkit
