#pragma once

#include <cstdint>
#include <string>

namespace interactionkit {

/// Exact rational with 64-bit numerator/denominator, reduced, denominator > 0.
/// Intermediate products use 128-bit arithmetic; overflow of the reduced
/// result throws.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

/// Bernoulli number B_m, m <= 32, under the convention B_1 = -1/2 (the sign
/// under which the recursive multi-order aggregation below sums to the grand
/// coalition's worth; pinned by test). Computed from the recurrence
/// sum_{j=0}^{m} C(m+1,j) B_j = 0.
Rational bernoulli_number(int m);

}  // namespace interactionkit
