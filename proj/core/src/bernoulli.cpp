#include "interactionkit/bernoulli.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "interactionkit/combinatorics.hpp"

namespace interactionkit {

namespace {

using int128 = __int128;

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(int128 num, int128 den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int128 g = num == 0 ? den : gcd128(num, den);
  return Rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(static_cast<int128>(num) * o.den + static_cast<int128>(o.num) * den,
                      static_cast<int128>(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(static_cast<int128>(num) * o.num, static_cast<int128>(den) * o.den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational bernoulli_number(int m) {
  if (m < 0 || m > 32) {
    throw std::invalid_argument("bernoulli_number: m must be in [0, 32]");
  }
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(33);
    b[0] = Rational(1, 1);
    for (int k = 1; k <= 32; ++k) {
      // C(k+1, k) B_k = -sum_{j=0}^{k-1} C(k+1, j) B_j
      Rational acc(0, 1);
      for (int j = 0; j < k; ++j) {
        acc = acc + Rational(static_cast<std::int64_t>(binomial(k + 1, j)), 1) * b[j];
      }
      b[k] = acc * Rational(-1, static_cast<std::int64_t>(k) + 1);
    }
    return b;
  }();
  return table[static_cast<std::size_t>(m)];
}

}  // namespace interactionkit
