#include "interactionkit/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "interactionkit/combinatorics.hpp"

namespace interactionkit {

const char* to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::sii: return "sii";
    case IndexKind::sti: return "sti";
    case IndexKind::fsi: return "fsi";
    case IndexKind::bii: return "bii";
    case IndexKind::sv: return "sv";
  }
  return "?";
}

IndexKind index_kind_from_string(const std::string& s) {
  if (s == "sii") return IndexKind::sii;
  if (s == "sti") return IndexKind::sti;
  if (s == "fsi") return IndexKind::fsi;
  if (s == "bii") return IndexKind::bii;
  if (s == "sv") return IndexKind::sv;
  throw std::invalid_argument("unknown index kind: " + s);
}

WeightProfile::WeightProfile(IndexKind kind, int n, int k) : kind_(kind), n_(n), k_(k) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("WeightProfile: player count must be in [1, 32]");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("WeightProfile: order must satisfy 1 <= k <= n");
  }
  if (kind == IndexKind::sv && k != 1) {
    throw std::invalid_argument("WeightProfile: the Shapley value is only defined at order 1");
  }

  const int len = n - k + 1;
  lambdas_.resize(static_cast<std::size_t>(len));
  agg_.resize(static_cast<std::size_t>(len));

  for (int ell = 0; ell < len; ++ell) {
    double lam = 0.0;
    double agg = 0.0;
    switch (kind) {
      case IndexKind::sii:
        lam = 1.0 / (static_cast<double>(n - k + 1) * binomial_d(n - k, ell));
        agg = 1.0 / static_cast<double>(n - k + 1);
        break;
      case IndexKind::sv:
        // k == 1; identical to sii at order 1.
        lam = 1.0 / (static_cast<double>(n) * binomial_d(n - 1, ell));
        agg = 1.0 / static_cast<double>(n);
        break;
      case IndexKind::sti:
        lam = static_cast<double>(k) / (static_cast<double>(n) * binomial_d(n - 1, ell));
        agg = binomial_d(n - k, ell) * lam;
        break;
      case IndexKind::fsi: {
        const double front = factorial_d(2 * k - 1) / (factorial_d(k - 1) * factorial_d(k - 1));
        lam = front * factorial_d(n - ell - 1) * factorial_d(ell + k - 1) / factorial_d(n + k - 1);
        agg = binomial_d(n - k, ell) * lam;
        break;
      }
      case IndexKind::bii:
        lam = std::ldexp(1.0, -(n - k));
        agg = std::ldexp(binomial_d(n - k, ell), -(n - k));
        break;
    }
    lambdas_[static_cast<std::size_t>(ell)] = lam;
    agg_[static_cast<std::size_t>(ell)] = agg;
  }
}

}  // namespace interactionkit
