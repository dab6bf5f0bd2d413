#include "interactionkit/nsii.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "interactionkit/bernoulli.hpp"
#include "interactionkit/combinatorics.hpp"

namespace interactionkit {

std::map<std::uint64_t, double> nsii_aggregate(const std::map<int, EstimateMap>& sii_per_order,
                                               int k_max) {
  if (k_max < 1) throw std::invalid_argument("nsii_aggregate: k_max must be >= 1");
  for (int k = 1; k <= k_max; ++k) {
    if (!sii_per_order.count(k)) {
      throw std::invalid_argument("nsii_aggregate: missing sii map for order " +
                                  std::to_string(k));
    }
  }
  const int n = sii_per_order.at(1).n();
  for (const auto& [k, map] : sii_per_order) {
    if (map.n() != n) throw std::invalid_argument("nsii_aggregate: inconsistent player counts");
    if (map.order() != k) throw std::invalid_argument("nsii_aggregate: map order mismatch");
    if (map.kind() != IndexKind::sii && !(k == 1 && map.kind() == IndexKind::sv)) {
      throw std::invalid_argument("nsii_aggregate: inputs must be sii maps");
    }
  }

  std::map<std::uint64_t, double> phi;
  for (std::size_t r = 0; r < sii_per_order.at(1).size(); ++r) {
    phi[sii_per_order.at(1).key(r)] = sii_per_order.at(1)[r];
  }

  std::vector<double> bern(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int m = 0; m <= k_max; ++m) bern[static_cast<std::size_t>(m)] = bernoulli_number(m).to_double();

  for (int np = 2; np <= k_max; ++np) {
    const EstimateMap& top = sii_per_order.at(np);
    std::map<std::uint64_t, double> next;
    for (std::size_t r = 0; r < top.size(); ++r) next[top.key(r)] = top[r];
    for (const auto& [kbits, value] : phi) {
      const int ksize = std::popcount(kbits);
      // Correction: order-np scores of all supersets K union K~ with
      // |K~| = np - |K| drawn from the complement of K.
      double corr = 0.0;
      const std::uint64_t rest = full_mask(n) & ~kbits;
      const auto pool = members_of(rest);
      const int add = np - ksize;
      const std::uint64_t count = binomial(static_cast<int>(pool.size()), add);
      std::uint64_t picks = (std::uint64_t{1} << add) - 1;
      for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t extra = 0;
        for (std::uint64_t p = picks; p; p &= p - 1) {
          extra |= std::uint64_t{1} << pool[static_cast<std::size_t>(std::countr_zero(p))];
        }
        corr += top.at_key(kbits | extra);
        if (i + 1 < count) picks = next_k_subset(picks);
      }
      next[kbits] = value + bern[static_cast<std::size_t>(add)] * corr;
    }
    phi = std::move(next);
  }
  return phi;
}

}  // namespace interactionkit
