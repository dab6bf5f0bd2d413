#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interactionkit/game.hpp"

namespace interactionkit {

struct SoumTerm {
  std::uint64_t subset = 0;
  double coefficient = 0.0;
};

/// Sum-of-unanimity game: nu(S) = sum of coefficients of terms whose subset
/// is contained in S. Coefficients are non-negative, so the game is monotone.
class SoumGame : public Game {
 public:
  SoumGame(int n, std::vector<SoumTerm> terms);

  /// Random instance: term subsets drawn uniformly from the full power set
  /// (empty set and grand coalition included), coefficients uniform in [0,1).
  /// Identical seeds yield identical games.
  static SoumGame generate(int n, int num_terms, std::uint64_t seed);

  double value(std::uint64_t coalition_bits) const override;

  const std::vector<SoumTerm>& terms() const { return terms_; }

  /// Text format: line 1 "n=<int>", then one "<bitstring>,<coefficient>" line
  /// per term, player 0 leftmost in the bitstring.
  static SoumGame read_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  std::vector<SoumTerm> terms_;
};

}  // namespace interactionkit
