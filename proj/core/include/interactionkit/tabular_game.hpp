#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interactionkit/game.hpp"

namespace interactionkit {

/// Dense in-memory game backed by a table of all 2^n coalition values.
/// Evaluation is a pure lookup.
class TabularGame : public Game {
 public:
  TabularGame(int n, std::vector<double> values);

  /// Parses the tabular game file format: line 1 "n=<int>", then exactly 2^n
  /// lines "<bitstring>,<value>" (player 0 leftmost), any order, no duplicates.
  /// Missing or repeated rows are errors; nothing is imputed.
  static TabularGame load(const std::string& path);

  /// Full enumeration of an arbitrary game into a dense table.
  static TabularGame from_game(const Game& game);

  /// Writes the same format load() reads, rows in ascending bit order, with
  /// shortest round-trip decimal representation.
  void dump(const std::string& path) const;

  double value(std::uint64_t coalition_bits) const override {
    return values_[coalition_bits];
  }

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Bitstring codecs shared by the game file formats and the estimate CSVs.
/// Player 0 is the leftmost character.
std::string bits_to_string(std::uint64_t bits, int n);
std::uint64_t bits_from_string(const std::string& s, int n);

}  // namespace interactionkit
