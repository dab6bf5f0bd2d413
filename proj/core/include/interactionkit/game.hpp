#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "interactionkit/combinatorics.hpp"

namespace interactionkit {

/// A cooperative game: a value function over coalitions of n players.
/// Games are immutable after construction and safe for concurrent reads.
class Game {
 public:
  virtual ~Game() = default;

  /// Worth of the coalition given by membership bits.
  virtual double value(std::uint64_t coalition_bits) const = 0;

  int players() const { return n_; }
  std::uint64_t grand_coalition() const { return full_mask(n_); }

 protected:
  explicit Game(int n) : n_(n) {
    if (n < 1 || n > kMaxPlayers) {
      throw std::invalid_argument("Game: player count must be in [1, 32]");
    }
  }

 private:
  int n_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("budget exceeded: no evaluations remaining") {}
};

/// Wraps a game with a hard cap on evaluations. Every call counts, duplicates
/// included. Single-owner mutable state: one oracle per estimation run.
class BudgetedOracle {
 public:
  BudgetedOracle(const Game& game, std::uint64_t budget) : game_(game), budget_(budget) {}

  double evaluate(std::uint64_t coalition_bits) {
    if (calls_used_ >= budget_) throw BudgetExceeded();
    ++calls_used_;
    return game_.value(coalition_bits);
  }

  const Game& game() const { return game_; }
  int players() const { return game_.players(); }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t calls_used() const { return calls_used_; }
  std::uint64_t remaining() const { return budget_ - calls_used_; }

 private:
  const Game& game_;
  std::uint64_t budget_;
  std::uint64_t calls_used_ = 0;
};

}  // namespace interactionkit
