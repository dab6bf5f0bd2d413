#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "interactionkit/weights.hpp"

namespace interactionkit {

/// Scores for every interaction set K of one order: exact values, estimates,
/// and ground truth all use this shape. Entries are stored densely in
/// ascending numeric key order (= colexicographic subset order).
class EstimateMap {
 public:
  EstimateMap(int n, int k, IndexKind kind);

  int n() const { return n_; }
  int order() const { return k_; }
  IndexKind kind() const { return kind_; }

  std::size_t size() const { return scores_.size(); }
  std::uint64_t key(std::size_t rank) const { return keys_[rank]; }

  double& operator[](std::size_t rank) { return scores_[rank]; }
  double operator[](std::size_t rank) const { return scores_[rank]; }

  /// Score for the interaction set with the given membership bits.
  double at_key(std::uint64_t kbits) const;

  /// Rank of the interaction set with the given membership bits.
  std::size_t rank_of(std::uint64_t kbits) const;

  const std::vector<double>& scores() const { return scores_; }
  std::vector<double>& scores() { return scores_; }

  /// CSV: first line "<n>,<k>,<kind>", then "<bitstring>,<score>" rows sorted
  /// ascending by key, shortest round-trip decimals.
  void write_csv(std::ostream& out) const;
  void write_csv_file(const std::string& path) const;
  static EstimateMap read_csv(std::istream& in);
  static EstimateMap read_csv_file(const std::string& path);

 private:
  int n_;
  int k_;
  IndexKind kind_;
  std::vector<std::uint64_t> keys_;
  std::vector<double> scores_;
};

}  // namespace interactionkit
