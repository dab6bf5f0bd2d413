#include "interactionkit/estimate_map.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "interactionkit/combinatorics.hpp"
#include "interactionkit/detail/text.hpp"
#include "interactionkit/tabular_game.hpp"

namespace interactionkit {

EstimateMap::EstimateMap(int n, int k, IndexKind kind)
    : n_(n), k_(k), kind_(kind), keys_(enumerate_k_subsets(n, k)) {
  if (k < 1 || k > n) throw std::invalid_argument("EstimateMap: order must satisfy 1 <= k <= n");
  scores_.assign(keys_.size(), 0.0);
}

std::size_t EstimateMap::rank_of(std::uint64_t kbits) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), kbits);
  if (it == keys_.end() || *it != kbits) {
    throw std::invalid_argument("EstimateMap: no entry for the given interaction set");
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

double EstimateMap::at_key(std::uint64_t kbits) const { return scores_[rank_of(kbits)]; }

void EstimateMap::write_csv(std::ostream& out) const {
  out << n_ << "," << k_ << "," << to_string(kind_) << "\n";
  for (std::size_t r = 0; r < keys_.size(); ++r) {
    out << bits_to_string(keys_[r], n_) << "," << detail::format_double(scores_[r]) << "\n";
  }
}

void EstimateMap::write_csv_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write estimate CSV: " + path);
  write_csv(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

EstimateMap EstimateMap::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("estimate CSV: empty input");
  line = detail::strip_cr(line);
  std::istringstream header(line);
  std::string n_str, k_str, kind_str;
  if (!std::getline(header, n_str, ',') || !std::getline(header, k_str, ',') ||
      !std::getline(header, kind_str)) {
    throw std::runtime_error("estimate CSV: malformed header (expected n,k,kind)");
  }
  int n = 0, k = 0;
  try {
    n = std::stoi(n_str);
    k = std::stoi(k_str);
  } catch (const std::exception&) {
    throw std::runtime_error("estimate CSV: unparsable n or k in header");
  }
  EstimateMap map(n, k, index_kind_from_string(kind_str));

  std::size_t rows = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("estimate CSV: malformed row at line " + std::to_string(lineno));
    }
    const std::uint64_t key = bits_from_string(line.substr(0, comma), n);
    const double score = detail::parse_double(line.substr(comma + 1), "estimate CSV");
    const auto it = std::lower_bound(map.keys_.begin(), map.keys_.end(), key);
    if (it == map.keys_.end() || *it != key) {
      throw std::runtime_error("estimate CSV: key of wrong cardinality at line " +
                               std::to_string(lineno));
    }
    map.scores_[static_cast<std::size_t>(it - map.keys_.begin())] = score;
    ++rows;
  }
  if (rows != map.size()) {
    throw std::runtime_error("estimate CSV: expected " + std::to_string(map.size()) +
                             " rows, found " + std::to_string(rows));
  }
  return map;
}

EstimateMap EstimateMap::read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open estimate CSV: " + path);
  return read_csv(in);
}

}  // namespace interactionkit
