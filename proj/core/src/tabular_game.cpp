#include "interactionkit/tabular_game.hpp"

#include <fstream>
#include <stdexcept>

#include "interactionkit/detail/text.hpp"

namespace interactionkit {

namespace {
// Dense tables above this player count would not fit a sane text file.
constexpr int kMaxTabularPlayers = 26;
}  // namespace

std::string bits_to_string(std::uint64_t bits, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t bits_from_string(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n) {
    throw std::runtime_error("bitstring '" + s + "' does not have length " + std::to_string(n));
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const char c = s[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (c != '0') {
      throw std::runtime_error("bitstring '" + s + "' contains characters other than 0/1");
    }
  }
  return bits;
}

TabularGame::TabularGame(int n, std::vector<double> values) : Game(n), values_(std::move(values)) {
  const std::size_t expected = std::size_t{1} << n;
  if (values_.size() != expected) {
    throw std::invalid_argument("TabularGame: value table must have exactly 2^n entries");
  }
}

TabularGame TabularGame::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tabular game file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("tabular game file is empty: " + path);
  line = detail::strip_cr(line);
  if (line.rfind("n=", 0) != 0) {
    throw std::runtime_error("tabular game file: malformed header (expected n=<int>)");
  }
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("tabular game file: unparsable player count");
  }
  if (n < 1 || n > kMaxTabularPlayers) {
    throw std::runtime_error("tabular game file: player count out of range [1, " +
                             std::to_string(kMaxTabularPlayers) + "]");
  }

  const std::size_t total = std::size_t{1} << n;
  std::vector<double> values(total, 0.0);
  std::vector<bool> seen(total, false);
  std::size_t rows = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("tabular game file: malformed row at line " +
                               std::to_string(lineno));
    }
    const std::uint64_t key = bits_from_string(line.substr(0, comma), n);
    if (seen[key]) {
      throw std::runtime_error("tabular game file: duplicate coalition at line " +
                               std::to_string(lineno));
    }
    seen[key] = true;
    values[key] = detail::parse_double(line.substr(comma + 1), "tabular game file");
    ++rows;
  }
  if (rows != total) {
    throw std::runtime_error("tabular game file: incomplete table, found " +
                             std::to_string(rows) + " rows, expected " + std::to_string(total));
  }
  return TabularGame(n, std::move(values));
}

TabularGame TabularGame::from_game(const Game& game) {
  const int n = game.players();
  if (n > kMaxTabularPlayers) {
    throw std::invalid_argument("TabularGame::from_game: player count too large to enumerate");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> values(total);
  for (std::uint64_t s = 0; s < total; ++s) values[s] = game.value(s);
  return TabularGame(n, std::move(values));
}

void TabularGame::dump(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tabular game file: " + path);
  out << "n=" << players() << "\n";
  for (std::uint64_t s = 0; s < values_.size(); ++s) {
    out << bits_to_string(s, players()) << "," << detail::format_double(values_[s]) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace interactionkit
