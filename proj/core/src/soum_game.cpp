#include "interactionkit/soum_game.hpp"

#include <fstream>
#include <stdexcept>

#include "interactionkit/detail/text.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/tabular_game.hpp"

namespace interactionkit {

SoumGame::SoumGame(int n, std::vector<SoumTerm> terms) : Game(n), terms_(std::move(terms)) {
  const std::uint64_t mask = full_mask(n);
  for (const auto& t : terms_) {
    if ((t.subset & ~mask) != 0) {
      throw std::invalid_argument("SoumGame: term subset has players beyond n");
    }
  }
}

SoumGame SoumGame::generate(int n, int num_terms, std::uint64_t seed) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("SoumGame::generate: player count must be in [1, 32]");
  }
  if (num_terms < 0) {
    throw std::invalid_argument("SoumGame::generate: negative term count");
  }
  Rng rng(seed);
  const std::uint64_t mask = full_mask(n);
  std::vector<SoumTerm> terms;
  terms.reserve(static_cast<std::size_t>(num_terms));
  for (int d = 0; d < num_terms; ++d) {
    SoumTerm t;
    t.subset = rng.u64() & mask;
    t.coefficient = rng.unit();
    terms.push_back(t);
  }
  return SoumGame(n, std::move(terms));
}

double SoumGame::value(std::uint64_t coalition_bits) const {
  double v = 0.0;
  for (const auto& t : terms_) {
    if ((t.subset & ~coalition_bits) == 0) v += t.coefficient;
  }
  return v;
}

SoumGame SoumGame::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open SOUM file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("SOUM file is empty: " + path);
  line = detail::strip_cr(line);
  if (line.rfind("n=", 0) != 0) {
    throw std::runtime_error("SOUM file: missing n=<int> header");
  }
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("SOUM file: unparsable player count");
  }
  std::vector<SoumTerm> terms;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("SOUM file: malformed term line " + std::to_string(lineno));
    }
    SoumTerm t;
    t.subset = bits_from_string(detail::strip_cr(line.substr(0, comma)), n);
    t.coefficient = detail::parse_double(line.substr(comma + 1), "SOUM file");
    terms.push_back(t);
  }
  return SoumGame(n, std::move(terms));
}

void SoumGame::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SOUM file: " + path);
  out << "n=" << players() << "\n";
  for (const auto& t : terms_) {
    out << bits_to_string(t.subset, players()) << ","
        << detail::format_double(t.coefficient) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace interactionkit
