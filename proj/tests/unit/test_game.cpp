#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "interactionkit/game.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/soum_game.hpp"
#include "interactionkit/tabular_game.hpp"
#include "test_support.hpp"

using namespace interactionkit;

namespace {
std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("soum generation: empty game evaluates to zero everywhere") {
  const auto g = SoumGame::generate(8, 0, 7);
  for (std::uint64_t s : {0ull, 0b1ull, 0b10110101ull}) CHECK(g.value(s) == 0.0);
}

TEST_CASE("soum generation is deterministic in the seed") {
  const auto a = SoumGame::generate(8, 50, 7);
  const auto b = SoumGame::generate(8, 50, 7);
  REQUIRE(a.terms().size() == b.terms().size());
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    CHECK(a.terms()[i].subset == b.terms()[i].subset);
    CHECK(a.terms()[i].coefficient == b.terms()[i].coefficient);
  }
  const auto c = SoumGame::generate(8, 50, 8);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    any_diff = any_diff || a.terms()[i].subset != c.terms()[i].subset;
  }
  CHECK(any_diff);
}

TEST_CASE("soum coefficients lie in [0,1)") {
  const auto g = SoumGame::generate(10, 50, 1);
  for (const auto& t : g.terms()) {
    CHECK(t.coefficient >= 0.0);
    CHECK(t.coefficient < 1.0);
  }
}

TEST_CASE("soum generation rejects bad parameters") {
  CHECK_THROWS_AS(SoumGame::generate(40, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(SoumGame::generate(0, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(SoumGame::generate(8, -1, 1), std::invalid_argument);
}

TEST_CASE("soum evaluation follows containment") {
  const SoumGame g(4, {{0b11, 0.5}});
  CHECK(g.value(0b111) == 0.5);
  CHECK(g.value(0b1) == 0.0);
  const SoumGame h(4, {{0b11, 0.5}, {0b1000, 0.25}, {0, 0.125}});
  CHECK(h.value(0b1111) == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(h.value(0) == 0.125);  // empty-subset terms pay at the empty coalition
}

TEST_CASE("soum games are monotone") {
  const auto g = SoumGame::generate(10, 50, 3);
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t t = rng.u64() & full_mask(10);
    const std::uint64_t s = rng.u64() & t;
    CHECK(g.value(s) <= g.value(t));
  }
}

TEST_CASE("tabular game lookup and validation") {
  const auto path = temp_file("ikit_tab_basic.tab");
  {
    std::ofstream out(path);
    out << "n=2\n00,0\n10,1\n01,1\n11,3\n";
  }
  const auto g = TabularGame::load(path.string());
  CHECK(g.players() == 2);
  CHECK(g.value(0b11) == 3.0);
  CHECK(g.value(0b01) == 1.0);
  std::filesystem::remove(path);
}

TEST_CASE("tabular load rejects malformed input") {
  const auto path = temp_file("ikit_tab_bad.tab");
  auto write = [&](const char* body) {
    std::ofstream out(path);
    out << body;
  };

  write("n=2\n00,0\n10,1\n01,1\n");  // one row short
  CHECK_THROWS_WITH_AS(TabularGame::load(path.string()),
                       doctest::Contains("incomplete table"), std::runtime_error);

  write("n=2\n00,0\n10,1\n01,1\n01,2\n");  // duplicate key
  CHECK_THROWS_AS(TabularGame::load(path.string()), std::runtime_error);

  write("players=2\n");  // bad header
  CHECK_THROWS_AS(TabularGame::load(path.string()), std::runtime_error);

  write("n=2\n00,zero\n10,1\n01,1\n11,3\n");  // unparsable real
  CHECK_THROWS_AS(TabularGame::load(path.string()), std::runtime_error);

  write("n=2\n000,0\n10,1\n01,1\n11,3\n");  // wrong bitstring length
  CHECK_THROWS_AS(TabularGame::load(path.string()), std::runtime_error);

  std::filesystem::remove(path);
}

TEST_CASE("tabular dump then load round-trips a soum game exactly") {
  const auto g = SoumGame::generate(6, 30, 11);
  const auto dense = TabularGame::from_game(g);
  const auto path = temp_file("ikit_tab_roundtrip.tab");
  dense.dump(path.string());
  const auto back = TabularGame::load(path.string());
  for (std::uint64_t s = 0; s < (1ull << 6); ++s) CHECK(back.value(s) == g.value(s));
  std::filesystem::remove(path);
}

TEST_CASE("soum file round trip") {
  const auto g = SoumGame::generate(9, 40, 5);
  const auto path = temp_file("ikit_soum_roundtrip.soum");
  g.write_file(path.string());
  const auto back = SoumGame::read_file(path.string());
  REQUIRE(back.terms().size() == g.terms().size());
  for (std::size_t i = 0; i < g.terms().size(); ++i) {
    CHECK(back.terms()[i].subset == g.terms()[i].subset);
    CHECK(back.terms()[i].coefficient == g.terms()[i].coefficient);
  }
  std::filesystem::remove(path);
}

TEST_CASE("budgeted oracle counts every call and stops at the cap") {
  const auto g = SoumGame::generate(5, 10, 2);
  BudgetedOracle one(g, 1);
  CHECK(one.evaluate(0b1) == g.value(0b1));
  CHECK(one.calls_used() == 1);
  CHECK_THROWS_AS(one.evaluate(0b1), BudgetExceeded);
  CHECK(one.calls_used() == 1);

  BudgetedOracle full(g, 1ull << 5);
  for (std::uint64_t s = 0; s < (1ull << 5); ++s) full.evaluate(s);
  CHECK(full.calls_used() == (1ull << 5));
  CHECK(full.remaining() == 0);
}
