#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../../tools/cli.hpp"
#include "interactionkit/estimate_map.hpp"
#include "interactionkit/soum_game.hpp"
#include "test_support.hpp"

using namespace interactionkit;
namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  return cli::run(std::vector<std::string>(args));
}

fs::path temp_dir(const char* name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("soum-gen writes a parseable deterministic spec") {
  const auto dir = temp_dir("ikit_cli_soumgen");
  const auto file = (dir / "g.soum").string();
  CHECK(run_cli({"soum-gen", "--n", "12", "--terms", "50", "--seed", "1", "--out", file}) == 0);
  const auto game = SoumGame::read_file(file);
  CHECK(game.players() == 12);
  CHECK(game.terms().size() == 50);

  const auto file2 = (dir / "g2.soum").string();
  CHECK(run_cli({"soum-gen", "--n", "12", "--terms", "50", "--seed", "1", "--out", file2}) == 0);
  CHECK(slurp(file) == slurp(file2));

  CHECK(run_cli({"soum-gen", "--n", "40", "--terms", "5", "--seed", "1", "--out", file}) != 0);
  fs::remove_all(dir);
}

TEST_CASE("exact agrees between the brute-force and closed-form oracles") {
  const auto dir = temp_dir("ikit_cli_exact");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "12", "--terms", "50", "--seed", "3", "--out", spec}) == 0);
  const auto brute = (dir / "brute.csv").string();
  const auto closed = (dir / "closed.csv").string();
  REQUIRE(run_cli({"exact", "--game", spec, "--kind", "sii", "--order", "2", "--oracle", "brute",
                   "--out", brute}) == 0);
  REQUIRE(run_cli({"exact", "--game", spec, "--kind", "sii", "--order", "2", "--oracle", "closed",
                   "--out", closed}) == 0);
  const auto a = EstimateMap::read_csv_file(brute);
  const auto b = EstimateMap::read_csv_file(closed);
  CHECK(testsupport::max_abs_diff(a, b) < 1e-9);
  fs::remove_all(dir);
}

TEST_CASE("exact on a hand-built tabular unanimity game") {
  const auto dir = temp_dir("ikit_cli_tab");
  const auto tab = dir / "u01.tab";
  {
    std::ofstream out(tab);
    out << "n=4\n";
    for (std::uint64_t s = 0; s < 16; ++s) {
      std::string bits = "0000";
      for (int i = 0; i < 4; ++i) {
        if ((s >> i) & 1u) bits[i] = '1';
      }
      out << bits << "," << (((s & 0b11) == 0b11) ? 1 : 0) << "\n";
    }
  }
  const auto out_csv = (dir / "exact.csv").string();
  REQUIRE(run_cli({"exact", "--game", tab.string(), "--kind", "sii", "--order", "2", "--out",
                   out_csv}) == 0);
  const auto m = EstimateMap::read_csv_file(out_csv);
  CHECK(m.at_key(0b0011) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.at_key(0b0101) == doctest::Approx(0.0).epsilon(1e-12));
  fs::remove_all(dir);
}

TEST_CASE("exact rejects an order above the player count") {
  const auto dir = temp_dir("ikit_cli_badorder");
  const auto out_csv = (dir / "x.csv").string();
  CHECK(run_cli({"exact", "--n", "5", "--terms", "10", "--seed", "1", "--kind", "sii", "--order",
                 "6", "--out", out_csv}) != 0);
  fs::remove_all(dir);
}

TEST_CASE("approx at the full budget matches exact, and multi-request runs share one budget") {
  const auto dir = temp_dir("ikit_cli_approx");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "10", "--terms", "50", "--seed", "7", "--out", spec}) == 0);

  const auto exact_csv = (dir / "exact.csv").string();
  REQUIRE(run_cli({"exact", "--game", spec, "--kind", "sii", "--order", "2", "--out",
                   exact_csv}) == 0);

  const auto approx_dir = (dir / "full").string();
  REQUIRE(run_cli({"approx", "--game", spec, "--method", "svarm-iq", "--kind", "sii", "--order",
                   "2", "--budget", "1024", "--seed", "5", "--out", approx_dir}) == 0);
  const auto est = EstimateMap::read_csv_file(
      (fs::path(approx_dir) / "estimate_sii_k2.csv").string());
  const auto gt = EstimateMap::read_csv_file(exact_csv);
  CHECK(testsupport::max_abs_diff(est, gt) < 1e-9);

  // Four maps out of one run.
  const auto multi_dir = (dir / "multi").string();
  REQUIRE(run_cli({"approx", "--game", spec, "--method", "svarm-iq", "--kind", "sii", "--kind",
                   "bii", "--order", "2", "--order", "3", "--budget", "300", "--seed", "5",
                   "--out", multi_dir}) == 0);
  for (const char* name :
       {"estimate_sii_k2.csv", "estimate_sii_k3.csv", "estimate_bii_k2.csv",
        "estimate_bii_k3.csv"}) {
    CHECK(fs::exists(fs::path(multi_dir) / name));
  }
  const auto diag = slurp(fs::path(multi_dir) / "diagnostics.csv");
  CHECK(diag.find("300") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("perm baselines through the cli are deterministic and reject multi-order requests") {
  const auto dir = temp_dir("ikit_cli_perm");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "8", "--terms", "40", "--seed", "2", "--out", spec}) == 0);
  const auto d1 = (dir / "a").string();
  const auto d2 = (dir / "b").string();
  REQUIRE(run_cli({"approx", "--game", spec, "--method", "perm-sii", "--kind", "sii", "--order",
                   "2", "--budget", "200", "--seed", "11", "--out", d1}) == 0);
  REQUIRE(run_cli({"approx", "--game", spec, "--method", "perm-sii", "--kind", "sii", "--order",
                   "2", "--budget", "200", "--seed", "11", "--out", d2}) == 0);
  CHECK(slurp(fs::path(d1) / "estimate_sii_k2.csv") == slurp(fs::path(d2) / "estimate_sii_k2.csv"));

  CHECK(run_cli({"approx", "--game", spec, "--method", "perm-sti", "--kind", "sti", "--order",
                 "2", "--order", "3", "--budget", "200", "--seed", "11", "--out", d1}) != 0);
  CHECK(run_cli({"approx", "--game", spec, "--method", "perm-sti", "--kind", "sii", "--order",
                 "2", "--budget", "200", "--seed", "11", "--out", d1}) != 0);
  fs::remove_all(dir);
}

TEST_CASE("sweep writes records, aggregates and well-formed svg charts") {
  const auto dir = temp_dir("ikit_cli_sweep");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "8", "--terms", "40", "--seed", "4", "--out", spec}) == 0);
  const auto out = (dir / "sweep").string();
  REQUIRE(run_cli({"sweep", "--game", spec, "--method", "svarm-iq", "--method", "perm-sii",
                   "--kind", "sii", "--order", "2", "--budgets", "60,120,180", "--runs", "5",
                   "--seed", "6", "--jobs", "2", "--plot", "--out", out}) == 0);

  const auto records = slurp(fs::path(out) / "records.csv");
  CHECK(records.rfind("method,kind,order,budget,run,seed,mse,prec_at_10,calls,wall_ms\n", 0) == 0);
  // header + 2 methods * 3 budgets * 5 runs rows
  CHECK(std::count(records.begin(), records.end(), '\n') == 1 + 2 * 3 * 5);

  const auto svg = slurp(fs::path(out) / "sweep_sii_k2_mse.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("svarm-iq") != std::string::npos);
  CHECK(svg.find("perm-sii") != std::string::npos);
  CHECK(svg.size() < (1u << 20));
  CHECK(svg.find("href") == std::string::npos);  // self-contained
  CHECK(fs::exists(fs::path(out) / "sweep_sii_k2_prec.svg"));
  fs::remove_all(dir);
}

TEST_CASE("bounds on a constant game are all zero") {
  const auto dir = temp_dir("ikit_cli_bounds");
  const auto tab = dir / "const.tab";
  {
    std::ofstream out(tab);
    out << "n=6\n";
    for (std::uint64_t s = 0; s < 64; ++s) {
      std::string bits = "000000";
      for (int i = 0; i < 6; ++i) {
        if ((s >> i) & 1u) bits[i] = '1';
      }
      out << bits << ",2.5\n";
    }
  }
  const auto out_csv = (dir / "bounds.csv").string();
  REQUIRE(run_cli({"bounds", "--game", tab.string(), "--order", "2", "--budget", "220", "--eps",
                   "0.1,0.05", "--out", out_csv}) == 0);
  std::ifstream in(out_csv);
  std::string line;
  std::getline(in, line);  // header
  CHECK(line.rfind("K,variance_bound", 0) == 0);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(",0,") != std::string::npos);
  }
  CHECK(rows == 15);
  fs::remove_all(dir);
}

TEST_CASE("bounds eps columns are monotone") {
  const auto dir = temp_dir("ikit_cli_bounds_mono");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "6", "--terms", "30", "--seed", "3", "--out", spec}) == 0);
  const auto out_csv = (dir / "bounds.csv").string();
  REQUIRE(run_cli({"bounds", "--game", spec, "--order", "2", "--budget", "220", "--eps",
                   "0.1,0.05,0.02", "--out", out_csv}) == 0);
  std::ifstream in(out_csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    // chebyshev columns at eps 0.1, 0.05, 0.02 sit at indices 2, 5, 8.
    const double c1 = std::stod(cells[2]);
    const double c2 = std::stod(cells[5]);
    const double c3 = std::stod(cells[8]);
    CHECK(c1 <= c2);
    CHECK(c2 <= c3);
  }
  fs::remove_all(dir);
}

TEST_CASE("INTERACTIONKIT_SEED provides the master seed when --seed is absent") {
  const auto dir = temp_dir("ikit_cli_envseed");
  const auto a = (dir / "a.soum").string();
  const auto b = (dir / "b.soum").string();
  const auto c = (dir / "c.soum").string();
  setenv("INTERACTIONKIT_SEED", "31415", 1);
  REQUIRE(run_cli({"soum-gen", "--n", "6", "--terms", "10", "--out", a}) == 0);
  REQUIRE(run_cli({"soum-gen", "--n", "6", "--terms", "10", "--out", b}) == 0);
  CHECK(slurp(a) == slurp(b));
  // An explicit flag wins over the environment.
  REQUIRE(run_cli({"soum-gen", "--n", "6", "--terms", "10", "--seed", "9", "--out", c}) == 0);
  CHECK(slurp(a) != slurp(c));
  unsetenv("INTERACTIONKIT_SEED");
  fs::remove_all(dir);
}

TEST_CASE("bounds with empirical runs reports the variance check per set") {
  const auto dir = temp_dir("ikit_cli_bounds_emp");
  const auto spec = (dir / "g.soum").string();
  REQUIRE(run_cli({"soum-gen", "--n", "6", "--terms", "30", "--seed", "5", "--out", spec}) == 0);
  const auto out_csv = (dir / "bounds.csv").string();
  REQUIRE(run_cli({"bounds", "--game", spec, "--order", "2", "--budget", "220", "--eps", "0.05",
                   "--empirical", "50", "--seed", "2", "--jobs", "2", "--out", out_csv}) == 0);
  std::ifstream in(out_csv);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("empirical_variance") != std::string::npos);
  CHECK(header.find("variance_bound_holds") != std::string::npos);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 15);
  fs::remove_all(dir);
}

TEST_CASE("missing game source or conflicting sources fail with exit code 1") {
  const auto dir = temp_dir("ikit_cli_srcerr");
  const auto out_csv = (dir / "x.csv").string();
  CHECK(run_cli({"exact", "--kind", "sii", "--order", "2", "--out", out_csv}) != 0);
  fs::remove_all(dir);
}
