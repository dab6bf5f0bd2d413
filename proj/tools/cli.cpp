#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "interactionkit/bounds.hpp"
#include "interactionkit/detail/text.hpp"
#include "interactionkit/exact_cii.hpp"
#include "interactionkit/metrics.hpp"
#include "interactionkit/parallel_for.hpp"
#include "interactionkit/permutation_baselines.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/soum_game.hpp"
#include "interactionkit/svarm_iq.hpp"
#include "interactionkit/svg_chart.hpp"
#include "interactionkit/sweep.hpp"
#include "interactionkit/tabular_game.hpp"

namespace interactionkit::cli {

namespace {

namespace fs = std::filesystem;

/// Shared game-source flags: exactly one of --game or --n/--terms.
struct GameSource {
  std::string path;
  std::string format = "auto";  // auto|soum|tabular
  int n = 0;
  int terms = -1;
  std::uint64_t game_seed = 0;
  bool game_seed_set = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--game", path, "Game file (.soum spec or tabular table)");
    cmd->add_option("--game-format", format, "Game file format: auto, soum or tabular")
        ->check(CLI::IsMember({"auto", "soum", "tabular"}));
    cmd->add_option("--n", n, "Player count for an inline-generated SOUM game");
    cmd->add_option("--terms", terms, "Term count for an inline-generated SOUM game");
    auto* gs = cmd->add_option("--game-seed", game_seed,
                               "Seed for the inline-generated game (defaults to --seed)");
    gs->each([this](const std::string&) { game_seed_set = true; });
  }

  std::unique_ptr<Game> load(std::uint64_t fallback_seed) const {
    const bool from_file = !path.empty();
    const bool generated = terms >= 0 || (!from_file && n > 0);
    if (from_file == generated) {
      throw std::invalid_argument(
          "exactly one game source required: --game FILE or --n/--terms");
    }
    if (from_file) {
      std::string fmt = format;
      if (fmt == "auto") {
        const auto ext = fs::path(path).extension().string();
        if (ext == ".soum") {
          fmt = "soum";
        } else if (ext == ".tab" || ext == ".tabular" || ext == ".csv" || ext == ".txt") {
          fmt = "tabular";
        } else {
          throw std::invalid_argument("cannot infer game format from '" + ext +
                                      "'; pass --game-format");
        }
      }
      if (fmt == "soum") return std::make_unique<SoumGame>(SoumGame::read_file(path));
      return std::make_unique<TabularGame>(TabularGame::load(path));
    }
    if (n <= 0 || terms < 0) {
      throw std::invalid_argument("inline generation needs both --n and --terms");
    }
    const std::uint64_t seed = game_seed_set ? game_seed : fallback_seed;
    return std::make_unique<SoumGame>(SoumGame::generate(n, terms, seed));
  }
};

std::uint64_t seed_or_env(CLI::Option* seed_opt, std::uint64_t seed_value) {
  if (seed_opt->count() > 0) return seed_value;
  if (const char* env = std::getenv("INTERACTIONKIT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return seed_value;
}

std::vector<IndexKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<IndexKind> kinds;
  for (const auto& s : names) kinds.push_back(index_kind_from_string(s));
  return kinds;
}

void ensure_dir(const std::string& out) {
  fs::create_directories(out);
  if (!fs::is_directory(out)) throw std::runtime_error("cannot create output directory: " + out);
}

std::string estimate_file_name(IndexKind kind, int order) {
  return std::string("estimate_") + to_string(kind) + "_k" + std::to_string(order) + ".csv";
}

// ---------------------------------------------------------------- soum-gen

void setup_soum_gen(CLI::App& app) {
  auto* cmd = app.add_subcommand("soum-gen", "Generate a random sum-of-unanimity game file");
  auto n = std::make_shared<int>(0);
  auto terms = std::make_shared<int>(50);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--n", *n, "Player count (1..32)")->required();
  cmd->add_option("--terms", *terms, "Number of unanimity terms")->required();
  auto* seed_opt = cmd->add_option("--seed", *seed, "Generator seed");
  cmd->add_option("--out", *out, "Output file")->required();
  cmd->callback([=] {
    const auto game = SoumGame::generate(*n, *terms, seed_or_env(seed_opt, *seed));
    game.write_file(*out);
    std::cout << "wrote " << *out << " (n=" << *n << ", terms=" << *terms << ")\n";
  });
}

// ------------------------------------------------------------------- exact

void setup_exact(CLI::App& app) {
  auto* cmd = app.add_subcommand("exact", "Compute exact index scores");
  auto source = std::make_shared<GameSource>();
  source->attach(cmd);
  auto kind_name = std::make_shared<std::string>("sii");
  auto order = std::make_shared<int>(2);
  auto oracle = std::make_shared<std::string>("auto");
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--kind", *kind_name, "Index kind: sii, sti, fsi, bii, sv")
      ->check(CLI::IsMember({"sii", "sti", "fsi", "bii", "sv"}));
  cmd->add_option("--order", *order, "Interaction order k");
  cmd->add_option("--oracle", *oracle,
                  "Ground-truth oracle: auto, brute (2^n enumeration) or closed (SOUM only)")
      ->check(CLI::IsMember({"auto", "brute", "closed"}));
  auto* seed_opt = cmd->add_option("--seed", *seed, "Seed for inline game generation");
  cmd->add_option("--out", *out, "Output estimate CSV")->required();
  cmd->callback([=] {
    const auto game = source->load(seed_or_env(seed_opt, *seed));
    const IndexKind kind = index_kind_from_string(*kind_name);
    const auto* soum = dynamic_cast<const SoumGame*>(game.get());
    std::string which = *oracle;
    if (which == "auto") which = soum ? "closed" : "brute";
    if (which == "closed" && !soum) {
      throw std::invalid_argument("the closed-form oracle needs a SOUM game");
    }
    EstimateMap map = which == "closed" ? soum_exact_cii(*soum, kind, *order)
                                        : exact_cii(*game, kind, *order);
    map.write_csv_file(*out);
    const std::uint64_t evals = which == "closed" ? 0 : (std::uint64_t{1} << game->players());
    std::cout << "wrote " << *out << " oracle=" << which << " evaluations=" << evals << "\n";
  });
}

// ------------------------------------------------------------------ approx

void setup_approx(CLI::App& app) {
  auto* cmd = app.add_subcommand("approx", "Approximate index scores at a fixed budget");
  auto source = std::make_shared<GameSource>();
  source->attach(cmd);
  auto method_name = std::make_shared<std::string>("svarm-iq");
  auto kind_names = std::make_shared<std::vector<std::string>>();
  auto orders = std::make_shared<std::vector<int>>();
  auto budget = std::make_shared<std::uint64_t>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto warmup = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--method", *method_name, "svarm-iq, perm-sii or perm-sti")
      ->check(CLI::IsMember({"svarm-iq", "perm-sii", "perm-sti"}));
  cmd->add_option("--kind", *kind_names, "Index kind(s); repeatable for svarm-iq")
      ->check(CLI::IsMember({"sii", "sti", "fsi", "bii", "sv"}));
  cmd->add_option("--order", *orders, "Interaction order(s); repeatable for svarm-iq");
  cmd->add_option("--budget", *budget, "Evaluation budget")->required();
  auto* seed_opt = cmd->add_option("--seed", *seed, "Run seed");
  cmd->add_flag("--warmup", *warmup, "Seed every implicit stratum before sampling (svarm-iq)");
  cmd->add_option("--out", *out, "Output directory")->required();
  cmd->callback([=] {
    const std::uint64_t master = seed_or_env(seed_opt, *seed);
    const auto game = source->load(master);
    ensure_dir(*out);
    if (kind_names->empty()) kind_names->push_back("sii");
    if (orders->empty()) orders->push_back(2);
    const Method method = method_from_string(*method_name);

    if (method == Method::svarm_iq) {
      EstimatorConfig cfg;
      cfg.kinds = parse_kinds(*kind_names);
      cfg.orders = *orders;
      cfg.warmup = *warmup;
      cfg.seed = master;
      BudgetedOracle oracle(*game, *budget);
      const auto res = run_svarm_iq(oracle, cfg);
      for (const auto& map : res.maps) {
        map.write_csv_file((fs::path(*out) / estimate_file_name(map.kind(), map.order())).string());
      }
      std::ofstream diag(fs::path(*out) / "diagnostics.csv");
      diag << res.diagnostics.csv_header() << "\n" << res.diagnostics.csv_row() << "\n";
      std::cout << "wrote " << res.maps.size() << " estimate map(s), calls="
                << oracle.calls_used() << "\n";
      return;
    }

    if (orders->size() != 1 || kind_names->size() > 1) {
      throw std::invalid_argument(
          "permutation baselines estimate a single kind at a single order; "
          "lower orders of the Shapley-Taylor index have no sampled form here");
    }
    const int order = orders->front();
    const IndexKind kind = index_kind_from_string(kind_names->front());
    if (!method_supports(method, kind)) {
      throw std::invalid_argument(std::string(to_string(method)) + " cannot estimate " +
                                  to_string(kind));
    }
    BudgetedOracle oracle(*game, *budget);
    PermutationDiagnostics diag;
    const EstimateMap map = method == Method::perm_sii
                                ? permutation_sii(oracle, order, master, &diag)
                                : permutation_sti(oracle, order, master, &diag);
    map.write_csv_file((fs::path(*out) / estimate_file_name(kind, order)).string());
    std::ofstream d(fs::path(*out) / "diagnostics.csv");
    d << "calls,permutations,windows,never_updated_sets,seed\n"
      << diag.calls << "," << diag.permutations << "," << diag.windows << ","
      << diag.never_updated_sets << "," << master << "\n";
    std::cout << "wrote 1 estimate map, calls=" << oracle.calls_used() << "\n";
  });
}

// ------------------------------------------------------------------- sweep

void setup_sweep(CLI::App& app) {
  auto* cmd = app.add_subcommand("sweep", "Budget sweep with per-run and aggregate metrics");
  auto source = std::make_shared<GameSource>();
  source->attach(cmd);
  auto method_names = std::make_shared<std::vector<std::string>>();
  auto kind_names = std::make_shared<std::vector<std::string>>();
  auto orders = std::make_shared<std::vector<int>>();
  auto budgets = std::make_shared<std::vector<std::uint64_t>>();
  auto runs = std::make_shared<int>(10);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto warmup = std::make_shared<bool>(false);
  auto jobs = std::make_shared<int>(1);
  auto plot = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--method", *method_names, "Estimators to compare; repeatable")
      ->check(CLI::IsMember({"svarm-iq", "perm-sii", "perm-sti"}))
      ->required();
  cmd->add_option("--kind", *kind_names, "Index kind(s)")
      ->check(CLI::IsMember({"sii", "sti", "fsi", "bii", "sv"}));
  cmd->add_option("--order", *orders, "Interaction order(s)");
  cmd->add_option("--budgets", *budgets, "Budget grid")->required()->delimiter(',');
  cmd->add_option("--budget", *budgets, "Extra budget grid points; repeatable");
  cmd->add_option("--runs", *runs, "Independent runs per method and budget");
  auto* seed_opt = cmd->add_option("--seed", *seed, "Master seed");
  cmd->add_flag("--warmup", *warmup, "Warm-up inside svarm-iq runs");
  cmd->add_option("--jobs", *jobs, "Worker threads (0 = all cores)");
  cmd->add_flag("--plot", *plot, "Emit one SVG chart per kind and order");
  cmd->add_option("--out", *out, "Output directory")->required();
  cmd->callback([=] {
    const std::uint64_t master = seed_or_env(seed_opt, *seed);
    const auto game = source->load(master);
    ensure_dir(*out);
    if (kind_names->empty()) kind_names->push_back("sii");
    if (orders->empty()) orders->push_back(2);

    SweepConfig cfg;
    for (const auto& m : *method_names) cfg.methods.push_back(method_from_string(m));
    cfg.kinds = parse_kinds(*kind_names);
    cfg.orders = *orders;
    cfg.budgets = *budgets;
    std::sort(cfg.budgets.begin(), cfg.budgets.end());
    cfg.budgets.erase(std::unique(cfg.budgets.begin(), cfg.budgets.end()), cfg.budgets.end());
    cfg.runs = *runs;
    cfg.master_seed = master;
    cfg.warmup = *warmup;
    cfg.jobs = *jobs;

    const auto res = run_sweep(*game, cfg);
    for (const auto& note : res.skipped) std::cerr << "note: " << note << "\n";

    {
      std::ofstream rec(fs::path(*out) / "records.csv");
      write_records_csv(rec, res.records);
      std::ofstream agg(fs::path(*out) / "aggregate.csv");
      write_aggregates_csv(agg, res.aggregates);
    }

    if (*plot) {
      for (IndexKind kind : cfg.kinds) {
        for (int order : cfg.orders) {
          if (kind == IndexKind::sv && order != 1) continue;
          ChartSpec mse_spec, prec_spec;
          mse_spec.title = std::string("mean MSE, ") + to_string(kind) + " order " +
                           std::to_string(order);
          mse_spec.x_label = "budget";
          mse_spec.y_label = "MSE (mean +- SE)";
          mse_spec.log_y = true;
          prec_spec.title = std::string("mean Prec@10, ") + to_string(kind) + " order " +
                            std::to_string(order);
          prec_spec.x_label = "budget";
          prec_spec.y_label = "Prec@10 (mean +- SE)";
          prec_spec.log_y = false;
          for (Method m : cfg.methods) {
            ChartSeries mse_series, prec_series;
            mse_series.label = to_string(m);
            prec_series.label = to_string(m);
            for (const auto& a : res.aggregates) {
              if (a.method == m && a.kind == kind && a.order == order) {
                mse_series.x.push_back(static_cast<double>(a.budget));
                mse_series.y.push_back(a.mse_mean);
                mse_series.y_err.push_back(a.mse_se);
                prec_series.x.push_back(static_cast<double>(a.budget));
                prec_series.y.push_back(a.prec_mean);
                prec_series.y_err.push_back(a.prec_se);
              }
            }
            if (!mse_series.x.empty()) {
              mse_spec.series.push_back(mse_series);
              prec_spec.series.push_back(prec_series);
            }
          }
          if (mse_spec.series.empty()) continue;
          const std::string stem =
              std::string("sweep_") + to_string(kind) + "_k" + std::to_string(order);
          write_chart_svg((fs::path(*out) / (stem + "_mse.svg")).string(), mse_spec);
          write_chart_svg((fs::path(*out) / (stem + "_prec.svg")).string(), prec_spec);
        }
      }
    }
    std::cout << "wrote " << res.records.size() << " records to " << *out << "\n";
  });
}

// ------------------------------------------------------------------ bounds

void setup_bounds(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "bounds", "Per-set variance and tail bounds, optionally checked against empirical runs");
  auto source = std::make_shared<GameSource>();
  source->attach(cmd);
  auto kind_name = std::make_shared<std::string>("sii");
  auto order = std::make_shared<int>(2);
  auto budget = std::make_shared<std::uint64_t>(0);
  auto eps_list = std::make_shared<std::vector<double>>();
  auto empirical = std::make_shared<int>(0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto jobs = std::make_shared<int>(1);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--kind", *kind_name, "Index kind")
      ->check(CLI::IsMember({"sii", "sti", "fsi", "bii"}));
  cmd->add_option("--order", *order, "Interaction order k >= 2");
  cmd->add_option("--budget", *budget, "Evaluation budget the bounds refer to")->required();
  cmd->add_option("--eps", *eps_list, "Error thresholds for the tail bounds")->delimiter(',');
  cmd->add_option("--empirical", *empirical,
                  "Also measure empirical variance/exceedance over this many runs");
  auto* seed_opt = cmd->add_option("--seed", *seed, "Master seed for empirical runs");
  cmd->add_option("--jobs", *jobs, "Worker threads for empirical runs");
  cmd->add_option("--out", *out, "Output CSV")->required();
  cmd->callback([=] {
    const std::uint64_t master = seed_or_env(seed_opt, *seed);
    const auto game = source->load(master);
    const int n = game->players();
    if (n > 16) throw std::invalid_argument("bounds need full strata enumeration; n <= 16");
    if (eps_list->empty()) *eps_list = {0.02, 0.05, 0.1};
    const IndexKind kind = index_kind_from_string(*kind_name);
    const WeightProfile weights(kind, n, *order);

    // The bound formulas assume warm-up; build the matching plan and stats.
    StrataTable scratch(n, *order);
    BudgetedOracle plan_oracle(*game, *budget);
    const SizeDistribution P =
        *order == 2 ? size_distribution_pairs(n) : size_distribution_uniform(n);
    const BorderPlan plan = compute_borders(plan_oracle, P, {&scratch}, true);
    const std::uint64_t warmup_cost = implicit_strata_count(n, *order, plan.s_exp);
    const std::uint64_t b_tilde = leftover_budget(*budget, plan, warmup_cost);
    const double gamma = gamma_factor(n, *order);
    const StrataStats stats = strata_statistics(*game, *order, plan);

    // Empirical spread of the estimates over repeated seeded runs.
    EstimateMap gt(n, *order, kind);
    std::vector<std::vector<double>> per_run;
    if (*empirical > 0) {
      const auto* soum = dynamic_cast<const SoumGame*>(game.get());
      gt = soum ? soum_exact_cii(*soum, kind, *order) : exact_cii(*game, kind, *order);
      per_run.assign(static_cast<std::size_t>(*empirical), {});
      parallel_for(static_cast<std::size_t>(*empirical), *jobs, [&](std::size_t run) {
        EstimatorConfig cfg;
        cfg.orders = {*order};
        cfg.kinds = {kind};
        cfg.warmup = true;
        cfg.seed = run_seed(master, run);
        const auto res = run_svarm_iq(*game, *budget, cfg);
        per_run[run] = res.maps.front().scores();
      });
    }

    std::ofstream csv(*out);
    if (!csv) throw std::runtime_error("cannot write bounds CSV: " + *out);
    csv << "K,variance_bound";
    for (double e : *eps_list) csv << ",chebyshev_eps_" << e << ",hoeffding_eps_" << e
                                   << ",hoeffding_clipped_eps_" << e;
    if (*empirical > 0) {
      csv << ",empirical_variance,variance_bound_holds";
      for (double e : *eps_list) csv << ",empirical_exceed_eps_" << e;
    }
    csv << "\n";

    EstimateMap layout(n, *order, kind);
    for (std::size_t r = 0; r < layout.size(); ++r) {
      const std::uint64_t kbits = layout.key(r);
      const double vb = variance_bound(stats, weights, b_tilde, gamma, kbits);
      csv << bits_to_string(kbits, n) << "," << detail::format_double(vb);
      for (double e : *eps_list) {
        const double cheb = chebyshev_bound(stats, weights, b_tilde, gamma, kbits, e);
        const auto hoeff = hoeffding_bound(stats, weights, plan, b_tilde, gamma, kbits, e);
        csv << "," << detail::format_double(cheb) << "," << detail::format_double(hoeff.raw)
            << "," << (hoeff.clipped ? 1 : 0);
      }
      if (*empirical > 0) {
        double mean = 0.0;
        for (const auto& run : per_run) mean += run[r];
        mean /= static_cast<double>(per_run.size());
        double var = 0.0;
        for (const auto& run : per_run) var += (run[r] - mean) * (run[r] - mean);
        var /= static_cast<double>(per_run.size());
        csv << "," << detail::format_double(var) << "," << (var <= vb ? 1 : 0);
        for (double e : *eps_list) {
          std::size_t exceed = 0;
          for (const auto& run : per_run) {
            if (std::abs(run[r] - gt[r]) >= e) ++exceed;
          }
          csv << ","
              << detail::format_double(static_cast<double>(exceed) /
                                       static_cast<double>(per_run.size()));
        }
      }
      csv << "\n";
    }
    std::cout << "wrote " << *out << " (b_tilde=" << b_tilde << ", s_exp=" << plan.s_exp << ")\n";
  });
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"interactionkit: interaction-index computation and approximation for "
               "cooperative games"};
  app.require_subcommand(1);
  setup_soum_gen(app);
  setup_exact(app);
  setup_approx(app);
  setup_sweep(app);
  setup_bounds(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace interactionkit::cli
