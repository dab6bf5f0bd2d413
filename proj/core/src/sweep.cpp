#include "interactionkit/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "interactionkit/detail/text.hpp"
#include "interactionkit/exact_cii.hpp"
#include "interactionkit/metrics.hpp"
#include "interactionkit/parallel_for.hpp"
#include "interactionkit/permutation_baselines.hpp"
#include "interactionkit/rng.hpp"
#include "interactionkit/soum_game.hpp"
#include "interactionkit/svarm_iq.hpp"

namespace interactionkit {

const char* to_string(Method m) {
  switch (m) {
    case Method::svarm_iq: return "svarm-iq";
    case Method::perm_sii: return "perm-sii";
    case Method::perm_sti: return "perm-sti";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  if (s == "svarm-iq") return Method::svarm_iq;
  if (s == "perm-sii") return Method::perm_sii;
  if (s == "perm-sti") return Method::perm_sti;
  throw std::invalid_argument("unknown method: " + s);
}

bool method_supports(Method m, IndexKind kind) {
  switch (m) {
    case Method::svarm_iq: return true;
    case Method::perm_sii: return kind == IndexKind::sii || kind == IndexKind::sv;
    case Method::perm_sti: return kind == IndexKind::sti;
  }
  return false;
}

namespace {

struct Task {
  Method method;
  std::vector<std::pair<IndexKind, int>> pairs;  // (kind, order) this run serves
};

EstimateMap ground_truth(const Game& game, IndexKind kind, int k) {
  if (const auto* soum = dynamic_cast<const SoumGame*>(&game)) {
    return soum_exact_cii(*soum, kind, k);
  }
  if (game.players() > 16) {
    throw std::invalid_argument(
        "run_sweep: ground truth infeasible, brute force capped at 16 players");
  }
  return exact_cii(game, kind, k);
}

}  // namespace

SweepResult run_sweep(const Game& game, const SweepConfig& config) {
  if (config.methods.empty() || config.kinds.empty() || config.orders.empty() ||
      config.budgets.empty() || config.runs < 1) {
    throw std::invalid_argument("run_sweep: methods, kinds, orders, budgets and runs required");
  }

  SweepResult result;

  // Ground truth once per (kind, order).
  std::map<std::pair<IndexKind, int>, EstimateMap> gt;
  for (IndexKind kind : config.kinds) {
    for (int k : config.orders) {
      if (kind == IndexKind::sv && k != 1) continue;
      gt.emplace(std::make_pair(kind, k), ground_truth(game, kind, k));
    }
  }

  std::vector<Task> tasks;
  for (Method m : config.methods) {
    Task task;
    task.method = m;
    for (IndexKind kind : config.kinds) {
      for (int k : config.orders) {
        if (kind == IndexKind::sv && k != 1) continue;
        if (method_supports(m, kind)) {
          task.pairs.emplace_back(kind, k);
        } else {
          result.skipped.push_back(std::string(to_string(m)) + " cannot estimate " +
                                   to_string(kind) + " (order " + std::to_string(k) + ")");
        }
      }
    }
    if (!task.pairs.empty()) tasks.push_back(task);
  }
  if (tasks.empty()) throw std::invalid_argument("run_sweep: no method supports any requested kind");

  struct Job {
    std::size_t task;
    std::size_t budget_index;
    int run;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  std::uint64_t counter = 0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    for (std::size_t b = 0; b < config.budgets.size(); ++b) {
      for (int r = 0; r < config.runs; ++r) {
        jobs.push_back({t, b, r, run_seed(config.master_seed, counter)});
        ++counter;
      }
    }
  }

  std::vector<std::vector<SweepRecord>> per_job(jobs.size());
  parallel_for(jobs.size(), config.jobs, [&](std::size_t ji) {
    const Job& job = jobs[ji];
    const Task& task = tasks[job.task];
    const std::uint64_t budget = config.budgets[job.budget_index];

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::pair<IndexKind, int>, EstimateMap>> maps;
    std::uint64_t calls = 0;

    if (task.method == Method::svarm_iq) {
      EstimatorConfig ec;
      for (const auto& [kind, k] : task.pairs) {
        ec.kinds.push_back(kind);
        ec.orders.push_back(k);
      }
      // Deduplicate while preserving request order.
      std::sort(ec.kinds.begin(), ec.kinds.end());
      ec.kinds.erase(std::unique(ec.kinds.begin(), ec.kinds.end()), ec.kinds.end());
      std::sort(ec.orders.begin(), ec.orders.end());
      ec.orders.erase(std::unique(ec.orders.begin(), ec.orders.end()), ec.orders.end());
      ec.warmup = config.warmup;
      ec.seed = job.seed;
      BudgetedOracle oracle(game, budget);
      const SvarmIqResult run = run_svarm_iq(oracle, ec);
      calls = oracle.calls_used();
      for (const auto& pair : task.pairs) {
        maps.emplace_back(pair, run.map_for(pair.second, pair.first));
      }
    } else {
      for (const auto& pair : task.pairs) {
        BudgetedOracle oracle(game, budget);
        EstimateMap est = task.method == Method::perm_sii
                              ? permutation_sii(oracle, pair.second, job.seed)
                              : permutation_sti(oracle, pair.second, job.seed);
        calls = oracle.calls_used();
        maps.emplace_back(pair, std::move(est));
      }
    }
    const auto stop = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();

    for (const auto& [pair, est] : maps) {
      const EstimateMap& truth = gt.at(pair);
      SweepRecord rec;
      rec.method = task.method;
      rec.kind = pair.first;
      rec.order = pair.second;
      rec.budget = budget;
      rec.run = job.run;
      rec.seed = job.seed;
      rec.mse_value = mse(est, truth);
      rec.prec_at_10 = prec_at(est, truth, 10);
      rec.calls = calls;
      rec.wall_ms = wall_ms;
      per_job[ji].push_back(rec);
    }
  });

  for (auto& batch : per_job) {
    for (auto& rec : batch) result.records.push_back(rec);
  }

  // Aggregate mean and standard error per (method, kind, order, budget),
  // in record order.
  for (const auto& task : tasks) {
    for (const auto& [kind, k] : task.pairs) {
      for (std::uint64_t budget : config.budgets) {
        std::vector<double> mses, precs;
        for (const auto& rec : result.records) {
          if (rec.method == task.method && rec.kind == kind && rec.order == k &&
              rec.budget == budget) {
            mses.push_back(rec.mse_value);
            precs.push_back(rec.prec_at_10);
          }
        }
        const auto mean_se = [](const std::vector<double>& xs) {
          double mean = 0.0;
          for (double x : xs) mean += x;
          mean /= static_cast<double>(xs.size());
          double var = 0.0;
          for (double x : xs) var += (x - mean) * (x - mean);
          const double se = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) /
                                                std::sqrt(static_cast<double>(xs.size()))
                                          : 0.0;
          return std::make_pair(mean, se);
        };
        const auto [mse_mean, mse_se] = mean_se(mses);
        const auto [prec_mean, prec_se] = mean_se(precs);
        result.aggregates.push_back(
            {task.method, kind, k, budget, mse_mean, mse_se, prec_mean, prec_se});
      }
    }
  }
  return result;
}

void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "method,kind,order,budget,run,seed,mse,prec_at_10,calls,wall_ms\n";
  for (const auto& r : records) {
    out << to_string(r.method) << "," << to_string(r.kind) << "," << r.order << "," << r.budget
        << "," << r.run << "," << r.seed << "," << detail::format_double(r.mse_value) << ","
        << detail::format_double(r.prec_at_10) << "," << r.calls << ","
        << detail::format_double(r.wall_ms) << "\n";
  }
}

void write_aggregates_csv(std::ostream& out, const std::vector<SweepAggregate>& aggregates) {
  out << "method,kind,order,budget,mse_mean,mse_se,prec_mean,prec_se\n";
  for (const auto& a : aggregates) {
    out << to_string(a.method) << "," << to_string(a.kind) << "," << a.order << "," << a.budget
        << "," << detail::format_double(a.mse_mean) << "," << detail::format_double(a.mse_se)
        << "," << detail::format_double(a.prec_mean) << "," << detail::format_double(a.prec_se)
        << "\n";
  }
}

}  // namespace interactionkit
