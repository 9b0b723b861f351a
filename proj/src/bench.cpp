#include "ckc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ckc/errors.hpp"

namespace ckc {

bool BenchReport::clean() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.problems.empty(); });
}

int worker_count() {
  if (const char* env = std::getenv("COLORFUL_KCENTER_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void compare(BenchRow& row, const std::optional<Rational>& oracle) {
  row.oracle_radius = oracle;
  if (!oracle) return;
  if (row.solver_radius < *oracle) row.problems.emplace_back("solver radius below the optimum");
  if (sgn(*oracle) > 0) {
    row.ratio = row.solver_radius / *oracle;
    if (*row.ratio > 4) row.problems.emplace_back("ratio above 4");
  } else if (sgn(row.solver_radius) == 0) {
    row.ratio = Rational(1);
  } else {
    row.problems.emplace_back("optimum is 0 but the solver radius is not");
  }
}

std::optional<Rational> oracle_or_skip(auto&& run) {
  try {
    return run();
  } catch (const EnumerationCapExceeded&) {
    return std::nullopt;
  }
}

BenchRow run_one(const BenchConfig& config, std::uint64_t seed) {
  RandomSpec spec = config.spec;
  spec.seed = seed;
  BenchRow row;
  row.id = "seed-" + std::to_string(seed);
  row.n = spec.n;
  row.k = spec.k;
  row.gamma = spec.gamma;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.fair) {
      const FairInstance finst = gen_random_fair(spec);
      auto sol = solve_fair(finst);
      if (!sol) {
        row.problems.emplace_back("solver reported infeasible");
        return row;
      }
      row.solver_radius = sol->distribution.radius;
      for (const auto& rec : sol->trace) {
        row.cuts += static_cast<long>(rec.cuts.size());
        row.lp_solves += rec.lp_solves;
      }
      for (auto& p : distribution_violations(finst, sol->distribution)) row.problems.push_back(p);
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      compare(row, oracle_or_skip([&]() -> std::optional<Rational> {
        auto opt = brute_force_fair(finst, config.cap);
        CKC_ENSURE(opt.has_value(), "oracle found no feasible radius");
        return opt->radius;
      }));
    } else {
      const Instance inst = gen_random_instance(spec);
      auto sol = solve_colorful(inst);
      if (!sol) {
        row.problems.emplace_back("solver reported infeasible");
        return row;
      }
      row.solver_radius = sol->solution.radius;
      for (const auto& rec : sol->trace.records) {
        row.cuts += static_cast<long>(rec.cuts.size());
        row.lp_solves += rec.lp_solves;
      }
      if (!check_feasible(inst, sol->solution.centers, sol->solution.radius).feasible) {
        row.problems.emplace_back("solution infeasible at its radius");
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      compare(row, oracle_or_skip([&]() -> std::optional<Rational> {
        auto opt = brute_force_colorful(inst, config.cap);
        CKC_ENSURE(opt.has_value(), "oracle found no feasible radius");
        return opt->radius;
      }));
    }
  } catch (const std::exception& e) {
    row.problems.push_back(e.what());
  }
  return row;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  report.rows.resize(config.seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.seeds.size(); i = next++) {
      report.rows[i] = run_one(config, config.seeds[i]);
    }
  };
  const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(config.seeds.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

std::string format_report(const BenchReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "instance" << std::setw(4) << "n" << std::setw(4) << "k"
      << std::setw(4) << "g" << std::setw(10) << "oracle" << std::setw(10) << "solver"
      << std::setw(8) << "ratio" << std::setw(6) << "cuts" << std::setw(6) << "lps"
      << "ms\n";
  for (const auto& r : report.rows) {
    out << std::setw(12) << r.id << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(4)
        << r.gamma << std::setw(10) << (r.oracle_radius ? to_string(*r.oracle_radius) : "n/a")
        << std::setw(10) << to_string(r.solver_radius) << std::setw(8)
        << (r.ratio ? to_string(*r.ratio) : "n/a") << std::setw(6) << r.cuts << std::setw(6)
        << r.lp_solves << std::fixed << std::setprecision(1) << r.wall_ms << '\n';
    for (const auto& p : r.problems) out << "  ! " << p << '\n';
  }
  out << (report.clean() ? "all rows within bound\n" : "VIOLATIONS FOUND\n");
  return out.str();
}

Json report_json(const BenchReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"id", r.id},
                    {"n", r.n},
                    {"k", r.k},
                    {"gamma", r.gamma},
                    {"oracle_radius", r.oracle_radius ? to_string(*r.oracle_radius) : "n/a"},
                    {"solver_radius", to_string(r.solver_radius)},
                    {"ratio", r.ratio ? to_string(*r.ratio) : "n/a"},
                    {"cuts", r.cuts},
                    {"lp_solves", r.lp_solves},
                    {"wall_ms", r.wall_ms},
                    {"problems", r.problems}});
  }
  return {{"rows", std::move(rows)}, {"clean", report.clean()}};
}

}  // namespace ckc
