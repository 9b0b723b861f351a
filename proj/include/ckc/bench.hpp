#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckc/generators.hpp"
#include "ckc/io.hpp"

namespace ckc {

struct BenchRow {
  std::string id;
  int n = 0;
  int k = 0;
  int gamma = 0;
  std::optional<Rational> oracle_radius;  // empty beyond the enumeration cap
  Rational solver_radius;
  std::optional<Rational> ratio;          // solver / oracle; 1 when both are 0
  long cuts = 0;
  long lp_solves = 0;
  double wall_ms = 0;
  std::vector<std::string> problems;      // soundness or bound violations
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool clean() const;
};

struct BenchConfig {
  std::vector<std::uint64_t> seeds;
  RandomSpec spec;  // seed is overwritten per row
  bool fair = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  int threads = 1;
};

/// Worker count from COLORFUL_KCENTER_THREADS, else the hardware concurrency.
int worker_count();

/// Runs every seed (concurrently, rows kept in seed order).
BenchReport run_bench(const BenchConfig& config);

std::string format_report(const BenchReport& report);
Json report_json(const BenchReport& report);

}  // namespace ckc
