#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ckc/instance.hpp"
#include "ckc/lp.hpp"
#include "ckc/partition.hpp"

namespace ckc {

/// The inequality y(B(S, r)) <= bound, valid for every integral point of
/// the relaxation at the radius it was generated for.
struct Cut {
  std::vector<int> S;  // ascending, pairwise more than 4r apart
  int bound = 0;
};

/// Extra covering row sum_u alpha(u) x(u) >= rhs.
struct AlphaRow {
  std::span<const Rational> alpha;
  Rational rhs;
};

/// The natural LP relaxation at radius r, over variables (x_0..x_{n-1},
/// y_0..y_{n-1}) in [0,1]:
///   row 0            sum_v y(v) <= k
///   rows 1..n        sum_{v in B(u,r)} y(v) - x(u) >= 0
///   next gamma rows  sum_{u in X_l} x(u) >= m_l
///   optional row     sum_u alpha(u) x(u) >= rhs
///   then one row per cut.
/// The objective maximizes sum_u x(u).
lp::LinearProgram build_relaxation(const Instance& inst, const Rational& r,
                                   std::span<const Cut> cuts,
                                   const AlphaRow* alpha_row = nullptr);

/// Splits an LP solution of build_relaxation into (x, y).
FractionalPoint split_point(const Instance& inst, std::span<const Rational> solution);

enum class RadiusOutcome {
  kRounded4r,            // sparse rounding below the y-mass threshold
  kRounded2r,            // few-outside DP
  kInfeasibleCertified,  // no radius-r solution exists
  kEnumerated,           // exhaustive search (gamma >= k)
};

const char* outcome_name(RadiusOutcome outcome);

struct RadiusRecord {
  Rational radius;
  RadiusOutcome outcome = RadiusOutcome::kInfeasibleCertified;
  std::vector<Cut> cuts;
  long lp_solves = 0;
  long dp_calls = 0;
  // Sparse roundings performed under the threshold (0 or 1 per radius).
  long sparse_rounds = 0;
  std::optional<std::vector<int>> centers;  // set on success
};

struct SolveTrace {
  std::vector<RadiusRecord> records;
};

struct ColorfulOptions {
  bool linear_scan = false;
  bool enumerate_when_gamma_ge_k = true;
  std::uint64_t enumeration_cap = 10'000'000;
  // Observes every partition computed in the round-or-cut loop.
  std::function<void(const Rational& r, const FractionalPoint&, const GoodPartition&)> on_partition;
};

struct FixedRadiusResult {
  std::optional<std::vector<int>> centers;  // feasible at 4r (or 2r)
  RadiusRecord record;
  // Set when infeasibility was proven by the LP: Farkas multipliers for
  // build_relaxation(inst, r, record.cuts). Empty when the few-outside search
  // was exhaustive instead.
  std::vector<Rational> farkas;
};

/// One round-or-cut run at radius r: returns centers feasible at radius 4r,
/// or certifies that no radius-r solution exists.
FixedRadiusResult solve_fixed_radius(const Instance& inst, const Rational& r,
                                     const ColorfulOptions& options = {});

struct ColorfulSolution {
  CenterSet solution;     // radius = smallest radius at which the centers are feasible
  Rational probe_radius;  // radius r of the successful round-or-cut run
  SolveTrace trace;
};

/// Smallest-radius search over the candidate radii. nullopt when the instance
/// has no feasible radius at all.
std::optional<ColorfulSolution> solve_colorful(const Instance& inst,
                                               const ColorfulOptions& options = {});

/// Opens every positive cluster of the cluster-selection LP at the first LP
/// point, with no threshold test: at most k + gamma - 1 centers at radius 4r.
/// nullopt when the relaxation is empty.
std::optional<CenterSet> pseudo_approx_baseline(const Instance& inst, const Rational& r);

}  // namespace ckc
