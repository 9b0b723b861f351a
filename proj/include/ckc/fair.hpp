#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ckc/colorful.hpp"
#include "ckc/instance.hpp"

namespace ckc {

/// A point (alpha, mu) of the dual distribution LP, normalized so that
/// sum_u p(u) alpha(u) - mu = 1.
struct DualPoint {
  std::vector<Rational> alpha;  // >= 0, one per point
  Rational mu;
};

/// 1 / (product of the denominators of every alpha entry and of mu). Any sum
/// v of alpha entries satisfies v > mu exactly when v >= mu + eps.
Rational epsilon_gap(const DualPoint& dp);

/// A distribution over center sets: support entries with positive
/// probabilities summing to one.
struct Distribution {
  std::vector<std::pair<std::vector<int>, Rational>> support;
  Rational radius;
};

/// Cut y(B(S, r)) <= bound emitted while separating (alpha, mu). It must hold
/// for every radius-r solution C with alpha(B(C, r)) >= threshold.
struct FairCut {
  Rational radius;
  std::vector<int> S;
  int bound = 0;
  std::vector<Rational> alpha;
  Rational threshold;
};

struct Separation {
  // A set C, feasible at radius 4r, with alpha(B(C, 4r)) >= mu + eps. Empty
  // when no radius-r solution covers more than mu of alpha.
  std::optional<std::vector<int>> violating;
  bool rounded_at_2r = false;
  std::vector<FairCut> cuts;
  long lp_solves = 0;
  long dp_calls = 0;
  long sparse_rounds = 0;
  // LP Farkas multipliers when the emptiness came from an infeasible LP.
  std::vector<Rational> farkas;
};

/// Cutting-plane separation over P plus the row alpha x >= mu + eps at radius r.
Separation separate_or_certify(const FairInstance& finst, const Rational& r, const DualPoint& dp);

/// Either a distribution over H meeting every p(u) at radius r4, or a vertex
/// (alpha, mu) whose constraints alpha(B(C, r4)) <= mu hold for all C in H.
/// Every set of H must be feasible at r4.
std::variant<Distribution, DualPoint> solve_restricted(const FairInstance& finst,
                                                       const Rational& r4,
                                                       std::span<const std::vector<int>> H);

/// Primal distribution LP over an explicit family at radius r: a basic
/// distribution, or nullopt when none covers p.
std::optional<Distribution> solve_family_lp(const FairInstance& finst, const Rational& r,
                                            std::span<const std::vector<int>> family);

struct FairRadiusRecord {
  Rational radius;
  bool feasible = false;
  bool enumerated = false;
  long pricing_rounds = 0;
  long columns = 0;
  long lp_solves = 0;
  long dp_calls = 0;
  long sparse_rounds = 0;
  std::vector<FairCut> cuts;
};

struct FairOptions {
  bool enumerate_when_gamma_ge_k = true;
  std::uint64_t enumeration_cap = 10'000'000;
};

struct FairSolution {
  Distribution distribution;  // radius = smallest radius the distribution is valid at
  Rational probe_radius;
  std::vector<FairRadiusRecord> trace;
};

/// Column generation at a single radius: a distribution valid at 4r, or
/// nullopt once some dual point proves no radius-r distribution exists.
std::optional<Distribution> solve_fair_fixed_radius(const FairInstance& finst, const Rational& r,
                                                    FairRadiusRecord& record);

std::optional<FairSolution> solve_fair(const FairInstance& finst, const FairOptions& options = {});

/// Problems with `dist` as a solution at its stated radius, empty when valid:
/// probabilities, support feasibility and per-point coverage, all exact.
std::vector<std::string> distribution_violations(const FairInstance& finst,
                                                 const Distribution& dist);

/// Smallest candidate radius at which `dist` is valid, if any.
std::optional<Rational> min_valid_radius(const FairInstance& finst, const Distribution& dist);

/// Picks support entry i with probability exactly lambda_i.
const std::vector<int>& sample(const Distribution& dist, std::uint64_t seed);

}  // namespace ckc
