#include "ckc/fair.hpp"

#include <algorithm>
#include <random>

#include "ckc/combinatorics.hpp"
#include "ckc/dp.hpp"
#include "ckc/errors.hpp"
#include "ckc/sparse_round.hpp"

namespace ckc {

Rational epsilon_gap(const DualPoint& dp) {
  mpz_class prod = dp.mu.get_den();
  for (const auto& a : dp.alpha) prod *= a.get_den();
  return Rational(mpz_class(1), prod);
}

namespace {

Rational alpha_covered(const Instance& inst, std::span<const Rational> alpha,
                       std::span<const int> centers, const Rational& r) {
  const PointMask covered = ball_mask(inst, centers, r);
  Rational sum = 0;
  for (int u = 0; u < inst.size(); ++u) {
    if (covered[u]) sum += alpha[u];
  }
  return sum;
}

}  // namespace

Separation separate_or_certify(const FairInstance& finst, const Rational& r,
                               const DualPoint& dp) {
  const Instance& inst = finst.base();
  const int n = inst.size();
  const int k = inst.k();
  const int gamma = inst.num_colors();
  const int bound = k - gamma;
  CKC_ENSURE(static_cast<int>(dp.alpha.size()) == n, "dual point has the wrong length");
  for (const auto& a : dp.alpha) CKC_ENSURE(sgn(a) >= 0, "dual point has a negative alpha");

  const Rational threshold = dp.mu + epsilon_gap(dp);
  const AlphaRow row{dp.alpha, threshold};
  Separation out;
  std::vector<Cut> cuts;

  for (;;) {
    const lp::LinearProgram prog = build_relaxation(inst, r, cuts, &row);
    lp::Outcome lp_out = lp::solve(prog);
    ++out.lp_solves;
    if (lp_out.status == lp::Status::kInfeasible) {
      CKC_ENSURE(lp::proves_infeasible(prog, lp_out.farkas), "bad Farkas certificate");
      out.farkas = std::move(lp_out.farkas);
      return out;
    }
    CKC_ENSURE(lp_out.status == lp::Status::kOptimal, "relaxation cannot be unbounded");
    CKC_ENSURE(!lp::check_point(prog, lp_out.solution), "LP vertex outside the relaxation");

    const FractionalPoint pt = split_point(inst, lp_out.solution);
    const GoodPartition part = good_partition(inst, r, pt);
    CKC_ENSURE(!verify_partition(inst, r, pt, part), "greedy partition is not good");

    if (y_mass_near_centers(inst, r, pt, part) <= bound) {
      std::vector<std::vector<Rational>> rows;
      std::vector<Rational> b;
      for (const auto& c : inst.colors()) {
        std::vector<Rational> coeff(static_cast<std::size_t>(n));
        for (int u : c.members) coeff[u] = 1;
        rows.push_back(std::move(coeff));
        b.emplace_back(c.demand);
      }
      rows.push_back(dp.alpha);
      b.push_back(sgn(threshold) > 0 ? threshold : Rational(0));
      const CoveringSystem sys = aggregate_system(std::move(rows), std::move(b), part);
      SparseRounding rounding = sparse_round(inst, r, part, sys, k, &pt);
      ++out.sparse_rounds;
      out.violating = std::move(rounding.centers);
    } else {
      const std::vector<int> S = normalized(part.centers);
      const AlphaRequirement need{dp.alpha, threshold};
      FewOutsideResult few = find_few_outside(inst, 2 * r, S, gamma - 1, &need);
      out.dp_calls += few.dp_calls;
      if (few.centers) {
        out.violating = std::move(few.centers);
        out.rounded_at_2r = true;
      } else if (bound < 0) {
        // Every set of at most k centers was among the guesses.
        return out;
      } else {
        for (const auto& cut : cuts) {
          CKC_ENSURE(cut.S != S, "separation generated the same cut twice");
        }
        cuts.push_back({S, bound});
        out.cuts.push_back({r, S, bound, dp.alpha, threshold});
        continue;
      }
    }
    CKC_ENSURE(check_feasible(inst, *out.violating, 4 * r).feasible,
               "separating set is not feasible at 4r");
    CKC_ENSURE(alpha_covered(inst, dp.alpha, *out.violating, 4 * r) >= threshold,
               "separating set does not cover mu + eps of alpha");
    return out;
  }
}

std::optional<Distribution> solve_family_lp(const FairInstance& finst, const Rational& r,
                                            std::span<const std::vector<int>> family) {
  const Instance& inst = finst.base();
  const int n = inst.size();
  const int m = static_cast<int>(family.size());
  if (m == 0) return std::nullopt;
  std::vector<PointMask> covers;
  covers.reserve(family.size());
  for (const auto& C : family) covers.push_back(ball_mask(inst, C, r));

  lp::LinearProgram prog(m, lp::Sense::kMinimize);
  prog.add_constraint(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)),
                      lp::Relation::kEqual, Rational(1));
  for (int u = 0; u < n; ++u) {
    if (sgn(finst.p()[u]) == 0) continue;
    std::vector<Rational> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) row[j] = covers[j][u] ? 1 : 0;
    prog.add_constraint(std::move(row), lp::Relation::kGreaterEqual, finst.p()[u]);
  }
  const lp::Outcome res = lp::solve(prog);
  if (res.status != lp::Status::kOptimal) return std::nullopt;

  Distribution dist;
  dist.radius = r;
  for (int j = 0; j < m; ++j) {
    if (sgn(res.solution[j]) > 0) dist.support.emplace_back(family[j], res.solution[j]);
  }
  CKC_ENSURE(static_cast<int>(dist.support.size()) <= n + 1, "distribution is not basic");
  return dist;
}

std::variant<Distribution, DualPoint> solve_restricted(const FairInstance& finst,
                                                       const Rational& r4,
                                                       std::span<const std::vector<int>> H) {
  const Instance& inst = finst.base();
  const int n = inst.size();
  for (const auto& C : H) {
    CKC_ENSURE(check_feasible(inst, C, r4).feasible, "column is not feasible at r4");
  }
  // Variables alpha_0..alpha_{n-1} >= 0 and mu free; minimize mu.
  lp::LinearProgram prog(n + 1, lp::Sense::kMinimize);
  prog.set_bounds(n, std::nullopt, std::nullopt);
  prog.set_cost(n, 1);
  std::vector<Rational> norm(finst.p().begin(), finst.p().end());
  norm.emplace_back(-1);
  prog.add_constraint(std::move(norm), lp::Relation::kEqual, Rational(1));
  for (const auto& C : H) {
    const PointMask covered = ball_mask(inst, C, r4);
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    for (int u = 0; u < n; ++u) row[u] = covered[u] ? 1 : 0;
    row[n] = -1;
    prog.add_constraint(std::move(row), lp::Relation::kLessEqual, Rational(0));
  }
  lp::Outcome res = lp::solve(prog);
  if (res.status == lp::Status::kOptimal) {
    DualPoint dp;
    dp.alpha.assign(res.solution.begin(), res.solution.begin() + n);
    dp.mu = res.solution[n];
    return dp;
  }
  CKC_ENSURE(res.status == lp::Status::kInfeasible, "restricted dual cannot be unbounded");
  auto dist = solve_family_lp(finst, r4, H);
  CKC_ENSURE(dist.has_value(), "restricted primal infeasible although its dual is empty");
  return std::move(*dist);
}

std::optional<Distribution> solve_fair_fixed_radius(const FairInstance& finst, const Rational& r,
                                                    FairRadiusRecord& record) {
  const Instance& inst = finst.base();
  const Rational r4 = 4 * r;
  record.radius = r;
  std::vector<std::vector<int>> H;
  for (;;) {
    auto step = solve_restricted(finst, r4, H);
    ++record.lp_solves;
    if (auto* dist = std::get_if<Distribution>(&step)) {
      record.feasible = true;
      record.columns = static_cast<long>(H.size());
      return std::move(*dist);
    }
    const DualPoint dp = std::get<DualPoint>(std::move(step));
    ++record.pricing_rounds;
    Separation sep = separate_or_certify(finst, r, dp);
    record.lp_solves += sep.lp_solves;
    record.dp_calls += sep.dp_calls;
    record.sparse_rounds += sep.sparse_rounds;
    for (auto& cut : sep.cuts) record.cuts.push_back(std::move(cut));
    if (!sep.violating) {
      record.columns = static_cast<long>(H.size());
      return std::nullopt;
    }
    CKC_ENSURE(alpha_covered(inst, dp.alpha, *sep.violating, r4) > dp.mu,
               "pricing returned a non-violating column");
    CKC_ENSURE(std::find(H.begin(), H.end(), *sep.violating) == H.end(),
               "pricing returned a column twice");
    H.push_back(std::move(*sep.violating));
  }
}

std::vector<std::string> distribution_violations(const FairInstance& finst,
                                                 const Distribution& dist) {
  const Instance& inst = finst.base();
  std::vector<std::string> problems;
  if (dist.support.empty()) {
    problems.emplace_back("distribution has empty support");
    return problems;
  }
  Rational total = 0;
  std::vector<Rational> coverage(static_cast<std::size_t>(inst.size()));
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    const auto& [centers, prob] = dist.support[i];
    if (sgn(prob) < 0) problems.push_back("support entry " + std::to_string(i) + " has negative probability");
    total += prob;
    bool in_range = true;
    for (int c : centers) in_range = in_range && c >= 0 && c < inst.size();
    if (!in_range) {
      problems.push_back("support entry " + std::to_string(i) + " has a center out of range");
      continue;
    }
    if (!check_feasible(inst, centers, dist.radius).feasible) {
      problems.push_back("support entry " + std::to_string(i) + " is not feasible at radius " +
                         to_string(dist.radius));
    }
    const PointMask covered = ball_mask(inst, centers, dist.radius);
    for (int u = 0; u < inst.size(); ++u) {
      if (covered[u]) coverage[u] += prob;
    }
  }
  if (total != 1) problems.emplace_back("probabilities do not sum to 1");
  for (int u = 0; u < inst.size(); ++u) {
    if (coverage[u] < finst.p()[u]) {
      problems.push_back("point " + std::to_string(u) + " covered with probability " +
                         to_string(coverage[u]) + " below p = " + to_string(finst.p()[u]));
    }
  }
  return problems;
}

std::optional<Rational> min_valid_radius(const FairInstance& finst, const Distribution& dist) {
  Distribution probe = dist;
  for (const auto& r : finst.base().radii()) {
    probe.radius = r;
    if (distribution_violations(finst, probe).empty()) return r;
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<int>> maximal_family(const Instance& inst, const Rational& r) {
  std::vector<std::vector<int>> family;
  const int size = std::min(inst.k(), inst.size());
  for_each_subset(iota_points(inst.size()), size, [&](const std::vector<int>& C) {
    if (check_feasible(inst, C, r).feasible) family.push_back(C);
    return false;
  });
  return family;
}

}  // namespace

std::optional<FairSolution> solve_fair(const FairInstance& finst, const FairOptions& options) {
  const Instance& inst = finst.base();
  const bool enumerate = options.enumerate_when_gamma_ge_k && inst.num_colors() >= inst.k() &&
                         binomial(inst.size(), std::min(inst.k(), inst.size())) <=
                             options.enumeration_cap;
  FairSolution out;
  const auto& radii = inst.radii();
  std::optional<Distribution> best;
  int best_at = -1;

  auto probe = [&](int idx) {
    FairRadiusRecord rec;
    rec.radius = radii[idx];
    std::optional<Distribution> dist;
    if (enumerate) {
      rec.enumerated = true;
      const auto family = maximal_family(inst, radii[idx]);
      rec.columns = static_cast<long>(family.size());
      dist = solve_family_lp(finst, radii[idx], family);
      ++rec.lp_solves;
      rec.feasible = dist.has_value();
    } else {
      dist = solve_fair_fixed_radius(finst, radii[idx], rec);
    }
    out.trace.push_back(std::move(rec));
    if (!dist) return false;
    best = std::move(dist);
    best_at = idx;
    return true;
  };

  const int last = static_cast<int>(radii.size()) - 1;
  if (!probe(last)) return std::nullopt;
  int lo = -1;
  int hi = last;
  std::optional<Distribution> keep = best;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
      keep = best;
    } else {
      lo = mid;
    }
  }
  best_at = hi;
  out.probe_radius = radii[best_at];
  out.distribution = std::move(*keep);
  auto tight = min_valid_radius(finst, out.distribution);
  CKC_ENSURE(tight && *tight <= 4 * out.probe_radius, "distribution radius exceeds 4r");
  out.distribution.radius = *tight;
  return out;
}

namespace {

// Uniform on [0, bound) by rejection over 64-bit words of mt19937_64.
mpz_class uniform_below(const mpz_class& bound, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::vector<std::uint64_t> words((bits + 63) / 64);
  mpz_class value;
  for (;;) {
    for (auto& w : words) w = engine();
    if (bits % 64 != 0) words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    mpz_import(value.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    if (value < bound) return value;
  }
}

}  // namespace

const std::vector<int>& sample(const Distribution& dist, std::uint64_t seed) {
  CKC_ENSURE(!dist.support.empty(), "cannot sample an empty distribution");
  std::vector<Rational> probs;
  probs.reserve(dist.support.size());
  for (const auto& entry : dist.support) probs.push_back(entry.second);
  const mpz_class scale = common_denominator(probs);

  const mpz_class draw = uniform_below(scale, seed);

  mpz_class cumulative = 0;
  for (const auto& [centers, prob] : dist.support) {
    cumulative += prob.get_num() * (scale / prob.get_den());
    if (draw < cumulative) return centers;
  }
  return dist.support.back().first;
}

}  // namespace ckc
