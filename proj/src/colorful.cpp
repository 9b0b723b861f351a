#include "ckc/colorful.hpp"

#include <algorithm>

#include "ckc/combinatorics.hpp"
#include "ckc/dp.hpp"
#include "ckc/errors.hpp"
#include "ckc/sparse_round.hpp"

namespace ckc {

lp::LinearProgram build_relaxation(const Instance& inst, const Rational& r,
                                   std::span<const Cut> cuts, const AlphaRow* alpha_row) {
  const int n = inst.size();
  const int reach = inst.rank_at_most(r);
  lp::LinearProgram prog(2 * n, lp::Sense::kMaximize);
  for (int j = 0; j < 2 * n; ++j) prog.set_bounds(j, Rational(0), Rational(1));
  for (int u = 0; u < n; ++u) prog.set_cost(u, 1);

  std::vector<Rational> row(static_cast<std::size_t>(2 * n));
  auto reset = [&] { std::fill(row.begin(), row.end(), Rational(0)); };

  for (int v = 0; v < n; ++v) row[n + v] = 1;
  prog.add_constraint(row, lp::Relation::kLessEqual, Rational(inst.k()));

  for (int u = 0; u < n; ++u) {
    reset();
    for (int v = 0; v < n; ++v) {
      if (inst.distance_rank(u, v) <= reach) row[n + v] = 1;
    }
    row[u] = -1;
    prog.add_constraint(row, lp::Relation::kGreaterEqual, Rational(0));
  }
  for (const auto& c : inst.colors()) {
    reset();
    for (int u : c.members) row[u] = 1;
    prog.add_constraint(row, lp::Relation::kGreaterEqual, Rational(c.demand));
  }
  if (alpha_row != nullptr) {
    reset();
    for (int u = 0; u < n; ++u) row[u] = alpha_row->alpha[u];
    prog.add_constraint(row, lp::Relation::kGreaterEqual, alpha_row->rhs);
  }
  for (const auto& cut : cuts) {
    reset();
    const PointMask near = ball_mask_at_rank(inst, cut.S, reach);
    for (int v = 0; v < n; ++v) {
      if (near[v]) row[n + v] = 1;
    }
    prog.add_constraint(row, lp::Relation::kLessEqual, Rational(cut.bound));
  }
  return prog;
}

FractionalPoint split_point(const Instance& inst, std::span<const Rational> solution) {
  const int n = inst.size();
  FractionalPoint pt;
  pt.x.assign(solution.begin(), solution.begin() + n);
  pt.y.assign(solution.begin() + n, solution.begin() + 2 * n);
  return pt;
}

const char* outcome_name(RadiusOutcome outcome) {
  switch (outcome) {
    case RadiusOutcome::kRounded4r:
      return "rounded-4r";
    case RadiusOutcome::kRounded2r:
      return "rounded-2r";
    case RadiusOutcome::kInfeasibleCertified:
      return "infeasible-certified";
    case RadiusOutcome::kEnumerated:
      return "enumerated";
  }
  return "unknown";
}

FixedRadiusResult solve_fixed_radius(const Instance& inst, const Rational& r,
                                     const ColorfulOptions& options) {
  FixedRadiusResult result;
  auto& rec = result.record;
  rec.radius = r;
  const int k = inst.k();
  const int gamma = inst.num_colors();
  const int bound = k - gamma + 1;

  for (;;) {
    const lp::LinearProgram prog = build_relaxation(inst, r, rec.cuts);
    lp::Outcome lp_out = lp::solve(prog);
    ++rec.lp_solves;
    if (lp_out.status == lp::Status::kInfeasible) {
      CKC_ENSURE(lp::proves_infeasible(prog, lp_out.farkas), "bad Farkas certificate");
      rec.outcome = RadiusOutcome::kInfeasibleCertified;
      result.farkas = std::move(lp_out.farkas);
      return result;
    }
    CKC_ENSURE(lp_out.status == lp::Status::kOptimal, "relaxation cannot be unbounded");
    CKC_ENSURE(!lp::check_point(prog, lp_out.solution), "LP vertex outside the relaxation");

    const FractionalPoint pt = split_point(inst, lp_out.solution);
    const GoodPartition part = good_partition(inst, r, pt);
    CKC_ENSURE(!verify_partition(inst, r, pt, part), "greedy partition is not good");
    if (options.on_partition) options.on_partition(r, pt, part);

    if (y_mass_near_centers(inst, r, pt, part) <= bound) {
      const CoveringSystem sys = build_cluster_system(inst, part);
      SparseRounding rounding = sparse_round(inst, r, part, sys, k, &pt);
      CKC_ENSURE(check_feasible(inst, rounding.centers, 4 * r).feasible,
                 "sparse rounding is not feasible at 4r");
      ++rec.sparse_rounds;
      rec.outcome = RadiusOutcome::kRounded4r;
      rec.centers = rounding.centers;
      result.centers = std::move(rounding.centers);
      return result;
    }

    const std::vector<int> S = normalized(part.centers);
    FewOutsideResult few = find_few_outside(inst, 2 * r, S, gamma - 2);
    rec.dp_calls += few.dp_calls;
    if (few.centers) {
      rec.outcome = RadiusOutcome::kRounded2r;
      rec.centers = few.centers;
      result.centers = std::move(few.centers);
      return result;
    }
    if (bound < 0) {
      // The guesses covered every set of at most k centers, so not even a
      // radius-2r solution exists, let alone a radius-r one.
      rec.outcome = RadiusOutcome::kInfeasibleCertified;
      return result;
    }
    for (const auto& cut : rec.cuts) {
      CKC_ENSURE(cut.S != S, "round-or-cut generated the same cut twice");
    }
    rec.cuts.push_back({S, bound});
  }
}

namespace {

// Exact search over all k-subsets; supersets only help, so size k suffices.
std::optional<CenterSet> enumerate_optimum(const Instance& inst) {
  const int size = std::min(inst.k(), inst.size());
  std::optional<CenterSet> best;
  for_each_subset(iota_points(inst.size()), size, [&](const std::vector<int>& C) {
    auto radius = min_feasible_radius(inst, C);
    if (radius && (!best || *radius < best->radius)) best = CenterSet{C, *radius};
    return false;
  });
  return best;
}

}  // namespace

std::optional<ColorfulSolution> solve_colorful(const Instance& inst,
                                               const ColorfulOptions& options) {
  ColorfulSolution out;
  const bool all_zero = std::all_of(inst.colors().begin(), inst.colors().end(),
                                    [](const ColorClass& c) { return c.demand == 0; });
  if (all_zero) {
    out.solution = CenterSet{{}, Rational(0)};
    out.probe_radius = 0;
    RadiusRecord rec;
    rec.radius = 0;
    rec.outcome = RadiusOutcome::kEnumerated;
    out.trace.records.push_back(rec);
    return out;
  }

  if (options.enumerate_when_gamma_ge_k && inst.num_colors() >= inst.k() &&
      binomial(inst.size(), std::min(inst.k(), inst.size())) <= options.enumeration_cap) {
    auto best = enumerate_optimum(inst);
    if (!best) return std::nullopt;
    out.probe_radius = best->radius;
    out.solution = std::move(*best);
    RadiusRecord rec;
    rec.radius = out.probe_radius;
    rec.outcome = RadiusOutcome::kEnumerated;
    out.trace.records.push_back(rec);
    return out;
  }

  const auto& radii = inst.radii();
  std::optional<std::vector<int>> found;
  int found_at = -1;
  auto probe = [&](int idx) {
    FixedRadiusResult res = solve_fixed_radius(inst, radii[idx], options);
    out.trace.records.push_back(std::move(res.record));
    if (res.centers) {
      found = std::move(res.centers);
      found_at = idx;
      return true;
    }
    return false;
  };

  const int last = static_cast<int>(radii.size()) - 1;
  if (options.linear_scan) {
    for (int idx = 0; idx <= last; ++idx) {
      if (probe(idx)) break;
    }
    if (!found) return std::nullopt;
  } else {
    // Invariant: lo failed (or is -1), hi succeeded. The result sits right
    // after a certified failure, so its radius is at most the optimum.
    if (!probe(last)) return std::nullopt;
    std::vector<int> best = *found;
    int lo = -1;
    int hi = last;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (probe(mid)) {
        hi = mid;
        best = *found;
      } else {
        lo = mid;
      }
    }
    found = std::move(best);
    found_at = hi;
  }

  out.probe_radius = radii[found_at];
  auto tight = min_feasible_radius(inst, *found);
  CKC_ENSURE(tight && *tight <= 4 * out.probe_radius, "solution radius exceeds 4r");
  out.solution = CenterSet{std::move(*found), *tight};
  return out;
}

std::optional<CenterSet> pseudo_approx_baseline(const Instance& inst, const Rational& r) {
  const lp::LinearProgram prog = build_relaxation(inst, r, {});
  const lp::Outcome lp_out = lp::solve(prog);
  if (lp_out.status != lp::Status::kOptimal) return std::nullopt;
  const FractionalPoint pt = split_point(inst, lp_out.solution);
  const GoodPartition part = good_partition(inst, r, pt);
  const CoveringSystem sys = build_cluster_system(inst, part);

  CenterSet out{{}, 4 * r};
  const bool trivial = std::all_of(sys.b.begin(), sys.b.end(),
                                   [](const Rational& v) { return sgn(v) == 0; });
  if (trivial) return out;
  if (part.size() <= inst.k()) {
    out.centers = normalized(part.centers);
  } else {
    auto z = cluster_selection_lp(sys);
    CKC_ENSURE(z.has_value(), "cluster selection LP infeasible under a feasible relaxation");
    for (int i = 0; i < part.size(); ++i) {
      if (sgn((*z)[i]) > 0) out.centers.push_back(part.centers[i]);
    }
    out.centers = normalized(std::move(out.centers));
  }
  CKC_ENSURE(static_cast<int>(out.centers.size()) <= inst.k() + inst.num_colors() - 1,
             "baseline opened more than k + gamma - 1 centers");
  const PointMask covered = ball_mask(inst, out.centers, out.radius);
  for (const auto& c : inst.colors()) {
    long got = 0;
    for (int u : c.members) got += covered[u];
    CKC_ENSURE(got >= c.demand, "baseline misses a demand at radius 4r");
  }
  return out;
}

}  // namespace ckc
