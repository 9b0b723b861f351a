#include "ckc/sparse_round.hpp"

#include <algorithm>

#include "ckc/errors.hpp"
#include "ckc/lp.hpp"

namespace ckc {

CoveringSystem aggregate_system(std::vector<std::vector<Rational>> point_coefficients,
                                std::vector<Rational> b, const GoodPartition& part) {
  CKC_ENSURE(point_coefficients.size() == b.size(), "covering system shape mismatch");
  CoveringSystem sys;
  sys.a.assign(b.size(), std::vector<Rational>(static_cast<std::size_t>(part.size())));
  for (std::size_t l = 0; l < b.size(); ++l) {
    for (int i = 0; i < part.size(); ++i) {
      for (int u : part.clusters[i]) sys.a[l][i] += point_coefficients[l][u];
    }
    for (const auto& v : point_coefficients[l]) {
      CKC_ENSURE(sgn(v) >= 0, "covering coefficients must be nonnegative");
    }
  }
  sys.point_coefficients = std::move(point_coefficients);
  sys.b = std::move(b);
  return sys;
}

CoveringSystem build_cluster_system(const Instance& inst, const GoodPartition& part) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> b;
  for (const auto& c : inst.colors()) {
    std::vector<Rational> row(static_cast<std::size_t>(inst.size()));
    for (int u : c.members) row[u] = 1;
    rows.push_back(std::move(row));
    b.emplace_back(c.demand);
  }
  return aggregate_system(std::move(rows), std::move(b), part);
}

std::optional<std::vector<Rational>> cluster_selection_lp(const CoveringSystem& sys) {
  const int q = sys.a.empty() ? 0 : static_cast<int>(sys.a[0].size());
  lp::LinearProgram prog(q, lp::Sense::kMinimize);
  for (int i = 0; i < q; ++i) {
    prog.set_bounds(i, Rational(0), Rational(1));
    prog.set_cost(i, 1);
  }
  for (int l = 0; l < sys.rows(); ++l) {
    prog.add_constraint(sys.a[l], lp::Relation::kGreaterEqual, sys.b[l]);
  }
  auto outcome = lp::solve(prog);
  if (outcome.status != lp::Status::kOptimal) return std::nullopt;
  return std::move(outcome.solution);
}

namespace {

void ensure_covers(const Instance& inst, const Rational& r, const CoveringSystem& sys,
                   const std::vector<int>& centers) {
  const PointMask covered = ball_mask(inst, centers, 4 * r);
  for (int l = 0; l < sys.rows(); ++l) {
    Rational got = 0;
    for (int u = 0; u < inst.size(); ++u) {
      if (covered[u]) got += sys.point_coefficients[l][u];
    }
    CKC_ENSURE(got >= sys.b[l], "rounded centers miss a covering row at radius 4r");
  }
}

}  // namespace

SparseRounding sparse_round(const Instance& inst, const Rational& r, const GoodPartition& part,
                            const CoveringSystem& sys, int k, const FractionalPoint* origin) {
  SparseRounding out;
  const bool trivial =
      std::all_of(sys.b.begin(), sys.b.end(), [](const Rational& v) { return sgn(v) <= 0; });
  if (trivial) return out;
  if (part.size() <= k) {
    out.centers = normalized(part.centers);
    ensure_covers(inst, r, sys, out.centers);
    return out;
  }

  auto z = cluster_selection_lp(sys);
  CKC_ENSURE(z.has_value(), "cluster selection LP infeasible");
  Rational value = 0;
  int fractional = 0;
  for (int i = 0; i < part.size(); ++i) {
    value += (*z)[i];
    if (sgn((*z)[i]) > 0) out.centers.push_back(part.centers[i]);
    if (sgn((*z)[i]) > 0 && (*z)[i] < 1) ++fractional;
  }
  const int t = sys.rows();
  CKC_ENSURE(value <= k - t + 1, "cluster selection LP value exceeds k - t + 1");
  CKC_ENSURE(fractional <= t, "cluster selection optimum is not sparse");
  if (origin != nullptr) {
    Rational bound = 0;
    for (int s : part.centers) {
      const Rational mass = y_mass_near(inst, r, *origin, s);
      bound += mass < 1 ? mass : Rational(1);
    }
    CKC_ENSURE(value <= bound, "cluster selection LP value exceeds the y-mass bound");
  }
  out.centers = normalized(std::move(out.centers));
  CKC_ENSURE(static_cast<int>(out.centers.size()) <= k, "sparse rounding opened more than k");
  for (int l = 0; l < t; ++l) {
    Rational got = 0;
    for (int i = 0; i < part.size(); ++i) {
      if (sgn((*z)[i]) > 0) got += sys.a[l][i];
    }
    CKC_ENSURE(got >= sys.b[l], "opened clusters miss a covering row");
  }
  ensure_covers(inst, r, sys, out.centers);
  out.z = std::move(*z);
  return out;
}

}  // namespace ckc
