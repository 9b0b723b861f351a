#pragma once

#include <optional>
#include <vector>

#include "ckc/instance.hpp"
#include "ckc/partition.hpp"

namespace ckc {

/// Covering rows sum_u a_l(u) x(u) >= b_l, kept both per point and summed
/// per cluster of a partition: a[l][i] = a_l(D_i).
struct CoveringSystem {
  std::vector<std::vector<Rational>> point_coefficients;  // t x n
  std::vector<std::vector<Rational>> a;                   // t x q
  std::vector<Rational> b;

  int rows() const { return static_cast<int>(b.size()); }
};

/// Sums per-point rows over the clusters of `part`. Entries must be >= 0.
CoveringSystem aggregate_system(std::vector<std::vector<Rational>> point_coefficients,
                                std::vector<Rational> b, const GoodPartition& part);

/// The color rows: a_l(u) = [u in X_l], b_l = m_l.
CoveringSystem build_cluster_system(const Instance& inst, const GoodPartition& part);

/// Extreme optimum of  min sum z  s.t.  a z >= b, 0 <= z <= 1, or nullopt when
/// that program is infeasible.
std::optional<std::vector<Rational>> cluster_selection_lp(const CoveringSystem& sys);

struct SparseRounding {
  std::vector<int> centers;  // subset of the partition centers, ascending
  std::vector<Rational> z;   // extreme optimum; empty on the short-circuit paths
};

/// Picks clusters from an extreme optimum of cluster_selection_lp: opens
/// s_i exactly when z_i > 0. With y(B(S,r)) <= k - t + 1 for some point
/// (x,y) of the relaxation extended by `sys`, this opens at most k centers
/// and meets every row at radius 4r.
///
/// Short-circuits: all b_l = 0 gives the empty set, and q <= k gives all of S.
/// Throws InvariantViolation when the LP is infeasible, its value exceeds
/// k - t + 1, or any post-condition fails. When `origin` is supplied the LP
/// value is also checked against y(B(S,r)).
SparseRounding sparse_round(const Instance& inst, const Rational& r, const GoodPartition& part,
                            const CoveringSystem& sys, int k,
                            const FractionalPoint* origin = nullptr);

}  // namespace ckc
