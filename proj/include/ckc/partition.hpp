#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckc/instance.hpp"

namespace ckc {

/// Per-point coverage x and opening y values of a point of the relaxation.
struct FractionalPoint {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

/// Centers s_1..s_q (greedy order) and their clusters D_1..D_q.
struct GoodPartition {
  std::vector<int> centers;
  std::vector<std::vector<int>> clusters;  // each ascending

  int size() const { return static_cast<int>(centers.size()); }
};

/// Greedy clustering: repeatedly take the uncovered point of largest x (lowest
/// index on ties) and claim everything uncovered within 4r of it.
///
/// Centers end up pairwise more than 4r apart and each cluster lies in its
/// center's 4r-ball for any input. The y-mass property
/// y(B(s_i, r)) >= x(u) for u in D_i additionally needs the point to satisfy
/// the coverage rows of the relaxation; that is the caller's business.
GoodPartition good_partition(const Instance& inst, const Rational& r, const FractionalPoint& pt);

struct PartitionViolation {
  // 0: not a partition of X or a center outside its cluster,
  // 1: two centers within 4r, 2: cluster member beyond 4r,
  // 3: cluster member with x(u) > y(B(s_i, r)).
  int property = 0;
  int first = 0;   // cluster / center index
  int second = 0;  // second center index or the offending point
  std::string message;
};

std::optional<PartitionViolation> verify_partition(const Instance& inst, const Rational& r,
                                                   const FractionalPoint& pt,
                                                   const GoodPartition& part);

/// y(B(s, r)) for one center.
Rational y_mass_near(const Instance& inst, const Rational& r, const FractionalPoint& pt, int s);

/// y(B(S, r)) over all partition centers.
Rational y_mass_near_centers(const Instance& inst, const Rational& r, const FractionalPoint& pt,
                             const GoodPartition& part);

}  // namespace ckc
