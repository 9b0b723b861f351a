#include "ckc/partition.hpp"

#include <algorithm>

namespace ckc {

GoodPartition good_partition(const Instance& inst, const Rational& r, const FractionalPoint& pt) {
  const int n = inst.size();
  const Rational four_r = 4 * r;
  const int reach = inst.rank_at_most(four_r);
  std::vector<char> uncovered(n, 1);
  int remaining = n;
  GoodPartition part;
  while (remaining > 0) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (uncovered[u] && (best < 0 || pt.x[u] > pt.x[best])) best = u;
    }
    std::vector<int> cluster;
    for (int u = 0; u < n; ++u) {
      if (uncovered[u] && inst.distance_rank(best, u) <= reach) {
        cluster.push_back(u);
        uncovered[u] = 0;
        --remaining;
      }
    }
    part.centers.push_back(best);
    part.clusters.push_back(std::move(cluster));
  }
  return part;
}

Rational y_mass_near(const Instance& inst, const Rational& r, const FractionalPoint& pt, int s) {
  const int reach = inst.rank_at_most(r);
  Rational total = 0;
  for (int v = 0; v < inst.size(); ++v) {
    if (inst.distance_rank(s, v) <= reach) total += pt.y[v];
  }
  return total;
}

Rational y_mass_near_centers(const Instance& inst, const Rational& r, const FractionalPoint& pt,
                             const GoodPartition& part) {
  const PointMask near = ball_mask(inst, part.centers, r);
  Rational total = 0;
  for (int v = 0; v < inst.size(); ++v) {
    if (near[v]) total += pt.y[v];
  }
  return total;
}

std::optional<PartitionViolation> verify_partition(const Instance& inst, const Rational& r,
                                                   const FractionalPoint& pt,
                                                   const GoodPartition& part) {
  const int n = inst.size();
  const int q = part.size();
  if (static_cast<int>(part.clusters.size()) != q) {
    return PartitionViolation{0, 0, 0, "center and cluster counts differ"};
  }
  std::vector<int> owner(n, -1);
  for (int i = 0; i < q; ++i) {
    for (int u : part.clusters[i]) {
      if (u < 0 || u >= n || owner[u] >= 0) {
        return PartitionViolation{0, i, u, "clusters overlap or contain an invalid point"};
      }
      owner[u] = i;
    }
    const auto& cl = part.clusters[i];
    if (std::find(cl.begin(), cl.end(), part.centers[i]) == cl.end()) {
      return PartitionViolation{0, i, part.centers[i], "center outside its own cluster"};
    }
  }
  for (int u = 0; u < n; ++u) {
    if (owner[u] < 0) return PartitionViolation{0, 0, u, "point not covered by any cluster"};
  }
  const Rational four_r = 4 * r;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (inst.distance(part.centers[i], part.centers[j]) <= four_r) {
        return PartitionViolation{1, i, j, "centers not more than 4r apart"};
      }
    }
  }
  for (int i = 0; i < q; ++i) {
    for (int u : part.clusters[i]) {
      if (inst.distance(part.centers[i], u) > four_r) {
        return PartitionViolation{2, i, u, "cluster member farther than 4r from its center"};
      }
    }
  }
  for (int i = 0; i < q; ++i) {
    const Rational mass = y_mass_near(inst, r, pt, part.centers[i]);
    for (int u : part.clusters[i]) {
      if (pt.x[u] > mass) {
        return PartitionViolation{3, i, u, "cluster member x exceeds y-mass near its center"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ckc
