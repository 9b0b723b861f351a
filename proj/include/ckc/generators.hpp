#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ckc/instance.hpp"
#include "ckc/oracles.hpp"
#include "ckc/partition.hpp"

namespace ckc {

/// Points at the given line coordinates, d(i, j) = |x_i - x_j|.
DistanceMatrix line_metric(const std::vector<Rational>& coordinates);

/// L1 distances between 2-d points.
DistanceMatrix grid_l1_metric(const std::vector<std::pair<Rational, Rational>>& points);

/// One point per vertex at coordinate i, one demand-1 color per edge holding
/// its endpoints, k = t. A radius-0 solution exists iff g has a vertex cover
/// of size at most t. Edgeless graphs get a single demand-0 color. Degrees
/// above 3 only produce a warning on `warn`. Throws InvalidInput when t < 1
/// and there are edges (the instance would need k = 0).
Instance gen_from_vc3(const Graph& g, int t, std::ostream* warn = nullptr);

/// One point per set at coordinate i, one demand-1 color per universe element
/// holding the sets that contain it, k = t. Throws InvalidInput for an
/// element in no set or t < 1 with a nonempty universe.
Instance gen_from_setcover(const SetCoverInstance& sc, int t);

struct AppendixB {
  Instance instance;
  Rational M;
  std::vector<Rational> coordinates;
  // Colors: 0 red, 1 blue.
  std::vector<int> c1;  // {location 1, location M+1}
  std::vector<int> c2;  // {location 4, location M+4}
  FractionalPoint point;  // x = 1/2, y = (chi(c1) + chi(c2)) / 2
};

/// Two groups of six points on the line (locations 1..4 and M+1..M+4), red
/// and blue demands 3 each, k = 2. No integral solution of radius 0 exists.
/// Requires M >= 9.
AppendixB fixture_appendix_b(long M);

enum class MetricKind { kLine, kGridL1 };

struct RandomSpec {
  std::uint64_t seed = 1;
  int n = 8;
  int k = 2;
  int gamma = 2;
  MetricKind metric = MetricKind::kLine;
  // Each demand is drawn from 1..max(1, floor(density * |X_l|)).
  Rational demand_density{1, 2};
  // Chance that p(u) is positive; positive values come from {a/b : 1 <= a <= b <= 4}.
  Rational p_density{1, 2};
};

/// Deterministic in the spec. Coordinates are halves of small integers, so
/// distances are exact rationals.
Instance gen_random_instance(const RandomSpec& spec);
FairInstance gen_random_fair(const RandomSpec& spec);

}  // namespace ckc
