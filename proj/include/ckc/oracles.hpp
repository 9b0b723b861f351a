#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ckc/fair.hpp"
#include "ckc/instance.hpp"

namespace ckc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Optimal radius by exhaustive search: the smallest candidate radius at
/// which some set of at most k centers meets every demand. The witness is the
/// first such set by size, then lexicographically. nullopt when no radius
/// works. Throws EnumerationCapExceeded when C(n, k) > cap, InvalidInput for
/// n > 64.
std::optional<CenterSet> brute_force_colorful(const Instance& inst,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// Every set of at most k centers feasible at radius r (ascending by size,
/// then lexicographically).
std::vector<std::vector<int>> enumerate_feasible(const Instance& inst, const Rational& r,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Smallest candidate radius whose distribution LP over all of F(r) is
/// feasible, with a basic distribution.
std::optional<Distribution> brute_force_fair(const FairInstance& finst,
                                             std::uint64_t cap = kDefaultEnumerationCap);

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

bool vertex_cover_exists(const Graph& g, int t);
bool set_cover_exists(const SetCoverInstance& sc, int t);

}  // namespace ckc
