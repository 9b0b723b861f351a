#include "ckc/oracles.hpp"

#include <bit>

#include "ckc/combinatorics.hpp"
#include "ckc/errors.hpp"
#include "ckc/lp.hpp"

namespace ckc {

namespace {

using Bits = std::uint64_t;

struct BitView {
  std::vector<Bits> color_bits;
  std::vector<std::vector<Bits>> ball_bits;  // [radius index][center]
};

BitView make_bits(const Instance& inst) {
  const int n = inst.size();
  if (n > 64) throw InvalidInput("brute force supports at most 64 points");
  BitView view;
  for (const auto& c : inst.colors()) {
    Bits b = 0;
    for (int u : c.members) b |= Bits{1} << u;
    view.color_bits.push_back(b);
  }
  const auto& radii = inst.radii();
  view.ball_bits.assign(radii.size(), std::vector<Bits>(n, 0));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int c = 0; c < n; ++c) {
      for (int u = 0; u < n; ++u) {
        if (inst.distance(c, u) <= radii[i]) view.ball_bits[i][c] |= Bits{1} << u;
      }
    }
  }
  return view;
}

bool meets_demands(const Instance& inst, const BitView& view, Bits covered) {
  for (int l = 0; l < inst.num_colors(); ++l) {
    if (std::popcount(covered & view.color_bits[l]) < inst.colors()[l].demand) return false;
  }
  return true;
}

void check_cap(const Instance& inst, std::uint64_t cap) {
  const int k = std::min(inst.k(), inst.size());
  if (binomial(inst.size(), k) > cap) {
    throw EnumerationCapExceeded("C(n, k) exceeds the enumeration cap");
  }
}

std::vector<std::vector<int>> feasible_at(const Instance& inst, const BitView& view,
                                          std::size_t rank) {
  std::vector<std::vector<int>> out;
  const auto pool = iota_points(inst.size());
  for (int size = 0; size <= std::min(inst.k(), inst.size()); ++size) {
    for_each_subset(pool, size, [&](const std::vector<int>& C) {
      Bits covered = 0;
      for (int c : C) covered |= view.ball_bits[rank][c];
      if (meets_demands(inst, view, covered)) out.push_back(C);
      return false;
    });
  }
  return out;
}

}  // namespace

std::optional<CenterSet> brute_force_colorful(const Instance& inst, std::uint64_t cap) {
  check_cap(inst, cap);
  const BitView view = make_bits(inst);
  const auto pool = iota_points(inst.size());
  const auto& radii = inst.radii();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int size = 0; size <= std::min(inst.k(), inst.size()); ++size) {
      std::vector<int> witness;
      const bool hit = for_each_subset(pool, size, [&](const std::vector<int>& C) {
        Bits covered = 0;
        for (int c : C) covered |= view.ball_bits[i][c];
        if (!meets_demands(inst, view, covered)) return false;
        witness = C;
        return true;
      });
      if (hit) return CenterSet{witness, radii[i]};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> enumerate_feasible(const Instance& inst, const Rational& r,
                                                 std::uint64_t cap) {
  check_cap(inst, cap);
  const int rank = inst.rank_at_most(r);
  if (rank < 0) return {};
  return feasible_at(inst, make_bits(inst), static_cast<std::size_t>(rank));
}

std::optional<Distribution> brute_force_fair(const FairInstance& finst, std::uint64_t cap) {
  const Instance& inst = finst.base();
  check_cap(inst, cap);
  const BitView view = make_bits(inst);
  const int n = inst.size();
  const auto& radii = inst.radii();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const auto family = feasible_at(inst, view, i);
    if (family.empty()) continue;
    const int m = static_cast<int>(family.size());
    // lambda >= 0, sum lambda = 1, coverage of u >= p(u).
    lp::LinearProgram plp(m);
    plp.add_constraint(std::vector<Rational>(m, Rational(1)), lp::Relation::kEqual, 1);
    for (int u = 0; u < n; ++u) {
      std::vector<Rational> row(m);
      for (int j = 0; j < m; ++j) {
        Bits covered = 0;
        for (int c : family[j]) covered |= view.ball_bits[i][c];
        if ((covered >> u) & 1) row[j] = 1;
      }
      plp.add_constraint(std::move(row), lp::Relation::kGreaterEqual, finst.p()[u]);
    }
    const lp::Outcome res = lp::solve(plp);
    if (res.status != lp::Status::kOptimal) continue;
    Distribution dist;
    dist.radius = radii[i];
    for (int j = 0; j < m; ++j) {
      if (sgn(res.solution[j]) > 0) dist.support.emplace_back(family[j], res.solution[j]);
    }
    return dist;
  }
  return std::nullopt;
}

bool vertex_cover_exists(const Graph& g, int t) {
  if (g.vertices > 30) throw InvalidInput("vertex cover brute force supports at most 30 vertices");
  const std::uint32_t limit = std::uint32_t{1} << g.vertices;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) > t) continue;
    bool ok = true;
    for (const auto& [u, v] : g.edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool set_cover_exists(const SetCoverInstance& sc, int t) {
  const int m = static_cast<int>(sc.sets.size());
  if (m > 30) throw InvalidInput("set cover brute force supports at most 30 sets");
  std::vector<std::uint64_t> bits(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int e : sc.sets[i]) bits[i] |= std::uint64_t{1} << e;
  }
  const std::uint64_t all =
      sc.universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.universe) - 1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (std::popcount(mask) > t) continue;
    std::uint64_t covered = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) covered |= bits[i];
    }
    if (covered == all) return true;
  }
  return false;
}

}  // namespace ckc
