#include "ckc/generators.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "ckc/errors.hpp"

namespace ckc {

DistanceMatrix line_metric(const std::vector<Rational>& coordinates) {
  const std::size_t n = coordinates.size();
  DistanceMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = abs(coordinates[i] - coordinates[j]);
  }
  return d;
}

DistanceMatrix grid_l1_metric(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  DistanceMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = abs(points[i].first - points[j].first) + abs(points[i].second - points[j].second);
    }
  }
  return d;
}

namespace {

std::vector<Rational> positions(int n) {
  std::vector<Rational> xs;
  for (int i = 0; i < n; ++i) xs.emplace_back(i);
  return xs;
}

}  // namespace

Instance gen_from_vc3(const Graph& g, int t, std::ostream* warn) {
  if (g.vertices < 1) throw InvalidInput("graph has no vertices");
  std::vector<int> degree(g.vertices, 0);
  std::vector<ColorClass> colors;
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices || u == v) {
      throw InvalidInput("bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    ++degree[u];
    ++degree[v];
    colors.push_back({{u, v}, 1});
  }
  if (warn != nullptr && *std::max_element(degree.begin(), degree.end()) > 3) {
    *warn << "warning: graph has a vertex of degree above 3\n";
  }
  if (colors.empty()) colors.push_back({{}, 0});
  if (t < 1 && !g.edges.empty()) throw InvalidInput("t must be at least 1");
  const int k = std::clamp(t, 1, g.vertices);
  return Instance(line_metric(positions(g.vertices)), k, std::move(colors));
}

Instance gen_from_setcover(const SetCoverInstance& sc, int t) {
  const int m = static_cast<int>(sc.sets.size());
  if (m < 1) throw InvalidInput("set family is empty");
  std::vector<ColorClass> colors(sc.universe);
  for (int i = 0; i < m; ++i) {
    for (int e : sc.sets[i]) {
      if (e < 0 || e >= sc.universe) throw InvalidInput("set element outside the universe");
      colors[e].members.push_back(i);
    }
  }
  for (int e = 0; e < sc.universe; ++e) {
    if (colors[e].members.empty()) {
      throw InvalidInput("element " + std::to_string(e) + " lies in no set");
    }
    colors[e].demand = 1;
  }
  if (colors.empty()) colors.push_back({{}, 0});
  if (t < 1 && sc.universe > 0) throw InvalidInput("t must be at least 1");
  const int k = std::clamp(t, 1, m);
  return Instance(line_metric(positions(m)), k, std::move(colors));
}

AppendixB fixture_appendix_b(long M) {
  if (M < 9) throw InvalidInput("the Appendix B fixture needs M >= 9");
  constexpr int kRed = 0;
  constexpr int kBlue = 1;
  // (location, color) in location order.
  const std::vector<std::pair<long, int>> layout = {
      {1, kRed},      {2, kRed},      {3, kBlue},     {4, kBlue},
      {4, kRed},      {4, kRed},      {M + 1, kBlue}, {M + 1, kBlue},
      {M + 1, kBlue}, {M + 2, kRed},  {M + 3, kBlue}, {M + 4, kRed},
  };
  std::vector<Rational> xs;
  std::vector<ColorClass> colors(2);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    xs.emplace_back(layout[i].first);
    colors[layout[i].second].members.push_back(static_cast<int>(i));
  }
  colors[kRed].demand = 3;
  colors[kBlue].demand = 3;

  AppendixB out{Instance(line_metric(xs), 2, std::move(colors)), Rational(M), xs, {0, 6}, {3, 11},
                {}};
  const std::size_t n = layout.size();
  out.point.x.assign(n, Rational(1, 2));
  out.point.y.assign(n, Rational(0));
  for (int c : out.c1) out.point.y[c] += Rational(1, 2);
  for (int c : out.c2) out.point.y[c] += Rational(1, 2);
  return out;
}

namespace {

// mt19937_64 is specified bit-for-bit; the reduction below is ours, so the
// stream is identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  long below(long bound) { return static_cast<long>(engine_() % static_cast<std::uint64_t>(bound)); }
  bool chance(const Rational& prob) {
    const long den = prob.get_den().get_si();
    return below(den) < prob.get_num().get_si();
  }

 private:
  std::mt19937_64 engine_;
};

void check_spec(const RandomSpec& spec) {
  if (spec.n < 1 || spec.n > 64) throw InvalidInput("n must lie in [1, 64]");
  if (spec.k < 1 || spec.k > spec.n) throw InvalidInput("k must lie in [1, n]");
  if (spec.gamma < 1) throw InvalidInput("gamma must be at least 1");
  for (const Rational* q : {&spec.demand_density, &spec.p_density}) {
    if (sgn(*q) < 0 || *q > 1) throw InvalidInput("densities must lie in [0, 1]");
  }
}

Instance draw_instance(const RandomSpec& spec, Draw& draw) {
  DistanceMatrix dist;
  const long span = 2L * spec.n + 2;
  if (spec.metric == MetricKind::kLine) {
    std::vector<Rational> xs;
    for (int i = 0; i < spec.n; ++i) xs.push_back(ratio(draw.below(2 * span), 2));
    dist = line_metric(xs);
  } else {
    long side = 2;
    while (side * side < span) ++side;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i < spec.n; ++i) {
      Rational a = ratio(draw.below(2 * side), 2);
      pts.emplace_back(a, ratio(draw.below(2 * side), 2));
    }
    dist = grid_l1_metric(pts);
  }

  std::vector<ColorClass> colors(spec.gamma);
  for (auto& c : colors) {
    for (int u = 0; u < spec.n; ++u) {
      if (draw.below(2) == 0) c.members.push_back(u);
    }
    if (c.members.empty()) c.members.push_back(static_cast<int>(draw.below(spec.n)));
    Rational top = spec.demand_density * static_cast<long>(c.members.size());
    const long cap = std::max(1L, mpz_class(top.get_num() / top.get_den()).get_si());
    c.demand = 1 + draw.below(cap);
  }
  return Instance(std::move(dist), spec.k, std::move(colors));
}

}  // namespace

Instance gen_random_instance(const RandomSpec& spec) {
  check_spec(spec);
  Draw draw(spec.seed);
  return draw_instance(spec, draw);
}

FairInstance gen_random_fair(const RandomSpec& spec) {
  check_spec(spec);
  Draw draw(spec.seed);
  Instance base = draw_instance(spec, draw);
  std::vector<Rational> p(spec.n);
  for (auto& pu : p) {
    if (!draw.chance(spec.p_density)) continue;
    const long den = 1 + draw.below(4);
    pu = ratio(1 + draw.below(den), den);
  }
  return FairInstance(std::move(base), std::move(p));
}

}  // namespace ckc
