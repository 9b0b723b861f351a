#include "ckc/instance.hpp"

#include <algorithm>
#include <sstream>

#include "ckc/errors.hpp"

namespace ckc {

std::string MetricViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kNotSquare:
      out << "distance matrix is not square (row " << i << ")";
      break;
    case Kind::kNonzeroDiagonal:
      out << "d(" << i << "," << i << ") is not zero";
      break;
    case Kind::kNegative:
      out << "d(" << i << "," << j << ") is negative";
      break;
    case Kind::kAsymmetric:
      out << "d(" << i << "," << j << ") != d(" << j << "," << i << ")";
      break;
    case Kind::kTriangle:
      out << "triangle inequality fails: d(" << i << "," << k << ") > d(" << i << "," << j
          << ") + d(" << j << "," << k << ")";
      break;
  }
  return out.str();
}

std::optional<MetricViolation> validate_metric(const DistanceMatrix& dist) {
  using Kind = MetricViolation::Kind;
  const int n = static_cast<int>(dist.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n) return MetricViolation{Kind::kNotSquare, i, 0, 0};
  }
  for (int i = 0; i < n; ++i) {
    if (dist[i][i] != 0) return MetricViolation{Kind::kNonzeroDiagonal, i, i, 0};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sgn(dist[i][j]) < 0) return MetricViolation{Kind::kNegative, i, j, 0};
      if (dist[i][j] != dist[j][i]) return MetricViolation{Kind::kAsymmetric, i, j, 0};
    }
  }
  Rational via;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        via = dist[i][j] + dist[j][k];
        if (dist[i][k] > via) return MetricViolation{Kind::kTriangle, i, j, k};
      }
    }
  }
  return std::nullopt;
}

Instance::Instance(DistanceMatrix dist, int k, std::vector<ColorClass> colors) {
  auto data = std::make_shared<Data>();
  const int n = static_cast<int>(dist.size());
  if (n == 0) throw InvalidInput("instance has no points");
  if (auto bad = validate_metric(dist)) throw InvalidInput("invalid metric: " + bad->describe());
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  if (colors.empty()) throw InvalidInput("instance needs at least one color class");

  data->n = n;
  data->k = k;
  data->colors_of.assign(n, {});
  for (std::size_t l = 0; l < colors.size(); ++l) {
    auto& c = colors[l];
    c.members = normalized(std::move(c.members));
    for (int u : c.members) {
      if (u < 0 || u >= n) throw InvalidInput("color member index out of range");
      data->colors_of[u].push_back(static_cast<int>(l));
    }
    if (c.demand < 0) throw InvalidInput("negative demand");
    if (c.demand > static_cast<long>(c.members.size())) {
      throw InvalidInput("demand of color " + std::to_string(l) + " exceeds its class size");
    }
  }

  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : dist) values.insert(values.end(), row.begin(), row.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  data->rank.assign(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      data->rank[u][v] = static_cast<int>(
          std::lower_bound(values.begin(), values.end(), dist[u][v]) - values.begin());
    }
  }
  data->radii = std::move(values);
  data->dist = std::move(dist);
  data->colors = std::move(colors);
  data_ = std::move(data);
}

int Instance::rank_at_most(const Rational& r) const {
  const auto& radii = data_->radii;
  return static_cast<int>(std::upper_bound(radii.begin(), radii.end(), r) - radii.begin()) - 1;
}

FairInstance::FairInstance(Instance base, std::vector<Rational> p)
    : base_(std::move(base)), p_(std::move(p)) {
  if (static_cast<int>(p_.size()) != base_.size()) {
    throw InvalidInput("probability vector length differs from point count");
  }
  for (const auto& q : p_) {
    if (sgn(q) < 0 || q > 1) throw InvalidInput("probabilities must lie in [0, 1]");
  }
}

std::vector<Rational> candidate_radii(const Instance& inst) { return inst.radii(); }

std::vector<int> ball(const Instance& inst, int c, const Rational& r) {
  std::vector<int> out;
  for (int u = 0; u < inst.size(); ++u) {
    if (inst.distance(c, u) <= r) out.push_back(u);
  }
  return out;
}

PointMask ball_mask_at_rank(const Instance& inst, std::span<const int> centers, int rank) {
  PointMask mask(inst.size(), 0);
  for (int c : centers) {
    for (int u = 0; u < inst.size(); ++u) {
      if (inst.distance_rank(c, u) <= rank) mask[u] = 1;
    }
  }
  return mask;
}

PointMask ball_mask(const Instance& inst, std::span<const int> centers, const Rational& r) {
  return ball_mask_at_rank(inst, centers, inst.rank_at_most(r));
}

CoverageReport check_feasible(const Instance& inst, std::span<const int> centers,
                              const Rational& r) {
  const PointMask covered = ball_mask(inst, centers, r);
  CoverageReport report;
  report.feasible = static_cast<int>(centers.size()) <= inst.k();
  for (const auto& c : inst.colors()) {
    long count = 0;
    for (int u : c.members) count += covered[u];
    report.covered.push_back(count);
    if (count < c.demand) report.feasible = false;
  }
  return report;
}

std::optional<Rational> min_feasible_radius(const Instance& inst, std::span<const int> centers) {
  if (static_cast<int>(centers.size()) > inst.k()) return std::nullopt;
  int needed = 0;
  std::vector<int> nearest;
  for (const auto& c : inst.colors()) {
    if (c.demand == 0) continue;
    if (centers.empty()) return std::nullopt;
    nearest.clear();
    for (int u : c.members) {
      int best = inst.distance_rank(centers[0], u);
      for (int s : centers) best = std::min(best, inst.distance_rank(s, u));
      nearest.push_back(best);
    }
    std::nth_element(nearest.begin(), nearest.begin() + (c.demand - 1), nearest.end());
    needed = std::max(needed, nearest[c.demand - 1]);
  }
  return inst.radii()[needed];
}

std::vector<int> normalized(std::vector<int> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace ckc
