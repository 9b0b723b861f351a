#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ckc/rational.hpp"

namespace ckc {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// Membership flags indexed by point.
using PointMask = std::vector<char>;

struct ColorClass {
  std::vector<int> members;  // sorted, distinct
  long demand = 0;
};

struct MetricViolation {
  enum class Kind { kNotSquare, kNonzeroDiagonal, kNegative, kAsymmetric, kTriangle };
  Kind kind;
  // Offending indices. For kTriangle, d(i,k) > d(i,j) + d(j,k).
  int i = 0;
  int j = 0;
  int k = 0;

  std::string describe() const;
};

/// First violation in row-major scan order, or nullopt for a valid metric.
std::optional<MetricViolation> validate_metric(const DistanceMatrix& dist);

/// An immutable colorful k-center instance. Copies share storage.
///
/// Besides the raw rational distances, the constructor precomputes the sorted
/// distinct distance values (the candidate radii) and the rank of every
/// pairwise distance in that list, so ball queries at a candidate radius
/// reduce to integer comparisons.
class Instance {
 public:
  /// Throws InvalidInput on a bad metric, k outside [1, n], no colors, member
  /// indices out of range, or a demand larger than its class.
  Instance(DistanceMatrix dist, int k, std::vector<ColorClass> colors);

  int size() const { return data_->n; }
  int k() const { return data_->k; }
  int num_colors() const { return static_cast<int>(data_->colors.size()); }

  const Rational& distance(int u, int v) const { return data_->dist[u][v]; }
  const DistanceMatrix& distances() const { return data_->dist; }
  const std::vector<ColorClass>& colors() const { return data_->colors; }
  const std::vector<int>& colors_of(int u) const { return data_->colors_of[u]; }

  /// Sorted distinct values of {0} ∪ {d(u,v)}.
  const std::vector<Rational>& radii() const { return data_->radii; }
  int distance_rank(int u, int v) const { return data_->rank[u][v]; }
  /// Largest i with radii()[i] <= r; -1 when r < 0.
  int rank_at_most(const Rational& r) const;

 private:
  struct Data {
    int n = 0;
    int k = 0;
    DistanceMatrix dist;
    std::vector<ColorClass> colors;
    std::vector<std::vector<int>> colors_of;
    std::vector<Rational> radii;
    std::vector<std::vector<int>> rank;
  };
  std::shared_ptr<const Data> data_;
};

/// Instance plus per-point coverage probabilities p(u) ∈ [0,1].
class FairInstance {
 public:
  FairInstance(Instance base, std::vector<Rational> p);

  const Instance& base() const { return base_; }
  const std::vector<Rational>& p() const { return p_; }

 private:
  Instance base_;
  std::vector<Rational> p_;
};

struct CenterSet {
  std::vector<int> centers;  // sorted, distinct
  Rational radius;
};

std::vector<Rational> candidate_radii(const Instance& inst);

/// { u : d(c,u) <= r }, ascending.
std::vector<int> ball(const Instance& inst, int c, const Rational& r);

/// B(C, r) as a membership mask.
PointMask ball_mask(const Instance& inst, std::span<const int> centers, const Rational& r);
/// Same, with the radius given as an index into radii().
PointMask ball_mask_at_rank(const Instance& inst, std::span<const int> centers, int rank);

struct CoverageReport {
  std::vector<long> covered;  // per color
  bool feasible = false;
};

/// Coverage counts |B(C,r) ∩ X_l| and whether |C| <= k and every demand holds.
CoverageReport check_feasible(const Instance& inst, std::span<const int> centers, const Rational& r);

/// Smallest candidate radius at which `centers` is feasible; nullopt when
/// |C| > k or no radius works (only possible for C = ∅ with a positive demand).
std::optional<Rational> min_feasible_radius(const Instance& inst, std::span<const int> centers);

/// Sorts and removes duplicates.
std::vector<int> normalized(std::vector<int> points);

}  // namespace ckc
