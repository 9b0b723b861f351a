#include <gtest/gtest.h>

#include <random>

#include "ckc/errors.hpp"
#include "ckc/instance.hpp"
#include "helpers.hpp"

namespace ckc {
namespace {

using testing::triangle_leaf;
using testing::on_line;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2/1");
  EXPECT_EQ(to_string(parse_rational("0")), "0/1");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_THROW(parse_rational("1/"), InvalidInput);
  EXPECT_EQ(ratio(6, -4), parse_rational("-3/2"));
}

TEST(Rational, CommonDenominatorIsLcm) {
  const std::vector<Rational> v = {ratio(1, 4), ratio(5, 6), Rational(3)};
  EXPECT_EQ(common_denominator(v), 12);
  const std::vector<int> idx = {0, 1};
  EXPECT_EQ(sum_at(v, idx), ratio(13, 12));
}

TEST(Metric, SinglePointIsValid) {
  EXPECT_FALSE(validate_metric({{Rational(0)}}).has_value());
}

TEST(Metric, CollinearPointsAreValid) {
  EXPECT_FALSE(validate_metric(line_metric(testing::coords({0, 1, 3}))).has_value());
}

TEST(Metric, ReportsTriangleViolation) {
  DistanceMatrix d = {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  auto bad = validate_metric(d);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, MetricViolation::Kind::kTriangle);
  EXPECT_EQ(bad->i, 0);
  EXPECT_EQ(bad->j, 1);
  EXPECT_EQ(bad->k, 2);
}

TEST(Metric, ReportsAsymmetryAndDiagonal) {
  EXPECT_EQ(validate_metric({{0, 1}, {2, 0}})->kind, MetricViolation::Kind::kAsymmetric);
  EXPECT_EQ(validate_metric({{1, 1}, {1, 0}})->kind, MetricViolation::Kind::kNonzeroDiagonal);
  EXPECT_EQ(validate_metric({{0, -1}, {-1, 0}})->kind, MetricViolation::Kind::kNegative);
  EXPECT_EQ(validate_metric({{0, 1}, {1}})->kind, MetricViolation::Kind::kNotSquare);
}

TEST(Instance, RejectsBadInput) {
  EXPECT_THROW(on_line({0, 1}, 1, {{{0}, 2}}), InvalidInput);
  EXPECT_THROW(on_line({0, 1}, 3, {{{0}, 1}}), InvalidInput);
  EXPECT_THROW(on_line({0, 1}, 0, {{{0}, 1}}), InvalidInput);
  EXPECT_THROW(on_line({0, 1}, 1, {}), InvalidInput);
  EXPECT_THROW(on_line({0, 1}, 1, {{{5}, 1}}), InvalidInput);
  EXPECT_THROW(Instance({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}, 1, {{{0}, 1}}), InvalidInput);
  EXPECT_THROW(FairInstance(triangle_leaf(), {0, 0, 0, 2}), InvalidInput);
  EXPECT_THROW(FairInstance(triangle_leaf(), {0, 0}), InvalidInput);
}

TEST(Ball, AppendixBFirstPoint) {
  const auto fx = fixture_appendix_b(100);
  EXPECT_EQ(ball(fx.instance, 0, 1), (std::vector<int>{0, 1}));
}

TEST(Ball, LineExample) {
  const Instance inst = on_line({0, 1, 10, 11}, 1, {{{0}, 1}});
  EXPECT_EQ(ball(inst, 0, 4), (std::vector<int>{0, 1}));
}

TEST(Ball, ContainsCenterAtRadiusZero) {
  const auto fx = fixture_appendix_b(100);
  for (int u = 0; u < fx.instance.size(); ++u) {
    const auto b = ball(fx.instance, u, 0);
    EXPECT_TRUE(std::find(b.begin(), b.end(), u) != b.end());
  }
}

TEST(Ball, MonotoneInRadius) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RandomSpec spec;
    spec.seed = trial;
    spec.n = 10;
    spec.metric = trial % 2 ? MetricKind::kGridL1 : MetricKind::kLine;
    const Instance inst = gen_random_instance(spec);
    const auto& radii = inst.radii();
    for (int u = 0; u < inst.size(); ++u) {
      for (std::size_t i = 1; i < radii.size(); ++i) {
        const auto small = ball(inst, u, radii[i - 1]);
        const auto big = ball(inst, u, radii[i]);
        EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      }
    }
  }
}

TEST(CandidateRadii, SinglePoint) {
  const Instance inst = on_line({5}, 1, {{{0}, 1}});
  EXPECT_EQ(candidate_radii(inst), (std::vector<Rational>{0}));
}

TEST(CandidateRadii, LinePoints) {
  const Instance inst = on_line({0, 1, 3}, 1, {{{0}, 1}});
  EXPECT_EQ(candidate_radii(inst), (std::vector<Rational>{0, 1, 2, 3}));
}

TEST(CandidateRadii, AppendixBContainsSmallGapsAndCrossGaps) {
  const auto fx = fixture_appendix_b(100);
  const auto radii = candidate_radii(fx.instance);
  for (long v : {0L, 1L, 2L, 3L, 97L, 100L, 103L}) {
    EXPECT_TRUE(std::binary_search(radii.begin(), radii.end(), Rational(v))) << v;
  }
  EXPECT_TRUE(std::is_sorted(radii.begin(), radii.end()));
  EXPECT_EQ(std::adjacent_find(radii.begin(), radii.end()), radii.end());
}

TEST(CheckFeasible, TriangleLeafVertexCover) {
  const Instance inst = triangle_leaf();
  const std::vector<int> C = {0, 2};
  const auto rep = check_feasible(inst, C, 0);
  EXPECT_TRUE(rep.feasible);
  EXPECT_EQ(rep.covered, (std::vector<long>{1, 1, 2, 1}));
}

TEST(CheckFeasible, TriangleLeafMissesColorC) {
  const Instance inst = triangle_leaf();
  const std::vector<int> C = {1, 3};
  const auto rep = check_feasible(inst, C, 0);
  EXPECT_FALSE(rep.feasible);
  EXPECT_EQ(rep.covered[2], 0);
}

TEST(CheckFeasible, ZeroDemandsNeedNoCenters) {
  const Instance inst = on_line({0, 4}, 1, {{{0, 1}, 0}});
  EXPECT_TRUE(check_feasible(inst, std::vector<int>{}, 0).feasible);
  EXPECT_EQ(min_feasible_radius(inst, std::vector<int>{}), Rational(0));
}

TEST(CheckFeasible, TooManyCenters) {
  const Instance inst = triangle_leaf();
  EXPECT_FALSE(check_feasible(inst, std::vector<int>{0, 1, 2}, 5).feasible);
  EXPECT_FALSE(min_feasible_radius(inst, std::vector<int>{0, 1, 2}).has_value());
}

TEST(CheckFeasible, MonotoneInRadiusAndMinRadiusIsTight) {
  for (int trial = 0; trial < 30; ++trial) {
    RandomSpec spec;
    spec.seed = 100 + trial;
    spec.n = 9;
    spec.k = 3;
    const Instance inst = gen_random_instance(spec);
    std::mt19937 rng(trial);
    std::vector<int> C;
    for (int u = 0; u < inst.size() && static_cast<int>(C.size()) < inst.k(); ++u) {
      if (rng() % 3 == 0) C.push_back(u);
    }
    bool seen = false;
    for (const auto& r : inst.radii()) {
      const bool ok = check_feasible(inst, C, r).feasible;
      if (seen) EXPECT_TRUE(ok);
      if (ok && !seen) {
        EXPECT_EQ(min_feasible_radius(inst, C), r);
      }
      seen = seen || ok;
    }
    if (!seen) EXPECT_FALSE(min_feasible_radius(inst, C).has_value());
  }
}

}  // namespace
}  // namespace ckc
