#include <gtest/gtest.h>

#include "ckc/colorful.hpp"
#include "ckc/errors.hpp"
#include "ckc/generators.hpp"
#include "ckc/partition.hpp"
#include "ckc/sparse_round.hpp"
#include "helpers.hpp"

namespace ckc {
namespace {

TEST(Partition, AppendixBPointSplitsIntoTwoGroups) {
  const auto fx = fixture_appendix_b(100);
  const GoodPartition part = good_partition(fx.instance, 1, fx.point);
  EXPECT_EQ(part.centers, (std::vector<int>{0, 6}));
  EXPECT_EQ(part.clusters[0], (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(part.clusters[1], (std::vector<int>{6, 7, 8, 9, 10, 11}));
  EXPECT_FALSE(verify_partition(fx.instance, 1, fx.point, part).has_value());
  EXPECT_EQ(y_mass_near_centers(fx.instance, 1, fx.point, part), 1);
}

TEST(Partition, GreedyPicksLargestXLowestIndex) {
  const Instance inst = testing::on_line({0, 1, 20}, 1, {{{0, 1, 2}, 1}});
  FractionalPoint pt{{ratio(1, 2), Rational(1), Rational(1)}, {Rational(0), Rational(1), Rational(0)}};
  const GoodPartition part = good_partition(inst, 1, pt);
  EXPECT_EQ(part.centers, (std::vector<int>{1, 2}));
  EXPECT_EQ(part.clusters[0], (std::vector<int>{0, 1}));
}

TEST(Partition, DetectsBrokenProperties) {
  const auto fx = fixture_appendix_b(100);
  GoodPartition part = good_partition(fx.instance, 1, fx.point);
  GoodPartition close = part;
  close.centers[1] = 5;
  std::swap(close.clusters[1][0], close.clusters[1][0]);
  EXPECT_TRUE(verify_partition(fx.instance, 1, fx.point, close).has_value());

  FractionalPoint heavy = fx.point;
  heavy.x[1] = 1;  // y(B(0, 1)) is only 1/2
  auto v = verify_partition(fx.instance, 1, heavy, good_partition(fx.instance, 1, heavy));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->property, 3);
}

TEST(Partition, RandomLpPointsGivePartitionsWithAllProperties) {
  for (int seed = 1; seed <= 25; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n = 9;
    spec.k = 2;
    spec.metric = seed % 2 ? MetricKind::kLine : MetricKind::kGridL1;
    const Instance inst = gen_random_instance(spec);
    for (const auto& r : inst.radii()) {
      const auto prog = build_relaxation(inst, r, {});
      const auto out = lp::solve(prog);
      if (out.status != lp::Status::kOptimal) continue;
      const FractionalPoint pt = split_point(inst, out.solution);
      EXPECT_FALSE(verify_partition(inst, r, pt, good_partition(inst, r, pt)).has_value());
    }
  }
}

TEST(ClusterSystem, AppendixBMatrix) {
  const auto fx = fixture_appendix_b(100);
  const GoodPartition part = good_partition(fx.instance, 1, fx.point);
  const CoveringSystem sys = build_cluster_system(fx.instance, part);
  // Red cluster counts (4, 2), blue (2, 4).
  EXPECT_EQ(sys.a, (std::vector<std::vector<Rational>>{{4, 2}, {2, 4}}));
  EXPECT_EQ(sys.b, (std::vector<Rational>{3, 3}));
}

TEST(ClusterSelection, AppendixBHalfHalf) {
  const auto fx = fixture_appendix_b(100);
  const GoodPartition part = good_partition(fx.instance, 1, fx.point);
  const auto z = cluster_selection_lp(build_cluster_system(fx.instance, part));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, (std::vector<Rational>{ratio(1, 2), ratio(1, 2)}));
}

TEST(SparseRound, AppendixBOpensBothClusters) {
  const auto fx = fixture_appendix_b(100);
  const GoodPartition part = good_partition(fx.instance, 1, fx.point);
  const CoveringSystem sys = build_cluster_system(fx.instance, part);
  const SparseRounding out = sparse_round(fx.instance, 1, part, sys, 2, &fx.point);
  EXPECT_EQ(out.centers, (std::vector<int>{0, 6}));
  EXPECT_TRUE(check_feasible(fx.instance, out.centers, 4).feasible);
}

TEST(SparseRound, ShortCircuits) {
  const Instance inst = testing::on_line({0, 10, 20}, 1, {{{0, 1, 2}, 0}});
  FractionalPoint pt{{0, 0, 0}, {0, 0, 0}};
  const GoodPartition part = good_partition(inst, 1, pt);
  EXPECT_TRUE(sparse_round(inst, 1, part, build_cluster_system(inst, part), 1).centers.empty());

  const Instance two = testing::on_line({0, 10}, 2, {{{0, 1}, 2}});
  FractionalPoint full{{1, 1}, {1, 1}};
  const GoodPartition p2 = good_partition(two, 1, full);
  EXPECT_EQ(sparse_round(two, 1, p2, build_cluster_system(two, p2), 2).centers,
            (std::vector<int>{0, 1}));
}

TEST(SparseRound, InfeasibleSelectionIsAnInvariantViolation) {
  const Instance inst = testing::on_line({0, 10, 20}, 1, {{{0, 1, 2}, 3}});
  FractionalPoint pt{{1, 0, 0}, {1, 0, 0}};
  GoodPartition part{{0, 1, 2}, {{0}, {1}, {2}}};
  CoveringSystem sys = build_cluster_system(inst, part);
  EXPECT_THROW(sparse_round(inst, 1, part, sys, 1), InvariantViolation);
  sys.b[0] = 4;
  EXPECT_FALSE(cluster_selection_lp(sys).has_value());
}

TEST(Aggregate, SumsPerCluster) {
  GoodPartition part{{0, 2}, {{0, 1}, {2}}};
  const CoveringSystem sys = aggregate_system({{ratio(1, 2), Rational(1), Rational(3)}}, {Rational(1)}, part);
  EXPECT_EQ(sys.a[0], (std::vector<Rational>{ratio(3, 2), Rational(3)}));
  EXPECT_THROW(aggregate_system({{Rational(-1), 0, 0}}, {Rational(1)}, part), InvariantViolation);
}

}  // namespace
}  // namespace ckc
