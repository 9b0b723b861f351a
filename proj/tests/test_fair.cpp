#include <gtest/gtest.h>

#include <random>

#include "ckc/fair.hpp"
#include "ckc/oracles.hpp"
#include "helpers.hpp"

namespace ckc {
namespace {

TEST(EpsilonGap, ProductOfDenominators) {
  EXPECT_EQ(epsilon_gap({{ratio(1, 2), ratio(1, 3)}, ratio(1, 4)}), ratio(1, 24));
  EXPECT_EQ(epsilon_gap({{Rational(2), Rational(0)}, Rational(1)}), 1);
  const DualPoint dp{{ratio(1, 2), ratio(1, 2)}, Rational(0)};
  EXPECT_EQ(epsilon_gap(dp), ratio(1, 4));
  EXPECT_GE(ratio(1, 2), dp.mu + epsilon_gap(dp));
}

TEST(EpsilonGap, StrictIffClosed) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    DualPoint dp;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) dp.alpha.push_back(ratio(rng() % 20, 1 + rng() % 12));
    dp.mu = ratio(static_cast<long>(rng() % 30) - 5, 1 + rng() % 12);
    const Rational eps = epsilon_gap(dp);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Rational v = 0;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) v += dp.alpha[i];
      }
      EXPECT_EQ(v > dp.mu, v >= dp.mu + eps);
    }
  }
}

TEST(Separation, VacuousThresholdOnTriangleLeaf) {
  const FairInstance finst(testing::triangle_leaf(), std::vector<Rational>(4));
  const DualPoint dp{std::vector<Rational>(4), Rational(-1)};
  const Separation sep = separate_or_certify(finst, 0, dp);
  ASSERT_TRUE(sep.violating.has_value());
  EXPECT_EQ(sep.violating->size(), 2u);
  EXPECT_TRUE(check_feasible(finst.base(), *sep.violating, 0).feasible);
}

TEST(Separation, InfeasibleBaseIsCertified) {
  const Instance inst = testing::on_line({0, 10}, 1, {{{0}, 1}, {{1}, 1}});
  const FairInstance finst(inst, {Rational(0), Rational(0)});
  const DualPoint dp{{Rational(0), Rational(0)}, Rational(-1)};
  const Separation sep = separate_or_certify(finst, 1, dp);
  EXPECT_FALSE(sep.violating.has_value());
  EXPECT_FALSE(sep.farkas.empty());
}

TEST(Separation, SinglePoint) {
  const FairInstance finst(testing::on_line({0}, 1, {{{0}, 1}}), {Rational(1)});
  const DualPoint dp{{Rational(2)}, Rational(1)};
  const Separation sep = separate_or_certify(finst, 0, dp);
  ASSERT_TRUE(sep.violating.has_value());
  EXPECT_EQ(*sep.violating, (std::vector<int>{0}));
}

TEST(Restricted, EmptyFamilyGivesDualPoint) {
  const FairInstance finst(testing::triangle_leaf(), {Rational(0), ratio(1, 2), Rational(0), Rational(0)});
  const auto res = solve_restricted(finst, 0, {});
  ASSERT_TRUE(std::holds_alternative<DualPoint>(res));
  const auto& dp = std::get<DualPoint>(res);
  Rational lhs = 0;
  for (int u = 0; u < 4; ++u) lhs += finst.p()[u] * dp.alpha[u];
  EXPECT_EQ(lhs - dp.mu, 1);
}

TEST(Restricted, CoveringSetGivesPointMass) {
  const FairInstance finst(testing::triangle_leaf(), {Rational(1), Rational(1), ratio(1, 3), Rational(0)});
  const std::vector<std::vector<int>> H = {{0, 2}};
  const auto res = solve_restricted(finst, 3, H);
  ASSERT_TRUE(std::holds_alternative<Distribution>(res));
  const auto& dist = std::get<Distribution>(res);
  ASSERT_EQ(dist.support.size(), 1u);
  EXPECT_EQ(dist.support[0].first, H[0]);
  EXPECT_EQ(dist.support[0].second, 1);
}

TEST(Restricted, TwoPointsHalfHalf) {
  const Instance inst = testing::on_line({0, 1}, 1, {{{0, 1}, 0}});
  const FairInstance finst(inst, {ratio(1, 2), ratio(1, 2)});
  const std::vector<std::vector<int>> H = {{0}, {1}};
  const auto res = solve_restricted(finst, 0, H);
  ASSERT_TRUE(std::holds_alternative<Distribution>(res));
  const auto& dist = std::get<Distribution>(res);
  ASSERT_EQ(dist.support.size(), 2u);
  EXPECT_EQ(dist.support[0].second, ratio(1, 2));
  EXPECT_EQ(dist.support[1].second, ratio(1, 2));
}

TEST(SolveFair, ZeroProbabilitiesReduceToColorful) {
  const Instance inst = testing::triangle_leaf();
  const FairInstance finst(inst, std::vector<Rational>(4));
  FairOptions opts;
  opts.enumerate_when_gamma_ge_k = false;
  const auto sol = solve_fair(finst, opts);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->distribution.support.size(), 1u);
  EXPECT_EQ(sol->distribution.radius, 0);
}

TEST(SolveFair, SinglePoint) {
  const FairInstance finst(testing::on_line({0}, 1, {{{0}, 1}}), {Rational(1)});
  const auto sol = solve_fair(finst);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->distribution.radius, 0);
  ASSERT_EQ(sol->distribution.support.size(), 1u);
  EXPECT_EQ(sol->distribution.support[0].first, (std::vector<int>{0}));
  EXPECT_EQ(sol->distribution.support[0].second, 1);
}

TEST(SolveFair, TwoPointsNeedRadiusTwo) {
  const Instance inst = testing::on_line({0, 2}, 1, {{{0, 1}, 0}});
  const FairInstance finst(inst, {ratio(3, 4), ratio(3, 4)});
  for (bool enumerate : {true, false}) {
    FairOptions opts;
    opts.enumerate_when_gamma_ge_k = enumerate;
    const auto sol = solve_fair(finst, opts);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->distribution.radius, 2);
    EXPECT_TRUE(distribution_violations(finst, sol->distribution).empty());
    EXPECT_FALSE(sol->trace.front().radius == 0 && sol->trace.front().feasible);
  }
}

TEST(SolveFair, RandomInstancesWithinFactorFour) {
  for (int seed = 1; seed <= 8; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n = 7;
    spec.k = 2;
    spec.gamma = 1;
    const FairInstance finst = gen_random_fair(spec);
    const auto sol = solve_fair(finst);
    const auto opt = brute_force_fair(finst);
    ASSERT_TRUE(sol && opt);
    EXPECT_TRUE(distribution_violations(finst, sol->distribution).empty());
    EXPECT_GE(sol->distribution.radius, opt->radius);
    EXPECT_LE(sol->distribution.radius, 4 * opt->radius);
    EXPECT_LE(static_cast<int>(sol->distribution.support.size()), finst.base().size() + 1);
  }
}

TEST(Violations, ReportsSumAndCoverage) {
  const Instance inst = testing::on_line({0, 1}, 1, {{{0, 1}, 0}});
  const FairInstance finst(inst, {ratio(1, 2), ratio(1, 2)});
  Distribution d{{{{0}, ratio(9, 10)}}, Rational(0)};
  const auto problems = distribution_violations(finst, d);
  ASSERT_EQ(problems.size(), 2u);
  EXPECT_EQ(problems[0], "probabilities do not sum to 1");
  EXPECT_NE(problems[1].find("point 1 "), std::string::npos);
}

TEST(Sample, SingleSupport) {
  const Distribution d{{{{3, 4}, Rational(1)}}, Rational(0)};
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_EQ(sample(d, s), (std::vector<int>{3, 4}));
}

TEST(Sample, FrequenciesWithinThreeSigma) {
  const Distribution half{{{{0}, ratio(1, 2)}, {{1}, ratio(1, 2)}}, Rational(0)};
  const Distribution third{{{{0}, ratio(1, 3)}, {{1}, ratio(2, 3)}}, Rational(0)};
  const long N = 1 << 16;
  long first_half = 0;
  long first_third = 0;
  for (long s = 0; s < N; ++s) {
    first_half += sample(half, s)[0] == 0;
    first_third += sample(third, s)[0] == 0;
  }
  // sigma = sqrt(N p (1 - p)).
  EXPECT_LE(std::abs(first_half - N / 2), 3 * 128);
  EXPECT_LE(std::abs(3 * first_third - N), 3 * 3 * 121);
}

}  // namespace
}  // namespace ckc
