#include <random>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "osp/szops.hpp"

using osp::HalfInt;
using osp::Quiver;
using osp::Weight;

namespace {

// lambda^(i) of the trivial block, i >= 1
Weight trivial_orbit_closed_form(int k, long i) {
  const int m = osp::rank_of(k);
  std::vector<HalfInt> c(static_cast<std::size_t>(m + 1), HalfInt{});
  if (i >= 1) {
    c[0] = HalfInt(k % 2 == 0 ? 2 * m + i - 3 : 2 * m + i - 2);
    c[1] = HalfInt(i - 1);
  } else {
    c[0] = HalfInt(i);
    c[1] = HalfInt(-i);
  }
  return Weight(k, std::move(c));
}

}  // namespace

TEST(APlusMinus, TrivialWeight) {
  for (int k = 4; k <= 12; ++k) {
    const int m = osp::rank_of(k);
    const auto a = osp::a_plus_minus(Weight::zero(k));
    EXPECT_EQ(a.plus, k % 2 == 0 ? 2 * m - 2 : 2 * m - 1) << k;
    EXPECT_EQ(a.minus, 1) << k;
  }
}

TEST(APlusMinus, UnitStepsAlongTheOrbit) {
  for (int k = 4; k <= 9; ++k) {
    const auto orbit = osp::classify_block(Weight::zero(k)).orbit;
    for (long i = 1; i <= 15; ++i) {
      EXPECT_EQ(osp::a_plus_minus(orbit->at(i)).plus, 1) << k << " " << i;
      EXPECT_EQ(osp::a_plus_minus(orbit->at(-i)).minus, 1) << k << " " << -i;
      if (i >= 2) {
        EXPECT_EQ(osp::a_plus_minus(orbit->at(i)).minus, 1) << k << " " << i;
        EXPECT_EQ(osp::a_plus_minus(orbit->at(-i)).plus, 1) << k << " " << -i;
      }
    }
  }
}

TEST(APlusMinus, TypicalThrows) {
  EXPECT_THROW((void)osp::a_plus_minus(Weight(4, {2, 1, 0})), osp::TypicalWeightError);
  EXPECT_THROW((void)osp::hat(Weight(4, {2, 1, 0})), osp::TypicalWeightError);
  EXPECT_THROW((void)osp::check(Weight(4, {2, 1, 0})), osp::TypicalWeightError);
  EXPECT_THROW((void)osp::classify_block(Weight(4, {2, 1, 0})), osp::TypicalWeightError);
}

TEST(HatCheck, Examples) {
  EXPECT_EQ(osp::hat(Weight::zero(6)), Weight(6, {4, 0, 0, 0}));
  EXPECT_EQ(osp::hat(Weight::zero(7)), Weight(7, {5, 0, 0, 0}));
  EXPECT_EQ(osp::hat(Weight::zero(3)), Weight(3, {1, 0}));
  EXPECT_EQ(osp::check(Weight::zero(6)), Weight(6, {-1, 1, 0, 0}));
}

TEST(HatCheck, OffOrbitExamples) {
  // k = 6: shifted (-1|4,2,-1), gamma = delta+eps3, S = {4,2}
  const Weight a(6, {1, 2, 1, -1});
  EXPECT_EQ(*osp::atypicality(a).root, (osp::AtypicalRoot{3, +1}));
  EXPECT_EQ(osp::a_plus_minus(a).plus, 1);
  EXPECT_EQ(osp::a_plus_minus(a).minus, 2);
  EXPECT_EQ(osp::hat(a), Weight(6, {2, 2, 1, 0}));
  EXPECT_EQ(osp::check(a), Weight(6, {-1, 2, 2, -2}));
  // k = 7: shifted (-1/2|9/2,3/2,1/2), gamma = delta-eps3, S = {9/2,3/2}
  const Weight b(7, {2, 2, 0, 0});
  EXPECT_EQ(*osp::atypicality(b).root, (osp::AtypicalRoot{3, -1}));
  EXPECT_EQ(osp::a_plus_minus(b).plus, 1);
  EXPECT_EQ(osp::a_plus_minus(b).minus, 2);
  EXPECT_EQ(osp::hat(b), Weight(7, {3, 2, 0, 0}));
  EXPECT_EQ(osp::check(b), Weight(7, {0, 2, 1, 1}));
}

TEST(HatCheck, MutuallyInverseAlongTheTrivialOrbit) {
  for (int k = 4; k <= 9; ++k) {
    const auto orbit = osp::classify_block(Weight::zero(k)).orbit;
    for (long i = -12; i <= 12; ++i) {
      const Weight w = orbit->at(i);
      EXPECT_EQ(osp::check(osp::hat(w)), w) << k << " " << i;
      EXPECT_EQ(osp::hat(osp::check(w)), w) << k << " " << i;
    }
  }
}

TEST(LambdaZero, Examples) {
  for (int k = 3; k <= 12; ++k) EXPECT_EQ(osp::lambda_zero(Weight::zero(k)), Weight::zero(k)) << k;
  // k = 6, lambda^(1) lies in the trivial block
  EXPECT_EQ(osp::lambda_zero(Weight(6, {4, 0, 0, 0})), Weight::zero(6));
}

TEST(LambdaZero, IdempotentAndPreservesType) {
  std::mt19937 rng(41);
  for (int k = 3; k <= 10; ++k)
    for (int n = 0; n < 200; ++n) {
      const Weight lam = osp::testing::random_atypical_dominant(rng, k);
      const Weight base = osp::lambda_zero(lam);
      ASSERT_TRUE(osp::is_g0_dominant(base)) << lam;
      ASSERT_EQ(osp::atypicality(base).sset, osp::atypicality(lam).sset) << lam;
      ASSERT_EQ(osp::lambda_zero(base), base) << lam;
    }
}

TEST(ClassifyBlock, Examples) {
  EXPECT_EQ(osp::classify_block(Weight::zero(6)).quiver, Quiver::DInfinity);
  EXPECT_EQ(osp::classify_block(Weight::zero(7)).quiver, Quiver::DInfinity);
  // k = 6, shifted (3|3,2,1): S = {2,1}, no zero
  const Weight lam = osp::rho_unshift(Weight(6, {3, 3, 2, 1}));
  const auto block = osp::classify_block(lam);
  EXPECT_EQ(block.quiver, Quiver::AInfinityInfinity);
  EXPECT_FALSE(block.orbit);
  EXPECT_EQ(osp::atypicality(block.base).sset, (std::vector<HalfInt>{2, 1}));
  EXPECT_THROW((void)osp::lambda_i(lam, 1), osp::UndefinedForBlockError);
}

TEST(ClassifyBlock, OddKAlwaysDInfinity) {
  std::mt19937 rng(43);
  for (int k = 3; k <= 11; k += 2)
    for (int n = 0; n < 100; ++n)
      ASSERT_EQ(osp::classify_block(osp::testing::random_atypical_dominant(rng, k)).quiver, Quiver::DInfinity);
}

TEST(LambdaI, TrivialOrbitClosedForms) {
  for (int k = 4; k <= 9; ++k)
    for (long i = -20; i <= 20; ++i) {
      const Weight expect = i == 0 ? Weight::zero(k) : trivial_orbit_closed_form(k, i);
      EXPECT_EQ(osp::lambda_i(Weight::zero(k), i), expect) << "k=" << k << " i=" << i;
    }
}

TEST(LambdaI, OrbitIsInjectiveAndDominant) {
  for (int k = 3; k <= 10; ++k) {
    const auto orbit = osp::classify_block(Weight::zero(k)).orbit;
    std::set<std::string> seen;
    for (long i = -50; i <= 50; ++i) {
      const Weight w = orbit->at(i);
      ASSERT_TRUE(osp::is_g0_dominant(w)) << w;
      ASSERT_EQ(osp::atypicality(w).sset, osp::atypicality(Weight::zero(k)).sset) << w;
      ASSERT_TRUE(seen.insert(w.str()).second) << "repeat at " << i;
    }
    EXPECT_EQ(orbit->cached(), 101u);
  }
}

// hat/check recomputed with the brute-force dominant conjugate
TEST(LambdaI, AgreesWithBruteForceConjugation) {
  for (int k = 4; k <= 9; ++k) {
    const auto orbit = osp::classify_block(Weight::zero(k)).orbit;
    for (long i = 0; i < 10; ++i) {
      const Weight w = orbit->at(i);
      const auto info = osp::atypicality(w);
      const Weight gamma = info.root->vec(k);
      const auto a = osp::a_plus_minus(w);
      EXPECT_EQ(osp::dominant_conjugate_bruteforce(w + a.plus * gamma),  orbit->at(i + 1));
      const Weight v = orbit->at(-i);
      const auto vinfo = osp::atypicality(v);
      EXPECT_EQ(osp::dominant_conjugate_bruteforce(v - osp::a_plus_minus(v).minus * vinfo.root->vec(k)),
                orbit->at(-i - 1));
    }
  }
}

TEST(DInfinityOrbit, ConcurrentExtension) {
  const auto orbit = osp::classify_block(Weight::zero(8)).orbit;
  std::vector<std::thread> pool;
  std::vector<Weight> got(8, Weight::zero(8));
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = orbit->at(t % 2 ? 30 : -30); });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t)
    EXPECT_EQ(got[static_cast<std::size_t>(t)], trivial_orbit_closed_form(8, t % 2 ? 30 : -30));
}
