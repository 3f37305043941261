#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "osp/growth.hpp"
#include "osp/resolution.hpp"

using osp::BigInt;
using osp::ProxyMode;
using osp::Quiver;

TEST(ProjCover, DInfinityTable) {
  EXPECT_EQ(osp::proj_cover_structure(Quiver::DInfinity, 0).middle(), (std::vector<int>{2}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::DInfinity, 1).middle(), (std::vector<int>{2}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::DInfinity, 2).middle(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::DInfinity, 7).middle(), (std::vector<int>{6, 8}));
  const auto p = osp::proj_cover_structure(Quiver::DInfinity, 5);
  EXPECT_EQ(p.head, 5);
  EXPECT_EQ(p.layers[0], std::vector<int>{5});
  EXPECT_EQ(p.layers[2], std::vector<int>{5});
  EXPECT_THROW((void)osp::proj_cover_structure(Quiver::DInfinity, -1), std::invalid_argument);
}

TEST(ProjCover, AInfinityInfinityTable) {
  EXPECT_EQ(osp::proj_cover_structure(Quiver::AInfinityInfinity, 0).middle(), (std::vector<int>{1, -1}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::AInfinityInfinity, 3).middle(), (std::vector<int>{2, 4}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::AInfinityInfinity, -3).middle(), (std::vector<int>{-2, -4}));
  EXPECT_EQ(osp::proj_cover_structure(Quiver::AInfinityInfinity, 1).middle(), (std::vector<int>{0, 2}));
}

// The D_infinity Ext-quiver is symmetric: j is in the middle of P(i) iff i is in the middle of P(j).
TEST(ProjCover, DInfinityAdjacencySymmetric) {
  for (int i = 0; i < 40; ++i)
    for (int j : osp::proj_cover_structure(Quiver::DInfinity, i).middle()) {
      const auto back = osp::proj_cover_structure(Quiver::DInfinity, j).middle();
      EXPECT_NE(std::find(back.begin(), back.end(), i), back.end()) << i << " " << j;
    }
}

TEST(Summands, Examples) {
  EXPECT_EQ(osp::resolution_summands(0), std::vector<int>{0});
  EXPECT_EQ(osp::resolution_summands(1), std::vector<int>{2});
  EXPECT_EQ(osp::resolution_summands(2), (std::vector<int>{3, 1}));
  EXPECT_EQ(osp::resolution_summands(3), (std::vector<int>{4, 2}));
  EXPECT_EQ(osp::resolution_summands(4), (std::vector<int>{5, 3, 0}));
  EXPECT_EQ(osp::resolution_summands(6), (std::vector<int>{7, 5, 3, 1}));
  EXPECT_THROW((void)osp::resolution_summands(-1), std::invalid_argument);
}

TEST(Summands, CountFormula) {
  for (int d = 1; d <= 200; ++d) EXPECT_EQ(osp::resolution_summands(d).size(), static_cast<std::size_t>(d / 2 + 1)) << d;
}

// Each P_{d+1} summand is reached from P_d through one arrow, and nothing repeats.
TEST(Summands, ConsistentWithQuiverWalk) {
  for (int d = 0; d < 60; ++d) {
    std::set<int> reachable;
    for (int i : osp::resolution_summands(d))
      for (int j : osp::proj_cover_structure(Quiver::DInfinity, i).middle()) reachable.insert(j);
    const auto next = osp::resolution_summands(d + 1);
    EXPECT_EQ(std::set<int>(next.begin(), next.end()).size(), next.size()) << d;
    for (int j : next) EXPECT_TRUE(reachable.count(j)) << "d=" << d + 1 << " summand " << j;
  }
}

TEST(SummandCounts, StepsAreZeroOrOne) {
  const auto counts = osp::summand_count_sequence(6, 100);
  ASSERT_EQ(counts.size(), 101u);
  EXPECT_EQ(counts[0], 1);
  for (std::size_t d = 1; d + 1 < counts.size(); ++d) {
    const BigInt step = counts[d + 1] - counts[d];
    EXPECT_TRUE(step == 0 || step == 1) << d;
  }
  EXPECT_EQ(osp::summand_count_sequence(5, 6), (std::vector<BigInt>{1, 1, 2, 2, 3, 3, 4}));
}

TEST(Proxy, Examples) {
  const osp::TrivialResolution res(6);
  EXPECT_EQ(res.term(0).proxy_lower, 1);
  EXPECT_EQ(res.term(1).proxy_lower, 36);
  EXPECT_EQ(res.term(2).proxy_lower, res.bounds(3).lower + res.bounds(1).lower);
  EXPECT_EQ(res.term(2).proxy_lower, 140 + 5);
  for (int d = 0; d <= 30; ++d) EXPECT_EQ(res.term(d).proxy_upper, res.term(d).proxy_lower << 12) << d;
  EXPECT_EQ(osp::resolution_term(6, 4).summands, (std::vector<int>{5, 3, 0}));
}

TEST(Proxy, DepthGuard) {
  EXPECT_THROW((void)osp::dim_proxy_sequence(6, 19, ProxyMode::Lower), std::invalid_argument);
  EXPECT_EQ(osp::dim_proxy_sequence(6, 20, ProxyMode::Lower).size(), 21u);
  EXPECT_EQ(osp::min_proxy_depth(7), 20);
}

TEST(Proxy, ExactPolynomialPerResidueClass) {
  for (int k = 3; k <= 9; ++k) {
    const auto seq = osp::dim_proxy_sequence(k, 80, ProxyMode::Lower);
    const auto degs = osp::degrees_by_residue(seq);
    ASSERT_EQ(degs.size(), 4u);
    for (const auto& [r, deg] : degs) EXPECT_EQ(deg, k) << "k=" << k << " class " << r;
  }
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream os;
  osp::write_resolution_csv(os, osp::TrivialResolution(6).terms(2));
  EXPECT_EQ(os.str(),
            "d,count,proxy_lower,proxy_upper\n"
            "0,1,1,4096\n"
            "1,1,36,147456\n"
            "2,2,145,593920\n");
}
