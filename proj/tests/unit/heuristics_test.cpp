#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wcap/dynamic_cactus.hpp"
#include "wcap/error.hpp"
#include "wcap/heuristics.hpp"

using namespace wcap;

TEST(Gwc, SingleLink) {
  const auto c = oracle::star(2);
  const auto lg = oracle::links_from(c, {{0, 1, 5}});
  const auto s = gwc(c, lg);
  EXPECT_EQ(s.link_ids, (std::vector<LinkId>{0}));
  EXPECT_EQ(s.total_cost, Cost(5));
  EXPECT_EQ(s.meta.algorithm, "gwc");
}

TEST(Gwc, UnitEightCycleAndStar) {
  const auto c8 = oracle::cycle(8);
  EXPECT_EQ(gwc(c8, oracle::unit_complete_links(c8)).total_cost, Cost(4));
  const auto s5 = oracle::star(5);
  const auto s = gwc(s5, oracle::unit_complete_links(s5));
  EXPECT_EQ(s.total_cost, Cost(2));
  for (const auto id : s.link_ids) {
    const auto& l = oracle::unit_complete_links(s5).link(id);
    EXPECT_NE(l.u, 0);  // leaf-leaf links only
  }
}

TEST(Gwc, TieBreaksOnRatioThenCostThenId) {
  // Pendant vertex 0 on the triangle 1-2-3. First round: (2,3) and (1,2)
  // both cover 2 cuts at cost 1; the lower id (2,3) wins over (0,2) at 2/3.
  // Then 0-1-{2,3} is a path: (1,2) and (0,1) at ratio 1 and cost 1 beat
  // (0,2) at ratio 1 and cost 2.
  const auto c = oracle::small_example();
  const auto lg = oracle::links_from(c, {{2, 3, 1}, {0, 2, 2}, {0, 3, 2}, {1, 2, 1}, {1, 3, 1}, {0, 1, 1}});
  DynamicCactus dc(c);
  EXPECT_EQ(dc.covered_cuts(2, 3), 2U);
  EXPECT_EQ(dc.covered_cuts(0, 2), 3U);
  const auto s = gwc(c, lg);
  EXPECT_EQ(s.link_ids, (std::vector<LinkId>{0, 3, 5}));
  EXPECT_EQ(s.total_cost, Cost(3));
}

TEST(Kruskal, Basics) {
  const auto c4 = oracle::cycle(4);
  EXPECT_EQ(kruskal_msf(oracle::unit_complete_links(c4)).size(), 3U);
  const auto c = oracle::cycle(3);
  const auto lg = oracle::links_from(c, {{0, 1, 3}, {1, 2, 1}, {0, 2, 2}});
  EXPECT_EQ(kruskal_msf(lg), (std::vector<LinkId>{1, 2}));
  // disconnected link graph: one tree per component
  const auto c6 = oracle::cycle(6);
  const auto two = oracle::links_from(c6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}});
  EXPECT_EQ(kruskal_msf(two).size(), 4U);
}

TEST(MstConnect, SingleLinkAndFourCycle) {
  const auto c = oracle::star(2);
  EXPECT_EQ(mst_connect(c, oracle::links_from(c, {{0, 1, 5}})).total_cost, Cost(5));

  const auto c4 = oracle::cycle(4);
  const auto lg = oracle::unit_complete_links(c4);
  EXPECT_EQ(kruskal_msf(lg), (std::vector<LinkId>{0, 1, 2}));  // the star at vertex 0
  const auto s = mst_connect(c4, lg);
  EXPECT_EQ(s.total_cost, Cost(3));
  EXPECT_EQ(*oracle::optimum(c4, lg), Cost(2));
}

TEST(MstConnect, InfeasibleWhenForestDoesNotCover) {
  const auto c = oracle::cycle(4);
  const auto lg = oracle::links_from(c, {{0, 1, 1}});
  EXPECT_THROW(mst_connect(c, lg), Error);
}

TEST(Smc, Examples) {
  const auto c = oracle::star(2);
  EXPECT_EQ(smc(c, oracle::links_from(c, {{0, 1, 5}})).total_cost, Cost(5));
  const auto s5 = oracle::star(5);
  const auto s = smc(s5, oracle::unit_complete_links(s5));
  EXPECT_LE(s.size(), 4U);
  EXPECT_GE(s.total_cost, Cost(2));
  try {
    smc(oracle::cycle(4), LinkGraph(4, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Infeasible);
  }
  EXPECT_THROW(gwc(oracle::cycle(4), LinkGraph(4, {})), Error);
}

TEST(Heuristics, ValidAndDeterministicOnRandomInstances) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_cactus(rng, std::uniform_int_distribution<int>(2, 14)(rng));
    for (int seed = 0; seed < 5; ++seed) {
      const auto lg = oracle::random_links(rng, c, 0.5, seed % 2 == 0 ? 9 : 100000);
      const auto sides = oracle::min_cut_sides(c);
      const auto msf = kruskal_msf(lg);
      for (const auto& s : {gwc(c, lg), mst_connect(c, lg), smc(c, lg)}) {
        EXPECT_TRUE(s.valid);
        ASSERT_TRUE(oracle::covers_all(sides, lg, s.link_ids)) << s.meta.algorithm;
      }
      EXPECT_LE(mst_connect(c, lg).total_cost, total_cost(lg, msf));
      EXPECT_EQ(gwc(c, lg).link_ids, gwc(c, lg).link_ids);
      EXPECT_EQ(mst_connect(c, lg).link_ids, mst_connect(c, lg).link_ids);
      EXPECT_EQ(smc(c, lg).link_ids, smc(c, lg).link_ids);
    }
  }
}

TEST(Gwc, CoverageAddsUpToCutCount) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_cactus(rng, 12);
    const auto lg = oracle::random_links(rng, c, 0.6, 99);
    const auto s = gwc(c, lg);
    EXPECT_LE(s.size(), c.min_cut_count());
    DynamicCactus dc(c);
    std::uint64_t sum = 0;
    for (const auto id : s.link_ids) sum += dc.add_link_and_contract(lg.link(id));
    EXPECT_EQ(sum, c.min_cut_count());
  }
}
