#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wcap/error.hpp"
#include "wcap/exact.hpp"
#include "wcap/generators.hpp"
#include "wcap/heuristics.hpp"
#include "wcap/local_search.hpp"

using namespace wcap;

TEST(CutCoverModel, Shapes) {
  const auto c = oracle::star(2);
  const auto one = build_cut_cover_program(c, oracle::links_from(c, {{0, 1, 5}}));
  EXPECT_EQ(one.rows.size(), 1U);
  EXPECT_EQ(one.columns.size(), 1U);

  const auto ex = oracle::small_example();
  const auto m = build_cut_cover_program(ex, oracle::unit_complete_links(ex));
  EXPECT_EQ(m.rows.size(), 4U);
  EXPECT_EQ(m.columns.size(), 6U);

  const auto c8 = oracle::cycle(8);
  const auto m8 = build_cut_cover_program(c8, oracle::unit_complete_links(c8));
  EXPECT_EQ(m8.rows.size(), 28U);
  EXPECT_EQ(m8.columns.size(), 28U);
}

TEST(CutCoverModel, RowsMatchCutsPair) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_cactus(rng, std::uniform_int_distribution<int>(2, 12)(rng));
    const auto lg = oracle::random_links(rng, c, 0.5, 9);
    const auto m = build_cut_cover_program(c, lg);
    const auto cuts = enumerate_min_cuts(c);
    ASSERT_EQ(m.cuts, cuts);
    for (std::size_t r = 0; r < cuts.size(); ++r) {
      std::vector<int> expect;
      for (std::size_t col = 0; col < m.columns.size(); ++col) {
        const auto& l = lg.link(m.columns[col]);
        if (cuts_pair(c, cuts[r], l.u, l.v)) expect.push_back(static_cast<int>(col));
      }
      ASSERT_EQ(m.rows[r], expect);
    }
  }
}

TEST(CutCoverModel, InfeasibleRowAndDuplicates) {
  const auto c4 = oracle::cycle(4);
  try {
    build_cut_cover_program(c4, oracle::links_from(c4, {{0, 1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleRow);
  }
  // a single chord: rows of cuts it crosses are identical
  const auto m = build_cut_cover_program(c4, oracle::unit_complete_links(c4), true);
  EXPECT_LE(m.rows.size(), 6U);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < m.rows.size(); ++j) EXPECT_NE(m.rows[i], m.rows[j]);
  }
}

TEST(ExportLp, Format) {
  const auto c = oracle::star(2);
  const auto text = export_lp(build_cut_cover_program(c, oracle::links_from(c, {{0, 1, 5}})));
  EXPECT_EQ(text,
            "\\ cut-cover program: 1 cuts, 1 links\n"
            "Minimize\n obj: 5 x0\n"
            "Subject To\n c0: x0 >= 1\n"
            "Binaries\n x0\n"
            "End\n");
  const auto empty = export_lp(CutCoverModel{});
  EXPECT_NE(empty.find("Subject To\nBinaries\nEnd\n"), std::string::npos);
  const auto ex = oracle::small_example();
  const auto m = build_cut_cover_program(ex, oracle::unit_complete_links(ex));
  EXPECT_EQ(export_lp(m), export_lp(m));
}

TEST(SolveExact, SmallExamples) {
  const auto c = oracle::star(2);
  EXPECT_EQ(solve_exact(c, oracle::links_from(c, {{0, 1, 5}})).solution.total_cost, Cost(5));
  const auto c8 = oracle::cycle(8);
  const auto r = solve_exact(c8, oracle::unit_complete_links(c8));
  EXPECT_EQ(r.status, ExactStatus::Optimal);
  EXPECT_EQ(r.solution.total_cost, Cost(4));
  EXPECT_EQ(r.lower_bound, Cost(4));
  EXPECT_THROW(solve_exact(oracle::cycle(4), LinkGraph(4, {})), Error);
}

TEST(BruteForceOptimal, Examples) {
  const auto c = oracle::star(2);
  EXPECT_EQ(brute_force_optimal(c, oracle::links_from(c, {{0, 1, 7}})), Cost(7));
  EXPECT_EQ(brute_force_optimal(oracle::cycle(4), oracle::unit_complete_links(oracle::cycle(4))), Cost(2));
  EXPECT_EQ(brute_force_optimal(oracle::star(5), oracle::unit_complete_links(oracle::star(5))), Cost(2));
  const auto big = oracle::cycle(11);
  EXPECT_THROW(brute_force_optimal(big, oracle::unit_complete_links(big)), Error);
}

TEST(BruteForceOptimal, MatchesPlainEnumeration) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = oracle::random_cactus(rng, std::uniform_int_distribution<int>(2, 7)(rng));
    const auto lg = oracle::random_links(rng, c, 0.5, 9);
    if (lg.size() > 16) continue;
    EXPECT_EQ(brute_force_optimal(c, lg), *oracle::optimum(c, lg));
  }
}

TEST(SolveExact, MatchesBruteForceAndBeatsHeuristics) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = oracle::random_cactus(rng, std::uniform_int_distribution<int>(2, 9)(rng));
    const auto lg = oracle::random_links(rng, c, 0.45, trial % 3 == 0 ? 2 : 99);
    if (lg.size() > 40) continue;
    const auto r = solve_exact(c, lg);
    ASSERT_EQ(r.status, ExactStatus::Optimal);
    ASSERT_EQ(r.solution.total_cost, brute_force_optimal(c, lg)) << trial;
    ASSERT_TRUE(validate_solution(c, lg, r.solution));
    EXPECT_LE(r.root_bound, r.solution.total_cost);
    EXPECT_LE(r.solution.total_cost, r.warm_start_cost);
    for (const auto& h : {gwc(c, lg), mst_connect(c, lg), smc(c, lg)}) EXPECT_LE(r.solution.total_cost, h.total_cost);
  }
}

TEST(SolveExact, FractionalCosts) {
  const auto c = oracle::cycle(5);
  const auto raw = generate_raw_links(c, CostDistribution::parse("u99", true), 3);
  const auto lg = build_link_graph(c, raw);
  EXPECT_EQ(solve_exact(c, lg).solution.total_cost, brute_force_optimal(c, lg));
}

TEST(SolveExact, TimeoutKeepsIncumbent) {
  const auto c = generate_special(SpecialKind::Cycle, 60);
  const auto lg = generate_link_costs(c, CostDistribution::parse("u2"), 1);
  ExactOptions options;
  options.time_limit_s = 0.0;
  const auto r = solve_exact(c, lg, options);
  EXPECT_EQ(r.status, ExactStatus::Timeout);
  EXPECT_TRUE(validate_solution(c, lg, r.solution));
  EXPECT_EQ(r.solution.total_cost, r.warm_start_cost);
  EXPECT_LE(r.lower_bound, r.solution.total_cost);
}
