#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <tuple>

#include "oracles.hpp"
#include "wcap/bench.hpp"
#include "wcap/error.hpp"
#include "wcap/io.hpp"

using namespace wcap;

namespace {

RunRecord rec(std::string instance, std::string algo, RunStatus status, std::optional<Cost> cost, std::int64_t ms = 5,
              std::uint64_t seed = 1) {
  return {std::move(instance), std::move(algo), seed, status, cost, ms, 1000};
}

Cost fraction_at(const std::vector<ProfilePoint>& points, const std::string& algo, const Cost& tau) {
  for (const auto& p : points) {
    if (p.algo == algo && p.tau == tau) return p.fraction;
  }
  ADD_FAILURE() << "missing point " << algo << " " << tau;
  return Cost(-1);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("wcap_bench_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(RecordsCsv, RoundTrip) {
  const std::vector<RunRecord> records{rec("a", "gwc", RunStatus::Ok, Cost::parse("2.5")),
                                       rec("a", "exact", RunStatus::Timeout, Cost(3), 60000, 4),
                                       rec("b", "mst+ls3", RunStatus::Infeasible, std::nullopt),
                                       rec("b", "smc", RunStatus::MemLimit, std::nullopt),
                                       rec("c", "gwc", RunStatus::Invalid, std::nullopt)};
  const auto text = write_records_csv(records);
  EXPECT_EQ(text.substr(0, text.find('\n')), kResultsHeader);
  EXPECT_EQ(read_records_csv(text), records);
  EXPECT_THROW(read_records_csv("instance,algo\n"), Error);
  EXPECT_THROW(read_records_csv(std::string(kResultsHeader) + "\na,gwc,1,ok\n"), Error);
  EXPECT_THROW(read_records_csv(std::string(kResultsHeader) + "\na,gwc,1,done,1,1,1\n"), Error);
  EXPECT_THROW(write_records_csv({rec("a,b", "gwc", RunStatus::Ok, Cost(1))}), Error);
}

TEST(GeometricMean, Values) {
  EXPECT_DOUBLE_EQ(geometric_mean({4.0}), 4.0);
  EXPECT_NEAR(geometric_mean({1.0, 100.0}), 10.0, 1e-12);
  EXPECT_NEAR(geometric_mean({2.0, 8.0, 4.0}), 4.0, 1e-12);
  EXPECT_THROW(geometric_mean({}), Error);
  EXPECT_THROW(geometric_mean({1.0, 0.0}), Error);
  EXPECT_THROW(geometric_mean({-1.0}), Error);
}

TEST(PerformanceProfile, SingleAlgorithmIsAlwaysOne) {
  const std::vector<RunRecord> records{rec("a", "gwc", RunStatus::Ok, Cost(7)), rec("b", "gwc", RunStatus::Ok, Cost(3))};
  for (const auto& p : performance_profile(records, ProfileMetric::Cost, default_tau_grid())) {
    EXPECT_EQ(p.fraction, Cost(1));
  }
  EXPECT_EQ(default_tau_grid().size(), 201U);
  EXPECT_EQ(default_tau_grid().front(), Cost(1));
  EXPECT_EQ(default_tau_grid().back(), Cost(3));
}

TEST(PerformanceProfile, RatioThreshold) {
  const std::vector<RunRecord> records{rec("a", "x", RunStatus::Ok, Cost(10)), rec("a", "y", RunStatus::Ok, Cost(12))};
  const std::vector<Cost> taus{Cost(1), Cost::parse("1.19"), Cost::parse("1.2")};
  const auto pts = performance_profile(records, ProfileMetric::Cost, taus);
  EXPECT_EQ(fraction_at(pts, "x", Cost(1)), Cost(1));
  EXPECT_EQ(fraction_at(pts, "y", Cost(1)), Cost(0));
  EXPECT_EQ(fraction_at(pts, "y", Cost::parse("1.19")), Cost(0));
  EXPECT_EQ(fraction_at(pts, "y", Cost::parse("1.2")), Cost(1));
}

TEST(PerformanceProfile, FailuresNeverCount) {
  std::vector<RunRecord> records;
  for (const char* inst : {"a", "b", "c", "d"}) records.push_back(rec(inst, "x", RunStatus::Ok, Cost(5)));
  records.push_back(rec("a", "y", RunStatus::Ok, Cost(5)));
  records.push_back(rec("b", "y", RunStatus::Ok, Cost(5)));
  records.push_back(rec("c", "y", RunStatus::Ok, Cost(5)));
  records.push_back(rec("d", "y", RunStatus::Timeout, Cost(4)));
  const auto pts = performance_profile(records, ProfileMetric::Cost, default_tau_grid());
  EXPECT_EQ(fraction_at(pts, "y", Cost(3)), Cost::parse("0.75"));
  EXPECT_EQ(fraction_at(pts, "x", Cost(1)), Cost(1));
  EXPECT_THROW(performance_profile({}, ProfileMetric::Cost, default_tau_grid()), Error);
}

TEST(PerformanceProfile, SeedsAreSeparateInstancesAndCurvesAreMonotone) {
  std::vector<RunRecord> records;
  std::mt19937_64 rng(91);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const char* algo : {"p", "q", "r"}) {
      const auto c = std::uniform_int_distribution<int>(10, 30)(rng);
      const auto status = std::bernoulli_distribution(0.2)(rng) ? RunStatus::Timeout : RunStatus::Ok;
      records.push_back(rec("only", algo, status, Cost(c), c, seed));
    }
  }
  for (const auto metric : {ProfileMetric::Cost, ProfileMetric::Time, ProfileMetric::Memory}) {
    const auto pts = performance_profile(records, metric, default_tau_grid());
    EXPECT_EQ(pts.size(), 3U * 201U);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].algo != pts[i - 1].algo) continue;
      EXPECT_LE(pts[i - 1].fraction, pts[i].fraction);
      EXPECT_EQ(pts[i].fraction.den() % 5 == 0 || pts[i].fraction.den() == 1, true);
    }
  }
  const auto csv = write_profile_csv(performance_profile(records, ProfileMetric::Cost, {Cost(1)}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "algo,tau,fraction");
}

TEST(SolveInstance, Statuses) {
  const auto c4 = oracle::cycle(4);
  const auto ok = solve_instance("c4", c4, oracle::unit_complete_links(c4), "exact", 3, 60.0);
  EXPECT_EQ(ok.record.status, RunStatus::Ok);
  EXPECT_EQ(ok.record.cost, Cost(2));
  EXPECT_EQ(ok.record.seed, 3U);
  EXPECT_GT(ok.record.peak_kb, 0);
  ASSERT_TRUE(ok.solution.has_value());

  for (const char* algo : {"gwc", "mst", "smc", "mst+ls3", "exact"}) {
    EXPECT_EQ(solve_instance("e", c4, LinkGraph(4, {}), algo, 1, 60.0).record.status, RunStatus::Infeasible) << algo;
  }
  EXPECT_EQ(solve_instance("u", c4, oracle::unit_complete_links(c4), "simplex", 1, 60.0).record.status,
            RunStatus::Invalid);
  EXPECT_TRUE(is_known_algorithm("mst+ls5"));
  EXPECT_FALSE(is_known_algorithm("mst+ls0"));
}

TEST(SolveInstance, ExactTimesOutOnLargeCycle) {
  const auto ring = oracle::cycle(5000);
  std::vector<RawLink> raw;
  for (Vertex v = 0; v < 5000; ++v) raw.push_back({v, (v + 1) % 5000, Cost(1)});
  raw.push_back({0, 2500, Cost(1)});
  const auto lg = build_link_graph(ring, raw);
  const auto out = solve_instance("ring", ring, lg, "exact", 1, 0.001);
  EXPECT_EQ(out.record.status, RunStatus::Timeout);
  ASSERT_TRUE(out.solution.has_value());
  EXPECT_TRUE(out.solution->valid);
}

TEST(RunSolve, FilesAndBadInput) {
  const auto dir = scratch_dir("run_solve");
  const auto c4 = oracle::cycle(4);
  write_file(dir / "c.txt", write_cactus(c4));
  std::vector<RawLink> raw;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) raw.push_back({u, v, Cost(1)});
  }
  write_file(dir / "l.txt", write_links(raw));
  write_file(dir / "bad.txt", "not a cactus\n");
  SolveConfig cfg{"", (dir / "c.txt").string(), "", (dir / "l.txt").string(), "gwc", 1, 60.0};
  const auto out = run_solve(cfg);
  EXPECT_EQ(out.record.status, RunStatus::Ok);
  EXPECT_EQ(out.record.instance, cfg.cactus_path);
  EXPECT_EQ(out.record.cost, Cost(2));
  cfg.cactus_path = (dir / "bad.txt").string();
  EXPECT_EQ(run_solve(cfg).record.status, RunStatus::Invalid);
  cfg.cactus_path = (dir / "missing.txt").string();
  EXPECT_EQ(run_solve(cfg).record.status, RunStatus::Invalid);
}

TEST(Grid, ParseAndRun) {
  const auto dir = scratch_dir("grid");
  write_file(dir / "c.txt", write_cactus(oracle::cycle(5)));
  const std::string json = R"({
    "time_limit": 10, "seeds": 2, "algorithms": ["mst", "gwc", "exact"],
    "instances": [
      {"id": "ring6", "generate": "cycle", "n": 6, "costs": "u9"},
      {"id": "cac", "generate": "cactus", "n": 9, "cycles": 2, "costs": "u99", "scale": true},
      {"id": "file5", "cactus": "c.txt", "costs": "u2"}
    ]})";
  const auto grid = parse_grid(json, dir.string());
  EXPECT_EQ(grid.seeds, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_DOUBLE_EQ(grid.time_limit_s, 10.0);
  ASSERT_EQ(grid.instances.size(), 3U);
  EXPECT_EQ(grid.instances[2].cactus_path, (dir / "c.txt").string());
  EXPECT_TRUE(grid.instances[1].costs->scale_to_unit);

  const auto records = run_grid(grid);
  ASSERT_EQ(records.size(), 3U * 3U * 2U);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& a = records[i - 1];
    const auto& b = records[i];
    EXPECT_TRUE(std::tie(a.instance, a.algo, a.seed) < std::tie(b.instance, b.algo, b.seed));
  }
  for (const auto& r : records) {
    EXPECT_EQ(r.status, RunStatus::Ok);
    ASSERT_TRUE(r.cost.has_value());
    for (const auto& e : records) {
      if (e.instance == r.instance && e.seed == r.seed && e.algo == "exact") EXPECT_LE(*e.cost, *r.cost);
    }
  }
  // same seed, same instance
  const auto [c1, l1] = materialize(grid.instances[1], 7);
  const auto [c2, l2] = materialize(grid.instances[1], 7);
  EXPECT_EQ(write_cactus(c1), write_cactus(c2));

  EXPECT_THROW(parse_grid(R"({"algorithms": ["bogus"], "instances": []})"), Error);
  EXPECT_THROW(parse_grid(R"({"algorithms": ["gwc"], "instances": [{"id": "x", "generate": "cycle", "n": 5}]})"), Error);
  EXPECT_THROW(parse_grid("{"), Error);
}
