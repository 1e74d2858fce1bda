#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/cost.hpp"
#include "wcap/generators.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

enum class RunStatus { Ok, Timeout, Infeasible, MemLimit, Invalid };

std::string_view to_string(RunStatus status);
RunStatus parse_run_status(std::string_view text);

struct RunRecord {
  std::string instance;
  std::string algo;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Ok;
  std::optional<Cost> cost;  ///< set for ok and for timeouts with an incumbent
  std::int64_t time_ms = 0;
  std::int64_t peak_kb = 0;  ///< process peak resident set, 0 if unknown

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr std::string_view kResultsHeader = "instance,algo,seed,status,cost,time_ms,peak_kb";

/// CSV with kResultsHeader. Instance and algorithm ids must not contain
/// commas, quotes or line breaks (InvalidParams).
std::string write_records_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::string_view text);

/// Peak resident set size of this process in KiB, 0 when unavailable.
std::int64_t peak_rss_kb();

/// "gwc", "mst", "smc", "exact" or "mst+lsN" for N >= 1.
bool is_known_algorithm(std::string_view algo);

struct SolveOutcome {
  RunRecord record;
  std::optional<Solution> solution;  ///< the returned (possibly incumbent) solution
};

/// Runs one algorithm with a wall-clock limit and validates the result.
/// Failures end up in record.status; nothing is thrown for solver errors.
SolveOutcome solve_instance(std::string instance, const CactusGraph& cactus, const LinkGraph& links,
                            std::string_view algo, std::uint64_t seed, double time_limit_s);

struct SolveConfig {
  std::string instance;  ///< defaults to the cactus path
  std::string cactus_path;
  std::string pi_path;  ///< optional
  std::string links_path;
  std::string algo;
  std::uint64_t seed = 0;
  double time_limit_s = 3600.0;
};

/// Parses the files (not timed) and calls solve_instance(). Unreadable or
/// malformed input yields status invalid.
SolveOutcome run_solve(const SolveConfig& config);

/// exp(mean(log v)). Throws NonPositive for values <= 0 and EmptyInput for
/// an empty list.
double geometric_mean(const std::vector<double>& values);

enum class ProfileMetric { Cost, Time, Memory };
ProfileMetric parse_profile_metric(std::string_view name);

struct ProfilePoint {
  std::string algo;
  Cost tau;
  Cost fraction;

  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

/// 1.00, 1.01, ..., 3.00.
std::vector<Cost> default_tau_grid();

/// Instances are (instance, seed) pairs. Per instance, best is the minimum
/// metric over ok records; each algorithm counts an instance at tau if it has
/// an ok record with metric <= tau * best. The denominator is the number of
/// distinct instances over all records. Time and memory below 1 count as 1.
/// Output is grouped by algorithm (ascending), then tau. Throws EmptyInput.
std::vector<ProfilePoint> performance_profile(const std::vector<RunRecord>& records, ProfileMetric metric,
                                              const std::vector<Cost>& taus);

std::string write_profile_csv(const std::vector<ProfilePoint>& points);

/// One grid entry: either files on disk or a generated instance.
struct GridInstance {
  std::string id;
  // files
  std::string cactus_path;
  std::string pi_path;
  std::string links_path;
  // generated structure: "cycle", "star", "cactus", or empty for a file cactus
  std::string generate;
  int n = 0;
  int cycles = 0;
  // costs drawn per seed when links_path is empty
  std::optional<CostDistribution> costs;
};

struct BenchGrid {
  std::vector<GridInstance> instances;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double time_limit_s = 60.0;
};

/// JSON grid:
///   {"time_limit": 60, "seeds": 5 | [..], "algorithms": [..],
///    "instances": [{"id": .., "cactus": .., "pi": .., "links": ..,
///                   "generate": "cycle"|"star"|"cactus", "n": .., "cycles": ..,
///                   "costs": "u2"|"u9"|"u99"|"u100000", "scale": bool}]}
/// Relative paths are resolved against base_dir. Throws InvalidParams.
BenchGrid parse_grid(std::string_view json_text, const std::string& base_dir = {});

/// Generated structures are seeded with the run seed, as are drawn costs.
std::pair<CactusGraph, LinkGraph> materialize(const GridInstance& instance, std::uint64_t seed);

/// Every instance x seed x algorithm, sorted by (instance, algo, seed).
std::vector<RunRecord> run_grid(const BenchGrid& grid);

}  // namespace wcap
