#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// min sum c(l) x_l  s.t.  sum_{l crosses cut} x_l >= 1 for every minimum cut,
/// x binary. One column per active link (ascending id), one row per minimum
/// cut in enumerate_min_cuts() order.
struct CutCoverModel {
  std::vector<LinkId> columns;
  std::vector<Cost> costs;
  std::vector<MinCutRef> cuts;          ///< cut of each row
  std::vector<std::vector<int>> rows;   ///< column indices per row, ascending
};

/// Throws InfeasibleRow if a cut is crossed by no link. With
/// `drop_duplicate_rows`, rows with identical column sets are kept once.
CutCoverModel build_cut_cover_program(const CactusGraph& cactus, const LinkGraph& links,
                                      bool drop_duplicate_rows = false);

/// CPLEX LP text (Minimize / Subject To / Binaries / End). Byte-deterministic.
std::string export_lp(const CutCoverModel& model);

enum class ExactStatus { Optimal, Timeout };

struct ExactOptions {
  double time_limit_s = std::numeric_limits<double>::infinity();
  bool improve_warm_start = true;  ///< run LS(3) on the MST-Connect incumbent
  bool drop_duplicate_rows = false;
};

struct ExactResult {
  ExactStatus status = ExactStatus::Optimal;
  Solution solution;      ///< optimal, or best found on timeout
  Cost lower_bound;       ///< global bound (equals solution cost when optimal)
  Cost root_bound;        ///< bound at the root node
  Cost warm_start_cost;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound over the cut-cover program. Throws Infeasible when no
/// augmentation exists.
ExactResult solve_exact(const CactusGraph& cactus, const LinkGraph& links, const ExactOptions& options = {});

/// Exhaustive include/exclude search over all link subsets with cost and
/// coverage pruning. Independent of build_cut_cover_program. Throws TooLarge
/// above 48 links or 64 cuts and Infeasible when no subset covers all cuts.
Cost brute_force_optimal(const CactusGraph& cactus, const LinkGraph& links);

}  // namespace wcap
