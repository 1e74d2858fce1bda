#include "wcap/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "wcap/error.hpp"
#include "wcap/heuristics.hpp"
#include "wcap/local_search.hpp"

namespace wcap {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_after(double seconds) {
  if (!std::isfinite(seconds)) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(std::max(0.0, seconds)));
}

bool expired(const std::optional<Clock::time_point>& deadline) {
  return deadline && Clock::now() >= *deadline;
}

// Row index of cycle cut (i, j), i < j, within a cycle of length len.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t len) {
  return i * len - i * (i + 1) / 2 + (j - i - 1);
}

// Returns nullopt if the deadline passed while building.
std::optional<CutCoverModel> build_model(const CactusGraph& cactus, const LinkGraph& links, bool drop_duplicate_rows,
                                         const std::optional<Clock::time_point>& deadline) {
  CutCoverModel model;
  model.cuts = enumerate_min_cuts(cactus);
  model.rows.assign(model.cuts.size(), {});
  std::vector<std::size_t> cycle_offset;
  std::size_t offset = static_cast<std::size_t>(cactus.tree_edge_count());
  for (const auto& c : cactus.cycles()) {
    cycle_offset.push_back(offset);
    offset += c.size() * (c.size() - 1) / 2;
  }

  const BlockTree& blocks = cactus.blocks();
  std::size_t processed = 0;
  for (const LinkId id : links.ids()) {
    if ((++processed & 255U) == 0 && expired(deadline)) return std::nullopt;
    const auto& l = links.link(id);
    const int col = static_cast<int>(model.columns.size());
    model.columns.push_back(id);
    model.costs.push_back(l.cost);
    for (const auto& step : blocks.path(l.u, l.v)) {
      if (!blocks.is_cycle(step.block)) {
        model.rows[static_cast<std::size_t>(step.block)].push_back(col);
        continue;
      }
      const auto c = static_cast<std::size_t>(blocks.cycle_of(step.block));
      const std::size_t len = cactus.cycles()[c].size();
      const auto a = static_cast<std::size_t>(std::min(step.entry_pos, step.exit_pos));
      const auto b = static_cast<std::size_t>(std::max(step.entry_pos, step.exit_pos));
      // Edge positions [a, b) form one arc; a cut crosses the link iff it
      // takes exactly one edge from that arc.
      for (std::size_t i = 0; i < len; ++i) {
        const bool i_inner = i >= a && i < b;
        for (std::size_t j = i + 1; j < len; ++j) {
          const bool j_inner = j >= a && j < b;
          if (i_inner != j_inner) model.rows[cycle_offset[c] + pair_index(i, j, len)].push_back(col);
        }
      }
    }
  }
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    if (model.rows[r].empty()) throw Error(Errc::InfeasibleRow, "minimum cut " + std::to_string(r) + " is crossed by no link");
  }
  if (drop_duplicate_rows) {
    std::vector<std::size_t> order(model.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return model.rows[x] < model.rows[y]; });
    std::vector<char> keep(model.rows.size(), 1);
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (model.rows[order[i]] == model.rows[order[i - 1]]) keep[order[i]] = 0;
    }
    CutCoverModel pruned;
    pruned.columns = std::move(model.columns);
    pruned.costs = std::move(model.costs);
    for (std::size_t r = 0; r < model.rows.size(); ++r) {
      if (!keep[r]) continue;
      pruned.cuts.push_back(model.cuts[r]);
      pruned.rows.push_back(std::move(model.rows[r]));
    }
    return pruned;
  }
  return model;
}

std::string lp_coefficient(const Cost& c) {
  std::string s = c.to_string();
  if (s.find('/') == std::string::npos) return s;
  std::ostringstream os;
  os.precision(17);
  os << c.to_double();
  return os.str();
}

// Scales rational costs to integers over their common denominator.
std::vector<std::int64_t> integer_weights(const std::vector<Cost>& costs, std::int64_t& denominator) {
  __int128 lcm = 1;
  for (const auto& c : costs) {
    const __int128 g = std::gcd(static_cast<std::int64_t>(lcm), c.den());
    lcm = lcm / g * c.den();
    if (lcm > std::numeric_limits<std::int64_t>::max()) throw Error(Errc::Overflow, "cost denominators too large");
  }
  denominator = static_cast<std::int64_t>(lcm);
  std::vector<std::int64_t> w;
  w.reserve(costs.size());
  __int128 total = 0;
  for (const auto& c : costs) {
    const __int128 v = static_cast<__int128>(c.num()) * (lcm / c.den());
    total += v;
    if (total > std::numeric_limits<std::int64_t>::max() / 4) throw Error(Errc::Overflow, "integer cost scale too large");
    w.push_back(static_cast<std::int64_t>(v));
  }
  return w;
}

class BranchAndBound {
 public:
  BranchAndBound(const CutCoverModel& model, std::vector<std::int64_t> weights, std::optional<Clock::time_point> deadline)
      : rows_(model.rows),
        w_(std::move(weights)),
        deadline_(deadline),
        col_rows_(w_.size()),
        cover_(rows_.size(), 0),
        alive_(rows_.size(), 0),
        uncovered_degree_(w_.size(), 0),
        state_(w_.size(), Free),
        mark_(w_.size(), 0),
        uncovered_(static_cast<int>(rows_.size())),
        u_(rows_.size(), 0.0),
        g_(rows_.size(), 0.0),
        rc_(w_.size(), 0.0) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      alive_[r] = static_cast<int>(rows_[r].size());
      for (const int c : rows_[r]) {
        col_rows_[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
        ++uncovered_degree_[static_cast<std::size_t>(c)];
      }
    }
    // Start the multipliers at the dual prices of bound().
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      double best = std::numeric_limits<double>::infinity();
      for (const int c : rows_[r]) {
        const auto ci = static_cast<std::size_t>(c);
        best = std::min(best, static_cast<double>(w_[ci]) / uncovered_degree_[ci]);
      }
      u_[r] = best;
    }
  }

  void set_incumbent(std::int64_t cost, std::vector<int> cols) {
    best_ = cost;
    best_cols_ = std::move(cols);
  }

  /// Returns false on timeout.
  bool run() {
    try {
      search(0);
    } catch (const TimedOut&) {
      return false;
    }
    return true;
  }

  std::int64_t best() const noexcept { return best_; }
  const std::vector<int>& best_cols() const noexcept { return best_cols_; }
  std::int64_t root_bound() const noexcept { return root_bound_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  enum State : std::uint8_t { Free, In, Out };
  struct TimedOut {};

  static constexpr int kRootIterations = 400;
  static constexpr int kNodeIterations = 25;
  static constexpr std::uint64_t kHeuristicPeriod = 64;

  static std::int64_t ceil_bound(double value) {
    return static_cast<std::int64_t>(std::ceil(value - 1e-7 * std::max(1.0, std::abs(value))));
  }

  void include(int c) {
    state_[static_cast<std::size_t>(c)] = In;
    cost_ += w_[static_cast<std::size_t>(c)];
    for (const int r : col_rows_[static_cast<std::size_t>(c)]) {
      if (cover_[static_cast<std::size_t>(r)]++ == 0) {
        --uncovered_;
        for (const int c2 : rows_[static_cast<std::size_t>(r)]) --uncovered_degree_[static_cast<std::size_t>(c2)];
      }
    }
    trail_.push_back(c);
  }

  void exclude(int c) {
    state_[static_cast<std::size_t>(c)] = Out;
    for (const int r : col_rows_[static_cast<std::size_t>(c)]) --alive_[static_cast<std::size_t>(r)];
    trail_.push_back(c);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int c = trail_.back();
      trail_.pop_back();
      if (state_[static_cast<std::size_t>(c)] == In) {
        cost_ -= w_[static_cast<std::size_t>(c)];
        for (const int r : col_rows_[static_cast<std::size_t>(c)]) {
          if (--cover_[static_cast<std::size_t>(r)] == 0) {
            ++uncovered_;
            for (const int c2 : rows_[static_cast<std::size_t>(r)]) ++uncovered_degree_[static_cast<std::size_t>(c2)];
          }
        }
      } else {
        for (const int r : col_rows_[static_cast<std::size_t>(c)]) ++alive_[static_cast<std::size_t>(r)];
      }
      state_[static_cast<std::size_t>(c)] = Free;
    }
  }

  // Forces columns of rows with a single remaining candidate. False if some
  // uncovered row has no candidate left.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (cover_[r] > 0) continue;
        if (alive_[r] == 0) return false;
        if (alive_[r] == 1) {
          for (const int c : rows_[r]) {
            if (state_[static_cast<std::size_t>(c)] == Free) {
              include(c);
              break;
            }
          }
          changed = true;
        }
      }
    }
    return true;
  }

  // Cheap lower bound on the cost still needed to cover the uncovered rows.
  std::int64_t bound() {
    // Dual prices: row r gets min over its free columns of w / (uncovered rows
    // the column covers); every column's prices then sum to at most its cost.
    double priced = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (cover_[r] > 0) continue;
      double best = std::numeric_limits<double>::infinity();
      for (const int c : rows_[r]) {
        const auto ci = static_cast<std::size_t>(c);
        if (state_[ci] != Free) continue;
        best = std::min(best, static_cast<double>(w_[ci]) / uncovered_degree_[ci]);
      }
      priced += best;
    }

    // Rows sharing no free column need distinct columns.
    ++stamp_;
    std::int64_t disjoint = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (cover_[r] > 0) continue;
      bool clash = false;
      std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
      for (const int c : rows_[r]) {
        const auto ci = static_cast<std::size_t>(c);
        if (state_[ci] != Free) continue;
        if (mark_[ci] == stamp_) {
          clash = true;
          break;
        }
        cheapest = std::min(cheapest, w_[ci]);
      }
      if (clash) continue;
      for (const int c : rows_[r]) mark_[static_cast<std::size_t>(c)] = stamp_;
      disjoint += cheapest;
    }
    return std::max(ceil_bound(priced), disjoint);
  }

  // Subgradient ascent on the Lagrangian of the remaining covering rows.
  // Returns the best value seen; rc_ holds the reduced costs at that point.
  double lagrangian(int iterations) {
    const double budget = static_cast<double>(best_ - cost_);
    std::vector<double> rc(w_.size(), 0.0);
    double best_value = -std::numeric_limits<double>::infinity();
    double lambda = 2.0;
    int stall = 0;
    for (int it = 0; it < iterations; ++it) {
      if (expired(deadline_)) throw TimedOut{};
      double value = 0.0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (cover_[r] == 0) value += u_[r];
      }
      for (std::size_t c = 0; c < w_.size(); ++c) {
        if (state_[c] != Free) continue;
        double reduced = static_cast<double>(w_[c]);
        for (const int r : col_rows_[c]) {
          if (cover_[static_cast<std::size_t>(r)] == 0) reduced -= u_[static_cast<std::size_t>(r)];
        }
        rc[c] = reduced;
        if (reduced < 0.0) value += reduced;
      }
      if (value > best_value) {
        best_value = value;
        rc_ = rc;
        stall = 0;
      } else if (++stall >= 5) {
        lambda /= 2.0;
        stall = 0;
      }
      if (ceil_bound(best_value) >= budget || lambda < 1e-4) break;

      double norm = 0.0;
      for (std::size_t r = 0; r < rows_.size(); ++r) g_[r] = cover_[r] == 0 ? 1.0 : 0.0;
      for (std::size_t c = 0; c < w_.size(); ++c) {
        if (state_[c] != Free || rc[c] >= 0.0) continue;
        for (const int r : col_rows_[c]) g_[static_cast<std::size_t>(r)] -= 1.0;
      }
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (cover_[r] > 0) continue;
        if (u_[r] <= 0.0 && g_[r] < 0.0) g_[r] = 0.0;
        norm += g_[r] * g_[r];
      }
      if (norm == 0.0) break;
      const double step = lambda * (budget - value) / norm;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (cover_[r] == 0) u_[r] = std::max(0.0, u_[r] + step * g_[r]);
      }
    }
    return best_value;
  }

  // Fixes columns whose reduced cost alone pushes the bound to the incumbent.
  void reduced_cost_fixing(double value) {
    const std::int64_t base = cost_;
    for (std::size_t c = 0; c < w_.size(); ++c) {
      if (state_[c] != Free) continue;
      if (rc_[c] >= 0.0) {
        if (base + ceil_bound(value + rc_[c]) >= best_) exclude(static_cast<int>(c));
      } else if (base + ceil_bound(value - rc_[c]) >= best_) {
        include(static_cast<int>(c));
      }
    }
  }

  // Completes the columns with negative reduced cost greedily to a cover and
  // drops redundant columns; keeps the result if it beats the incumbent.
  void primal_heuristic() {
    std::vector<int> count = cover_;
    std::vector<int> picked;
    for (std::size_t c = 0; c < w_.size(); ++c) {
      if (state_[c] != Free || rc_[c] >= 0.0) continue;
      picked.push_back(static_cast<int>(c));
      for (const int r : col_rows_[c]) ++count[static_cast<std::size_t>(r)];
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (count[r] > 0) continue;
      int choice = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (const int c : rows_[r]) {
        const auto ci = static_cast<std::size_t>(c);
        if (state_[ci] != Free) continue;
        int fresh = 0;
        for (const int r2 : col_rows_[ci]) fresh += count[static_cast<std::size_t>(r2)] == 0 ? 1 : 0;
        const double q = static_cast<double>(w_[ci]) / fresh;
        if (q < ratio) {
          ratio = q;
          choice = c;
        }
      }
      if (choice < 0) return;
      picked.push_back(choice);
      for (const int r2 : col_rows_[static_cast<std::size_t>(choice)]) ++count[static_cast<std::size_t>(r2)];
    }
    std::stable_sort(picked.begin(), picked.end(), [&](int a, int b) {
      return w_[static_cast<std::size_t>(a)] > w_[static_cast<std::size_t>(b)];
    });
    std::int64_t total = cost_;
    std::vector<int> kept;
    for (const int c : picked) {
      const auto& rows = col_rows_[static_cast<std::size_t>(c)];
      const bool redundant = std::all_of(rows.begin(), rows.end(), [&](int r) { return count[static_cast<std::size_t>(r)] >= 2; });
      if (redundant) {
        for (const int r : rows) --count[static_cast<std::size_t>(r)];
      } else {
        kept.push_back(c);
        total += w_[static_cast<std::size_t>(c)];
      }
    }
    if (total >= best_) return;
    for (std::size_t c = 0; c < state_.size(); ++c) {
      if (state_[c] == In) kept.push_back(static_cast<int>(c));
    }
    std::sort(kept.begin(), kept.end());
    set_incumbent(total, std::move(kept));
  }

  void record_incumbent() {
    best_ = cost_;
    best_cols_.clear();
    for (std::size_t c = 0; c < state_.size(); ++c) {
      if (state_[c] == In) best_cols_.push_back(static_cast<int>(c));
    }
  }

  int branching_column() const {
    int row = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (cover_[r] > 0) continue;
      if (row < 0 || alive_[r] < alive_[static_cast<std::size_t>(row)]) row = static_cast<int>(r);
    }
    int pick = -1;
    for (const int c : rows_[static_cast<std::size_t>(row)]) {
      const auto ci = static_cast<std::size_t>(c);
      if (state_[ci] != Free) continue;
      if (pick < 0 || rc_[ci] < rc_[static_cast<std::size_t>(pick)]) pick = c;
    }
    return pick;
  }

  void search(int depth) {
    if ((++nodes_ & 1023U) == 0 && expired(deadline_)) throw TimedOut{};
    const std::size_t mark = trail_.size();
    auto finish = [&] { undo_to(mark); };
    if (!propagate() || cost_ >= best_) return finish();
    if (uncovered_ == 0) {
      record_incumbent();
      return finish();
    }
    std::int64_t lb = bound();
    if (depth == 0) root_bound_ = cost_ + lb;
    if (cost_ + lb >= best_) return finish();

    const double value = lagrangian(depth == 0 ? kRootIterations : kNodeIterations);
    lb = std::max(lb, ceil_bound(value));
    if (depth == 0) root_bound_ = std::max(root_bound_, cost_ + lb);
    if (cost_ + lb >= best_) return finish();
    if (depth == 0 || nodes_ % kHeuristicPeriod == 0) primal_heuristic();
    reduced_cost_fixing(value);
    if (!propagate() || cost_ >= best_) return finish();
    if (uncovered_ == 0) {
      record_incumbent();
      return finish();
    }

    const int col = branching_column();
    const std::size_t branch_mark = trail_.size();
    include(col);
    search(depth + 1);
    undo_to(branch_mark);
    exclude(col);
    search(depth + 1);
    finish();
  }

  const std::vector<std::vector<int>>& rows_;
  std::vector<std::int64_t> w_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> cover_;
  std::vector<int> alive_;
  std::vector<int> uncovered_degree_;
  std::vector<State> state_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  int uncovered_;
  std::vector<double> u_;
  std::vector<double> g_;
  std::vector<double> rc_;
  std::int64_t cost_ = 0;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_cols_;
  std::int64_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<int> trail_;
};

}  // namespace

CutCoverModel build_cut_cover_program(const CactusGraph& cactus, const LinkGraph& links, bool drop_duplicate_rows) {
  return *build_model(cactus, links, drop_duplicate_rows, std::nullopt);
}

std::string export_lp(const CutCoverModel& model) {
  std::ostringstream os;
  os << "\\ cut-cover program: " << model.rows.size() << " cuts, " << model.columns.size() << " links\n";
  os << "Minimize\n obj:";
  for (std::size_t c = 0; c < model.columns.size(); ++c) {
    if (c > 0 && c % 8 == 0) os << "\n     ";
    os << (c == 0 ? " " : " + ") << lp_coefficient(model.costs[c]) << " x" << model.columns[c];
  }
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    os << " c" << r << ":";
    const auto& row = model.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && i % 16 == 0) os << "\n    ";
      os << (i == 0 ? " " : " + ") << "x" << model.columns[static_cast<std::size_t>(row[i])];
    }
    os << " >= 1\n";
  }
  os << "Binaries\n";
  for (const LinkId id : model.columns) os << " x" << id << '\n';
  os << "End\n";
  return os.str();
}

ExactResult solve_exact(const CactusGraph& cactus, const LinkGraph& links, const ExactOptions& options) {
  const auto deadline = deadline_after(options.time_limit_s);

  Solution incumbent = mst_connect(cactus, links);
  if (options.improve_warm_start) incumbent = local_search(cactus, links, incumbent, 3, nullptr, deadline);

  ExactResult result;
  result.warm_start_cost = incumbent.total_cost;
  result.solution = incumbent;
  result.solution.meta.algorithm = "exact";
  result.lower_bound = Cost(0);
  result.root_bound = Cost(0);

  if (expired(deadline)) {
    result.status = ExactStatus::Timeout;
    return result;
  }
  auto model = build_model(cactus, links, options.drop_duplicate_rows, deadline);
  if (!model) {
    result.status = ExactStatus::Timeout;
    return result;
  }

  std::int64_t denominator = 1;
  auto weights = integer_weights(model->costs, denominator);
  std::vector<int> column_of(links.links().size(), -1);
  for (std::size_t c = 0; c < model->columns.size(); ++c) column_of[static_cast<std::size_t>(model->columns[c])] = static_cast<int>(c);
  std::vector<int> warm_cols;
  std::int64_t warm_cost = 0;
  for (const LinkId id : incumbent.link_ids) {
    const int c = column_of[static_cast<std::size_t>(id)];
    warm_cols.push_back(c);
    warm_cost += weights[static_cast<std::size_t>(c)];
  }

  BranchAndBound bnb(*model, std::move(weights), deadline);
  bnb.set_incumbent(warm_cost, warm_cols);
  const bool finished = bnb.run();

  std::vector<LinkId> ids;
  for (const int c : bnb.best_cols()) ids.push_back(model->columns[static_cast<std::size_t>(c)]);
  result.solution = make_solution(links, std::move(ids), {"exact", 0, 0.0});
  result.solution.valid = true;
  result.nodes = bnb.nodes();
  result.root_bound = std::min(Cost::fraction(bnb.root_bound(), denominator), result.solution.total_cost);
  if (finished) {
    result.status = ExactStatus::Optimal;
    result.lower_bound = result.solution.total_cost;
  } else {
    result.status = ExactStatus::Timeout;
    result.lower_bound = result.root_bound;
  }
  return result;
}

Cost brute_force_optimal(const CactusGraph& cactus, const LinkGraph& links) {
  const auto cuts = enumerate_min_cuts(cactus);
  const auto& ids = links.ids();
  if (ids.size() > 48 || cuts.size() > 64) {
    throw Error(Errc::TooLarge, std::to_string(ids.size()) + " links / " + std::to_string(cuts.size()) + " cuts");
  }
  const std::uint64_t all = cuts.size() == 64 ? ~0ULL : (1ULL << cuts.size()) - 1;
  std::vector<std::uint64_t> mask(ids.size(), 0);
  for (std::size_t r = 0; r < cuts.size(); ++r) {
    const auto side = cut_side_mask(cactus, cuts[r]);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& l = links.link(ids[i]);
      if (side[static_cast<std::size_t>(l.u)] != side[static_cast<std::size_t>(l.v)]) mask[i] |= 1ULL << r;
    }
  }
  std::vector<std::uint64_t> suffix(ids.size() + 1, 0);
  for (std::size_t i = ids.size(); i-- > 0;) suffix[i] = suffix[i + 1] | mask[i];

  std::optional<Cost> best;
  auto dfs = [&](auto&& self, std::size_t i, std::uint64_t covered, const Cost& cost) -> void {
    if (best && cost >= *best) return;
    if (covered == all) {
      best = cost;
      return;
    }
    if ((covered | suffix[i]) != all) return;
    self(self, i + 1, covered | mask[i], cost + links.link(ids[i]).cost);
    self(self, i + 1, covered, cost);
  };
  dfs(dfs, 0, 0, Cost(0));
  if (!best) throw Error(Errc::Infeasible, "no link subset covers all cuts");
  return *best;
}

}  // namespace wcap
