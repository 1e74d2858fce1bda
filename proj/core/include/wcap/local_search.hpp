#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// Exchange of solution links l_out for non-solution links l_in along a
/// simple alternating path. gain = c(l_in) - c(l_out) < 0.
struct SwapCandidate {
  std::vector<LinkId> l_in;
  std::vector<LinkId> l_out;
  Cost gain;
  std::vector<Vertex> path;  ///< canonical orientation (lexicographically smaller direction)
};

struct PathHash {
  std::size_t operator()(const std::vector<Vertex>& path) const noexcept;
};

/// Canonical vertex sequences of swaps that were checked and rejected. Never
/// invalidated, so a swap rejected once is not retried after later swaps.
class PathCache {
 public:
  bool contains(const std::vector<Vertex>& path) const { return seen_.contains(path); }
  void insert(std::vector<Vertex> path) { seen_.insert(std::move(path)); }
  std::size_t size() const noexcept { return seen_.size(); }

 private:
  std::unordered_set<std::vector<Vertex>, PathHash> seen_;
};

/// Union of `forests` successively computed edge-disjoint minimum spanning
/// forests, plus the links in `keep` (the current solution).
LinkGraph reduce_link_set(const LinkGraph& links, std::span<const LinkId> keep, int forests = 2);

/// All simple alternating paths with 1..depth links in `reduced` that form an
/// improving, non-trivial swap for `solution`, excluding cached paths. Sorted
/// by gain, then canonical path.
///
/// Non-trivial: every endpoint of a removed link that is a singleton minimum
/// cut of the cactus still touches a link of the swapped solution.
std::vector<SwapCandidate> get_swap_candidates(const CactusGraph& cactus, const LinkGraph& reduced,
                                               std::span<const LinkId> solution, int depth,
                                               const PathCache* cache = nullptr);

struct LocalSearchStats {
  std::size_t swaps = 0;
  std::size_t rejected = 0;
  std::size_t regenerations = 0;
  bool timed_out = false;
};

/// LS(depth). Input must be a valid solution; the result is valid and never
/// more expensive. Stops early (keeping the current valid solution) when the
/// deadline passes.
Solution local_search(const CactusGraph& cactus, const LinkGraph& links, const Solution& start, int depth,
                      LocalSearchStats* stats = nullptr,
                      std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace wcap
