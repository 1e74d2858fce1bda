#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/cost.hpp"

namespace wcap {

using LinkId = std::int32_t;

/// A link as read from a link file, endpoints in original-vertex ids (0-based).
struct RawLink {
  Vertex orig_u = 0;
  Vertex orig_v = 0;
  Cost cost;

  friend bool operator==(const RawLink&, const RawLink&) = default;
};

struct Link {
  LinkId id = 0;
  Vertex u = 0;  ///< cactus endpoints, u < v
  Vertex v = 0;
  Cost cost;
  Vertex orig_u = 0;
  Vertex orig_v = 0;
  std::size_t raw_index = 0;  ///< position in the raw link list it came from
};

/// Deduplicated links on cactus vertices: at most one link per vertex pair.
///
/// Link ids index into links(); a restricted view (see restricted()) shares the
/// full link table but only exposes a subset through ids(), incident() and
/// find(), so ids stay stable between a graph and its reductions.
class LinkGraph {
 public:
  LinkGraph() = default;
  LinkGraph(int vertex_count, std::vector<Link> links);

  int vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return active_.size(); }
  bool empty() const noexcept { return active_.empty(); }

  const std::vector<Link>& links() const noexcept { return *links_; }
  const Link& link(LinkId id) const { return (*links_)[static_cast<std::size_t>(id)]; }
  bool contains(LinkId id) const;

  /// Active ids in ascending order.
  const std::vector<LinkId>& ids() const noexcept { return active_; }
  const std::vector<LinkId>& incident(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::optional<LinkId> find(Vertex u, Vertex v) const;

  LinkGraph restricted(std::span<const LinkId> keep) const;

 private:
  static std::uint64_t key(Vertex u, Vertex v);
  void index();

  int n_ = 0;
  std::shared_ptr<const std::vector<Link>> links_ = std::make_shared<const std::vector<Link>>();
  std::vector<LinkId> active_;
  std::vector<char> member_;
  std::vector<std::vector<LinkId>> adjacency_;
  std::unordered_map<std::uint64_t, LinkId> by_pair_;
};

/// Maps raw links through pi, drops self-loops and keeps one cheapest link per
/// cactus vertex pair (ties: smallest raw index). Kept links get dense ids in
/// raw order. Throws UnknownVertex for endpoints outside pi's domain.
LinkGraph build_link_graph(const CactusGraph& cactus, std::span<const RawLink> raw);

struct SolutionMeta {
  std::string algorithm;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

struct Solution {
  std::vector<LinkId> link_ids;  ///< sorted ascending, no duplicates
  Cost total_cost;
  bool valid = false;
  SolutionMeta meta;

  std::size_t size() const noexcept { return link_ids.size(); }
};

/// Sorts ids and sums their costs. Does not validate.
Solution make_solution(const LinkGraph& links, std::vector<LinkId> ids, SolutionMeta meta = {});

Cost total_cost(const LinkGraph& links, std::span<const LinkId> ids);

/// Reference validator: every enumerated minimum cut has a link of `ids`
/// crossing it. O(#cuts * (|V_c| + |ids|)).
bool validate_solution(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> ids);
inline bool validate_solution(const CactusGraph& cactus, const LinkGraph& links, const Solution& s) {
  return validate_solution(cactus, links, s.link_ids);
}

/// Original endpoints and cost of every link in the solution.
std::vector<RawLink> map_solution_back(const Solution& solution, const LinkGraph& links);

}  // namespace wcap
