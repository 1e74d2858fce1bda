#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// Cactus under link-driven contraction.
///
/// Adding a link (u, v) covers exactly the minimum cuts separating u and v;
/// the cactus of the remaining uncovered cuts is obtained by contracting every
/// tree edge on the u-v block path and splitting every traversed cycle at its
/// entry/exit vertices. Vertices are tracked by a disjoint-set whose
/// representative is always the smallest id of its class, so vertex 0 stays
/// the root. Structure is rewritten eagerly after every contraction.
class DynamicCactus {
 public:
  explicit DynamicCactus(const CactusGraph& base);

  /// Contracts along the representative path of u and v and returns how many
  /// minimum cuts became covered (0 if u and v are already merged).
  std::uint64_t add_link_and_contract(Vertex u, Vertex v);
  std::uint64_t add_link_and_contract(const Link& link) { return add_link_and_contract(link.u, link.v); }

  /// Uncovered minimum cuts separating u and v in the current state.
  std::uint64_t covered_cuts(Vertex u, Vertex v) const;

  std::uint64_t remaining_cuts() const noexcept { return remaining_; }
  bool is_fully_augmented() const noexcept { return remaining_ == 0; }

  Vertex representative(Vertex v) const { return rep_[static_cast<std::size_t>(v)]; }
  int base_vertex_count() const noexcept { return static_cast<int>(rep_.size()); }

  /// Live structure over representative ids.
  const std::vector<VertexPair>& tree_edges() const noexcept { return tree_edges_; }
  const std::vector<std::vector<Vertex>>& cycles() const noexcept { return cycles_; }

  /// The live structure as a standalone cactus with representatives renumbered
  /// densely in increasing order. Re-runs full cactus validation.
  CactusGraph snapshot() const;

 private:
  void rebuild();

  std::vector<Vertex> rep_;
  std::vector<VertexPair> tree_edges_;
  std::vector<std::vector<Vertex>> cycles_;
  std::uint64_t remaining_ = 0;
  int k_ = 0;
  BlockTree blocks_;
};

/// Fast feasibility test: contracts all links and checks that no cut remains.
bool is_augmentation(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> ids);

}  // namespace wcap
