#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace wcap {

/// Cactus vertex id, 0-based. Vertex 0 is the root representative.
using Vertex = std::int32_t;
using VertexPair = std::pair<Vertex, Vertex>;

enum class EdgeKind : std::uint8_t { Tree, Cycle };

struct CactusEdge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeKind kind = EdgeKind::Tree;
  int cycle = -1;     ///< cycle id for cycle edges
  int position = -1;  ///< edge i of a cycle joins seq[i] and seq[(i+1) % len]

  friend bool operator==(const CactusEdge&, const CactusEdge&) = default;
};

/// Minimum cut given by a single tree edge (index into CactusGraph::edges()).
struct TreeCut {
  int edge = 0;
  friend bool operator==(const TreeCut&, const TreeCut&) = default;
};

/// Minimum cut given by two edges i < j (positions) of one cycle.
struct CycleCut {
  int cycle = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const CycleCut&, const CycleCut&) = default;
};

using MinCutRef = std::variant<TreeCut, CycleCut>;

/// One block (tree edge or cycle) crossed by the unique block path between
/// two vertices. Positions are indices into the cycle sequence; for a tree
/// edge they are 0 and 1.
struct BlockStep {
  int block = 0;
  Vertex entry = 0;
  Vertex exit = 0;
  int entry_pos = 0;
  int exit_pos = 0;
};

/// Rooted block-cut tree over tree edges and cycles.
///
/// Blocks [0, T) are tree edges, blocks [T, T + C) are cycles, in the order
/// they were handed to the constructor. Vertices that are not reachable from
/// the root (e.g. merged-away vertices of a contracted cactus) get depth -1.
class BlockTree {
 public:
  BlockTree() = default;
  BlockTree(int vertex_count, std::span<const VertexPair> tree_edges,
            std::span<const std::vector<Vertex>> cycles, Vertex root);

  int tree_block_count() const noexcept { return tree_blocks_; }
  bool is_cycle(int block) const noexcept { return block >= tree_blocks_; }
  int cycle_of(int block) const noexcept { return block - tree_blocks_; }
  int block_length(int block) const noexcept { return length_[static_cast<std::size_t>(block)]; }
  int depth(Vertex v) const noexcept { return depth_[static_cast<std::size_t>(v)]; }

  /// Blocks crossed on the way from u to v, ordered from u's side.
  std::vector<BlockStep> path(Vertex u, Vertex v) const;

  /// Number of minimum cuts separating u and v: +1 per tree edge on the
  /// path, +p*q per cycle split into arcs of p and q edges.
  std::uint64_t separating_cuts(Vertex u, Vertex v) const;

 private:
  template <typename Fn>
  void walk(Vertex u, Vertex v, Fn&& visit) const;

  int tree_blocks_ = 0;
  std::vector<int> parent_block_;
  std::vector<int> parent_pos_;
  std::vector<int> depth_;
  std::vector<Vertex> top_;
  std::vector<int> top_pos_;
  std::vector<int> length_;
};

/// Cactus representation C = (V_c, E_c) of all minimum cuts of a k-connected
/// graph, together with the map pi from original vertices.
///
/// Immutable after construction. Tree edges carry implicit weight k and cycle
/// edges k/2; every cycle has at least three vertices (parallel pairs are
/// normalised to tree edges while parsing).
class CactusGraph {
 public:
  CactusGraph() = default;

  /// Classifies edges via biconnected components and validates the cactus
  /// property. Throws MalformedInput, NotACactus or Disconnected. An empty pi
  /// means identity over the cactus vertices.
  static CactusGraph from_edges(int vertex_count, std::span<const VertexPair> edges, int k,
                                std::vector<Vertex> pi = {});

  int vertex_count() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// Tree edges first, then each cycle's edges in position order.
  const std::vector<CactusEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<Vertex>>& cycles() const noexcept { return cycles_; }
  int tree_edge_count() const noexcept { return tree_edges_; }
  int cycle_edge_index(int cycle, int position) const;

  const std::vector<Vertex>& pi() const noexcept { return pi_; }
  int original_vertex_count() const noexcept { return static_cast<int>(pi_.size()); }

  /// (neighbour, edge index) pairs.
  const std::vector<std::pair<Vertex, int>>& adjacent(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  const BlockTree& blocks() const noexcept { return blocks_; }

  /// {v} is itself a minimum cut: a leaf hanging on one tree edge, or a
  /// vertex whose only edges are the two edges of a single cycle.
  bool is_singleton_cut(Vertex v) const;

  /// T + sum over cycles of C(len, 2).
  std::uint64_t min_cut_count() const noexcept;

  std::vector<VertexPair> tree_edge_pairs() const;

 private:
  int n_ = 0;
  int k_ = 0;
  int tree_edges_ = 0;
  std::vector<CactusEdge> edges_;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<int> cycle_edge_offset_;
  std::vector<std::vector<std::pair<Vertex, int>>> adjacency_;
  std::vector<Vertex> pi_;
  BlockTree blocks_;
};

/// All minimum cuts: tree cuts in edge order, then for each cycle all
/// position pairs i < j in lexicographic order.
std::vector<MinCutRef> enumerate_min_cuts(const CactusGraph& cactus);

/// Vertices on the side of the cut that does not contain vertex 0, sorted.
std::vector<Vertex> cut_side(const CactusGraph& cactus, const MinCutRef& cut);

/// Membership mask of cut_side().
std::vector<char> cut_side_mask(const CactusGraph& cactus, const MinCutRef& cut);

bool cuts_pair(const CactusGraph& cactus, const MinCutRef& cut, Vertex u, Vertex v);

/// Number of minimum cuts whose sides separate u and v.
std::uint64_t covered_cuts(const CactusGraph& cactus, Vertex u, Vertex v);

/// Total weight of the cut under the implicit edge weights (tree k, cycle
/// k/2), doubled to stay integral: 2k for every minimum cut.
int doubled_cut_weight(const CactusGraph& cactus, std::span<const char> side_mask);

}  // namespace wcap
