#pragma once

#include <span>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// u-v flow network over the cactus plus a link set, with k normalised to 2:
/// tree edges have capacity 2, cycle edges and links capacity 1. All edges
/// are undirected.
class FlowNetwork {
 public:
  FlowNetwork(const CactusGraph& cactus, std::span<const VertexPair> links);

  /// Routes flow from u to v over cactus edges only until the cactus min cut
  /// (2) is saturated, then looks for one more augmenting path that may use
  /// links. Returns true iff that path exists, i.e. the u-v connectivity of
  /// cactus + links exceeds k. Consumes the network.
  bool exceeds_k(Vertex u, Vertex v);

  int flow() const noexcept { return flow_; }

 private:
  struct Arc {
    Vertex to;
    int cap;
    int rev;
    bool link;
  };
  void add_edge(Vertex a, Vertex b, int cap, bool link);
  int augment(Vertex s, Vertex t, bool allow_links);

  std::vector<std::vector<Arc>> arcs_;
  int flow_ = 0;
};

bool connectivity_exceeds_k(const CactusGraph& cactus, std::span<const VertexPair> links, Vertex u, Vertex v);
bool connectivity_exceeds_k(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution,
                            Vertex u, Vertex v);

/// solution \ {id} still covers every minimum cut. Requires that `solution`
/// (which contains id) covers every cut.
bool is_disposable(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution, LinkId id);

/// For a valid `solution`, S' = solution \ out ∪ in is valid iff every removed
/// link's endpoints stay more than k-connected in cactus + S'.
bool is_swap_valid(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution,
                   std::span<const LinkId> in, std::span<const LinkId> out);

}  // namespace wcap
