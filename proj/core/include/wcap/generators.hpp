#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// Cactus with n vertices built from c cycles: the first cycle gets at least
/// three new vertices, every later one at least two new vertices plus one
/// vertex of an earlier cycle, picked uniformly. Cycle sizes are Poisson with
/// mean n/c, redrawn (at most 1000 times, then clamped) until the remaining
/// cycles still fit. Throws InvalidParams unless n > c >= 1 and n >= 2c + 1.
CactusGraph generate_cactus(int n, int cycles, std::uint64_t seed);

enum class SpecialKind { Cycle, Star };

/// The n-cycle (n >= 3) or the star with centre 0 and n - 1 leaves (n >= 2).
CactusGraph generate_special(SpecialKind kind, int n);

struct CostDistribution {
  enum class Kind { U2, U9, U99, U100000, FromFile };
  Kind kind = Kind::U100000;
  bool scale_to_unit = false;  ///< divide by the largest drawn cost

  /// "u2", "u9", "u99", "u100000". Throws InvalidParams otherwise.
  static CostDistribution parse(std::string_view name, bool scale = false);
  std::string name() const;
  std::int64_t max_value() const;
};

/// Complete link set over the cactus vertices, pairs (u, v), u < v, in
/// lexicographic order, costs drawn i.i.d. in that order. Endpoints are the
/// smallest original vertex mapped to each cactus vertex. FromFile throws
/// InvalidParams.
std::vector<RawLink> generate_raw_links(const CactusGraph& cactus, const CostDistribution& dist, std::uint64_t seed);
LinkGraph generate_link_costs(const CactusGraph& cactus, const CostDistribution& dist, std::uint64_t seed);

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  int weight = 1;
};

struct WeightedGraph {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

struct ExpandedGraph {
  WeightedGraph graph;
  std::vector<Vertex> pi;  ///< original vertex -> cactus vertex
};

/// Original graph whose minimum cuts are represented by `cactus` (k = 2).
/// Cactus vertices are replaced by K4 gadgets with probability
/// `gadget_probability` while the graph stays within `max_vertices`. A tree
/// edge becomes two unit edges between distinct gadget vertices where
/// possible (one edge of weight 2 otherwise), a cycle edge one unit edge.
/// Throws Unsupported for k != 2.
ExpandedGraph expand_cactus_to_graph(const CactusGraph& cactus, std::uint64_t seed, double gadget_probability = 0.5,
                                     int max_vertices = 16);

struct BruteForceCuts {
  int weight = 0;
  std::vector<std::uint32_t> sides;  ///< side without vertex 0, as bitmask, ascending
};

/// Weighs every bipartition. Throws TooLarge above 16 vertices.
BruteForceCuts enumerate_min_cuts_brute_force(const WeightedGraph& graph);

/// The pi-preimages of the cactus cuts are exactly the minimum cuts of the
/// graph and the minimum cut weight is k. Throws TooLarge above 16 vertices.
bool verify_cactus_representation(const WeightedGraph& graph, const CactusGraph& cactus, const std::vector<Vertex>& pi);

}  // namespace wcap
