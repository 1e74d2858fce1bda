#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace oracle {

int cactus_cut_weight(const wcap::CactusGraph& cactus, std::uint32_t side) {
  int w = 0;
  for (const auto& e : cactus.edges()) {
    if (separates(side, e.u, e.v)) w += e.kind == wcap::EdgeKind::Tree ? 2 : 1;
  }
  return w;
}

bool separates(std::uint32_t side, Vertex u, Vertex v) { return ((side >> u) & 1U) != ((side >> v) & 1U); }

std::vector<std::uint32_t> min_cut_sides(const wcap::CactusGraph& cactus) {
  const int n = cactus.vertex_count();
  if (n > 20) throw std::invalid_argument("oracle limited to 20 vertices");
  std::vector<std::uint32_t> out;
  int best = 1 << 30;
  for (std::uint32_t half = 1; half < (1U << (n - 1)); ++half) {
    const std::uint32_t side = half << 1;
    const int w = cactus_cut_weight(cactus, side);
    if (w < best) {
      best = w;
      out.clear();
    }
    if (w == best) out.push_back(side);
  }
  return out;
}

std::uint64_t covered_cuts(const std::vector<std::uint32_t>& sides, Vertex u, Vertex v) {
  return static_cast<std::uint64_t>(std::count_if(sides.begin(), sides.end(), [&](std::uint32_t s) { return separates(s, u, v); }));
}

bool covers_all(const std::vector<std::uint32_t>& sides, const wcap::LinkGraph& links, std::span<const wcap::LinkId> ids) {
  for (const auto s : sides) {
    bool hit = false;
    for (const auto id : ids) hit = hit || separates(s, links.link(id).u, links.link(id).v);
    if (!hit) return false;
  }
  return true;
}

bool connectivity_exceeds_two(const wcap::CactusGraph& cactus, const wcap::LinkGraph& links,
                              std::span<const wcap::LinkId> ids, Vertex u, Vertex v) {
  const int n = cactus.vertex_count();
  int best = 1 << 30;
  for (std::uint32_t half = 1; half < (1U << (n - 1)); ++half) {
    const std::uint32_t side = half << 1;
    if (!separates(side, u, v)) continue;
    int w = cactus_cut_weight(cactus, side);
    for (const auto id : ids) w += separates(side, links.link(id).u, links.link(id).v) ? 1 : 0;
    best = std::min(best, w);
  }
  return best > 2;
}

std::optional<wcap::Cost> optimum(const wcap::CactusGraph& cactus, const wcap::LinkGraph& links) {
  const auto sides = min_cut_sides(cactus);
  const auto& ids = links.ids();
  if (ids.size() > 22) throw std::invalid_argument("oracle limited to 22 links");
  std::optional<wcap::Cost> best;
  std::vector<wcap::LinkId> pick;
  for (std::uint32_t mask = 0; mask < (1U << ids.size()); ++mask) {
    pick.clear();
    wcap::Cost cost(0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if ((mask >> i) & 1U) {
        pick.push_back(ids[i]);
        cost += links.link(ids[i]).cost;
      }
    }
    if (best && cost >= *best) continue;
    if (covers_all(sides, links, pick)) best = cost;
  }
  return best;
}

wcap::CactusGraph random_cactus(std::mt19937_64& rng, int n) {
  std::vector<wcap::VertexPair> edges;
  int used = 1;
  while (used < n) {
    const auto anchor = static_cast<Vertex>(std::uniform_int_distribution<int>(0, used - 1)(rng));
    const int room = n - used;
    const bool tree = room < 2 || std::bernoulli_distribution(0.4)(rng);
    if (tree) {
      edges.emplace_back(anchor, used);
      ++used;
      continue;
    }
    const int fresh = std::uniform_int_distribution<int>(2, std::min(room, 6))(rng);
    Vertex prev = anchor;
    for (int i = 0; i < fresh; ++i) {
      edges.emplace_back(prev, used + i);
      prev = used + i;
    }
    edges.emplace_back(prev, anchor);
    used += fresh;
  }
  // Relabel so ids do not follow the build order.
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (auto& [a, b] : edges) {
    a = label[static_cast<std::size_t>(a)];
    b = label[static_cast<std::size_t>(b)];
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return wcap::CactusGraph::from_edges(n, edges, 2);
}

wcap::LinkGraph random_links(std::mt19937_64& rng, const wcap::CactusGraph& cactus, double density, int max_cost) {
  const int n = cactus.vertex_count();
  std::vector<wcap::RawLink> raw;
  std::uniform_int_distribution<int> cost(1, max_cost);
  for (Vertex v = 1; v < n; ++v) {
    const auto p = static_cast<Vertex>(std::uniform_int_distribution<int>(0, v - 1)(rng));
    raw.push_back({p, v, wcap::Cost(cost(rng))});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::bernoulli_distribution(density)(rng)) raw.push_back({u, v, wcap::Cost(cost(rng))});
    }
  }
  std::shuffle(raw.begin(), raw.end(), rng);
  return wcap::build_link_graph(cactus, raw);
}

wcap::LinkGraph unit_complete_links(const wcap::CactusGraph& cactus) {
  std::vector<wcap::RawLink> raw;
  for (Vertex u = 0; u < cactus.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < cactus.vertex_count(); ++v) raw.push_back({u, v, wcap::Cost(1)});
  }
  return wcap::build_link_graph(cactus, raw);
}

wcap::LinkGraph links_from(const wcap::CactusGraph& cactus, const std::vector<std::tuple<Vertex, Vertex, std::int64_t>>& triples) {
  std::vector<wcap::RawLink> raw;
  for (const auto& [u, v, c] : triples) raw.push_back({u, v, wcap::Cost(c)});
  return wcap::build_link_graph(cactus, raw);
}

wcap::CactusGraph cycle(int n) {
  std::vector<wcap::VertexPair> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return wcap::CactusGraph::from_edges(n, edges, 2);
}

wcap::CactusGraph star(int n) {
  std::vector<wcap::VertexPair> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return wcap::CactusGraph::from_edges(n, edges, 2);
}

wcap::CactusGraph small_example() {
  const std::vector<wcap::VertexPair> edges{{0, 1}, {1, 2}, {2, 3}, {3, 1}};
  return wcap::CactusGraph::from_edges(4, edges, 2);
}

}  // namespace oracle

namespace oracle {

wcap::LinkGraph eight_cycle_scripted_links(const wcap::CactusGraph& c8) {
  std::vector<std::tuple<Vertex, Vertex, std::int64_t>> triples{{0, 4, 1}, {1, 3, 1}, {5, 7, 1}, {1, 6, 1},
                                                                {2, 5, 1}, {1, 5, 1}, {0, 6, 1}, {2, 6, 1}};
  for (Vertex u = 0; u < 8; ++u) {
    for (Vertex v = u + 1; v < 8; ++v) {
      const bool listed = std::any_of(triples.begin(), triples.end(), [&](const auto& t) {
        return std::get<0>(t) == u && std::get<1>(t) == v;
      });
      if (!listed) triples.emplace_back(u, v, 1);
    }
  }
  return links_from(c8, triples);
}

}  // namespace oracle
