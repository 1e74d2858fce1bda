#include "wcap/cactus.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wcap/error.hpp"

namespace wcap {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

struct Component {
  std::vector<int> edges;  // input edge indices
};

// Edge-based Tarjan; returns biconnected components of a connected multigraph.
std::vector<Component> biconnected_components(int n, std::span<const VertexPair> edges) {
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(n));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [u, v] = edges[static_cast<std::size_t>(e)];
    adj[idx(u)].emplace_back(v, e);
    adj[idx(v)].emplace_back(u, e);
  }

  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_stack;
  std::vector<Frame> stack;
  std::vector<Component> out;
  int timer = 0;

  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    if (f.next < adj[idx(v)].size()) {
      const auto [w, e] = adj[idx(v)][f.next++];
      if (e == f.parent_edge) continue;
      if (disc[idx(w)] == -1) {
        edge_stack.push_back(e);
        disc[idx(w)] = low[idx(w)] = timer++;
        stack.push_back({w, e, 0});
      } else if (disc[idx(w)] < disc[idx(v)]) {
        edge_stack.push_back(e);
        low[idx(v)] = std::min(low[idx(v)], disc[idx(w)]);
      }
      continue;
    }
    const int parent_edge = f.parent_edge;
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex u = stack.back().v;
    low[idx(u)] = std::min(low[idx(u)], low[idx(v)]);
    if (low[idx(v)] >= disc[idx(u)]) {
      Component comp;
      while (true) {
        const int e = edge_stack.back();
        edge_stack.pop_back();
        comp.edges.push_back(e);
        if (e == parent_edge) break;
      }
      out.push_back(std::move(comp));
    }
  }
  return out;
}

// Orders the vertices of a simple cycle: start at the smallest id, step to the
// smaller of its two neighbours.
std::vector<Vertex> cycle_order(std::span<const VertexPair> edges, const std::vector<int>& comp_edges) {
  std::vector<Vertex> verts;
  for (const int e : comp_edges) {
    verts.push_back(edges[static_cast<std::size_t>(e)].first);
    verts.push_back(edges[static_cast<std::size_t>(e)].second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::vector<Vertex>> nbr(verts.size());
  for (const int e : comp_edges) {
    const auto [u, v] = edges[static_cast<std::size_t>(e)];
    nbr[local(u)].push_back(v);
    nbr[local(v)].push_back(u);
  }
  for (const auto& list : nbr) {
    if (list.size() != 2) throw Error(Errc::NotACactus, "block is not a simple cycle");
  }
  std::vector<Vertex> seq;
  seq.reserve(verts.size());
  Vertex prev = verts.front();
  Vertex cur = std::min(nbr[0][0], nbr[0][1]);
  seq.push_back(prev);
  while (cur != verts.front()) {
    seq.push_back(cur);
    const auto& nb = nbr[local(cur)];
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (seq.size() > verts.size()) throw Error(Errc::NotACactus, "block is not a simple cycle");
  }
  if (seq.size() != verts.size()) throw Error(Errc::NotACactus, "block is not a simple cycle");
  return seq;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockTree

BlockTree::BlockTree(int vertex_count, std::span<const VertexPair> tree_edges,
                     std::span<const std::vector<Vertex>> cycles, Vertex root)
    : tree_blocks_(static_cast<int>(tree_edges.size())) {
  const auto n = static_cast<std::size_t>(vertex_count);
  const std::size_t blocks = tree_edges.size() + cycles.size();
  parent_block_.assign(n, -1);
  parent_pos_.assign(n, 0);
  depth_.assign(n, -1);
  top_.assign(blocks, -1);
  top_pos_.assign(blocks, 0);
  length_.assign(blocks, 2);

  std::vector<std::vector<int>> incident(n);
  for (std::size_t b = 0; b < tree_edges.size(); ++b) {
    incident[idx(tree_edges[b].first)].push_back(static_cast<int>(b));
    incident[idx(tree_edges[b].second)].push_back(static_cast<int>(b));
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto b = tree_edges.size() + c;
    length_[b] = static_cast<int>(cycles[c].size());
    for (const Vertex v : cycles[c]) incident[idx(v)].push_back(static_cast<int>(b));
  }

  std::vector<char> seen_block(blocks, 0);
  std::deque<Vertex> queue{root};
  depth_[idx(root)] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const int b : incident[idx(v)]) {
      const auto bi = static_cast<std::size_t>(b);
      if (seen_block[bi]) continue;
      seen_block[bi] = 1;
      top_[bi] = v;
      auto visit_member = [&](int pos, Vertex w) {
        if (w == v) {
          top_pos_[bi] = pos;
          return;
        }
        if (depth_[idx(w)] != -1) throw Error(Errc::NotACactus, "blocks form a cycle");
        parent_block_[idx(w)] = b;
        parent_pos_[idx(w)] = pos;
        depth_[idx(w)] = depth_[idx(v)] + 1;
        queue.push_back(w);
      };
      if (b < tree_blocks_) {
        visit_member(0, tree_edges[bi].first);
        visit_member(1, tree_edges[bi].second);
      } else {
        const auto& seq = cycles[bi - tree_edges.size()];
        for (std::size_t p = 0; p < seq.size(); ++p) visit_member(static_cast<int>(p), seq[p]);
      }
    }
  }
}

template <typename Fn>
void BlockTree::walk(Vertex u, Vertex v, Fn&& visit) const {
  Vertex x = u;
  Vertex y = v;
  if (depth_[idx(x)] < 0 || depth_[idx(y)] < 0) throw std::logic_error("vertex not in block tree");
  while (x != y) {
    const int bx = parent_block_[idx(x)];
    const int by = parent_block_[idx(y)];
    if (depth_[idx(x)] == depth_[idx(y)] && bx == by) {
      visit(true, BlockStep{bx, x, y, parent_pos_[idx(x)], parent_pos_[idx(y)]});
      break;
    }
    if (depth_[idx(x)] >= depth_[idx(y)]) {
      const auto b = static_cast<std::size_t>(bx);
      visit(true, BlockStep{bx, x, top_[b], parent_pos_[idx(x)], top_pos_[b]});
      x = top_[b];
    } else {
      const auto b = static_cast<std::size_t>(by);
      visit(false, BlockStep{by, top_[b], y, top_pos_[b], parent_pos_[idx(y)]});
      y = top_[b];
    }
  }
}

std::vector<BlockStep> BlockTree::path(Vertex u, Vertex v) const {
  std::vector<BlockStep> from_u;
  std::vector<BlockStep> from_v;
  walk(u, v, [&](bool u_side, const BlockStep& step) { (u_side ? from_u : from_v).push_back(step); });
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

std::uint64_t BlockTree::separating_cuts(Vertex u, Vertex v) const {
  std::uint64_t total = 0;
  walk(u, v, [&](bool, const BlockStep& step) {
    if (!is_cycle(step.block)) {
      total += 1;
      return;
    }
    const auto len = static_cast<std::uint64_t>(length_[static_cast<std::size_t>(step.block)]);
    const auto p = static_cast<std::uint64_t>(std::abs(step.entry_pos - step.exit_pos));
    total += p * (len - p);
  });
  return total;
}

// ---------------------------------------------------------------------------
// CactusGraph

CactusGraph CactusGraph::from_edges(int vertex_count, std::span<const VertexPair> edges, int k,
                                    std::vector<Vertex> pi) {
  if (vertex_count < 1) throw Error(Errc::MalformedInput, "cactus needs at least one vertex");
  if (k < 1) throw Error(Errc::MalformedInput, "connectivity k must be >= 1");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(Errc::MalformedInput, "edge endpoint out of range");
    }
    if (u == v) throw Error(Errc::MalformedInput, "self-loop on vertex " + std::to_string(u + 1));
  }

  // connectivity
  {
    std::vector<Vertex> parent(static_cast<std::size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
      return x;
    };
    int components = vertex_count;
    for (const auto& [u, v] : edges) {
      const Vertex a = find(u);
      const Vertex b = find(v);
      if (a != b) {
        parent[idx(a)] = b;
        --components;
      }
    }
    if (components != 1) throw Error(Errc::Disconnected, std::to_string(components) + " components");
  }

  CactusGraph g;
  g.n_ = vertex_count;
  g.k_ = k;

  struct Pending {
    int first_edge;
    bool is_cycle;
    VertexPair tree;
    std::vector<Vertex> seq;
  };
  std::vector<Pending> blocks;
  if (!edges.empty()) {
    for (auto& comp : biconnected_components(vertex_count, edges)) {
      const int first = *std::min_element(comp.edges.begin(), comp.edges.end());
      std::vector<Vertex> verts;
      for (const int e : comp.edges) {
        verts.push_back(edges[static_cast<std::size_t>(e)].first);
        verts.push_back(edges[static_cast<std::size_t>(e)].second);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      if (comp.edges.size() == 1 || (comp.edges.size() == 2 && verts.size() == 2)) {
        const auto [u, v] = edges[static_cast<std::size_t>(first)];
        blocks.push_back({first, false, {std::min(u, v), std::max(u, v)}, {}});
      } else if (comp.edges.size() == verts.size()) {
        blocks.push_back({first, true, {}, cycle_order(edges, comp.edges)});
      } else {
        throw Error(Errc::NotACactus, "block with " + std::to_string(verts.size()) + " vertices and " +
                                          std::to_string(comp.edges.size()) + " edges");
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Pending& a, const Pending& b) { return a.first_edge < b.first_edge; });

  for (const auto& b : blocks) {
    if (!b.is_cycle) g.edges_.push_back({b.tree.first, b.tree.second, EdgeKind::Tree, -1, -1});
  }
  g.tree_edges_ = static_cast<int>(g.edges_.size());
  for (auto& b : blocks) {
    if (!b.is_cycle) continue;
    const int cycle = static_cast<int>(g.cycles_.size());
    g.cycle_edge_offset_.push_back(static_cast<int>(g.edges_.size()));
    const auto len = b.seq.size();
    for (std::size_t p = 0; p < len; ++p) {
      g.edges_.push_back({b.seq[p], b.seq[(p + 1) % len], EdgeKind::Cycle, cycle, static_cast<int>(p)});
    }
    g.cycles_.push_back(std::move(b.seq));
  }

  g.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
    const auto& edge = g.edges_[static_cast<std::size_t>(e)];
    g.adjacency_[idx(edge.u)].emplace_back(edge.v, e);
    g.adjacency_[idx(edge.v)].emplace_back(edge.u, e);
  }

  if (pi.empty()) {
    pi.resize(static_cast<std::size_t>(vertex_count));
    std::iota(pi.begin(), pi.end(), 0);
  }
  std::vector<char> hit(static_cast<std::size_t>(vertex_count), 0);
  for (const Vertex c : pi) {
    if (c < 0 || c >= vertex_count) throw Error(Errc::MalformedInput, "pi maps outside the cactus");
    hit[idx(c)] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw Error(Errc::MalformedInput, "pi is not surjective onto cactus vertices");
  }
  g.pi_ = std::move(pi);

  const auto tree_pairs = g.tree_edge_pairs();
  g.blocks_ = BlockTree(vertex_count, tree_pairs, g.cycles_, 0);
  return g;
}

int CactusGraph::cycle_edge_index(int cycle, int position) const {
  return cycle_edge_offset_[static_cast<std::size_t>(cycle)] + position;
}

std::vector<VertexPair> CactusGraph::tree_edge_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(tree_edges_));
  for (int e = 0; e < tree_edges_; ++e) out.emplace_back(edges_[static_cast<std::size_t>(e)].u, edges_[static_cast<std::size_t>(e)].v);
  return out;
}

bool CactusGraph::is_singleton_cut(Vertex v) const {
  const auto& adj = adjacency_[idx(v)];
  if (adj.size() == 1) return edges_[static_cast<std::size_t>(adj[0].second)].kind == EdgeKind::Tree;
  if (adj.size() == 2) {
    const auto& a = edges_[static_cast<std::size_t>(adj[0].second)];
    const auto& b = edges_[static_cast<std::size_t>(adj[1].second)];
    return a.kind == EdgeKind::Cycle && b.kind == EdgeKind::Cycle && a.cycle == b.cycle;
  }
  return false;
}

std::uint64_t CactusGraph::min_cut_count() const noexcept {
  std::uint64_t total = static_cast<std::uint64_t>(tree_edges_);
  for (const auto& c : cycles_) {
    const auto len = static_cast<std::uint64_t>(c.size());
    total += len * (len - 1) / 2;
  }
  return total;
}

// ---------------------------------------------------------------------------
// cuts

std::vector<MinCutRef> enumerate_min_cuts(const CactusGraph& cactus) {
  std::vector<MinCutRef> cuts;
  cuts.reserve(cactus.min_cut_count());
  for (int e = 0; e < cactus.tree_edge_count(); ++e) cuts.emplace_back(TreeCut{e});
  for (int c = 0; c < static_cast<int>(cactus.cycles().size()); ++c) {
    const int len = static_cast<int>(cactus.cycles()[static_cast<std::size_t>(c)].size());
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) cuts.emplace_back(CycleCut{c, i, j});
    }
  }
  return cuts;
}

std::vector<char> cut_side_mask(const CactusGraph& cactus, const MinCutRef& cut) {
  int removed_a = -1;
  int removed_b = -1;
  if (const auto* t = std::get_if<TreeCut>(&cut)) {
    removed_a = t->edge;
  } else {
    const auto& c = std::get<CycleCut>(cut);
    removed_a = cactus.cycle_edge_index(c.cycle, c.i);
    removed_b = cactus.cycle_edge_index(c.cycle, c.j);
  }
  const auto n = static_cast<std::size_t>(cactus.vertex_count());
  std::vector<char> reached(n, 0);
  std::vector<Vertex> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : cactus.adjacent(v)) {
      if (e == removed_a || e == removed_b || reached[idx(w)]) continue;
      reached[idx(w)] = 1;
      stack.push_back(w);
    }
  }
  for (auto& r : reached) r = static_cast<char>(!r);
  return reached;
}

std::vector<Vertex> cut_side(const CactusGraph& cactus, const MinCutRef& cut) {
  const auto mask = cut_side_mask(cactus, cut);
  std::vector<Vertex> side;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) side.push_back(static_cast<Vertex>(v));
  }
  return side;
}

bool cuts_pair(const CactusGraph& cactus, const MinCutRef& cut, Vertex u, Vertex v) {
  const auto mask = cut_side_mask(cactus, cut);
  return mask[idx(u)] != mask[idx(v)];
}

std::uint64_t covered_cuts(const CactusGraph& cactus, Vertex u, Vertex v) {
  if (u == v) return 0;
  return cactus.blocks().separating_cuts(u, v);
}

int doubled_cut_weight(const CactusGraph& cactus, std::span<const char> side_mask) {
  int weight = 0;
  for (const auto& e : cactus.edges()) {
    if (side_mask[idx(e.u)] != side_mask[idx(e.v)]) weight += e.kind == EdgeKind::Tree ? 2 * cactus.k() : cactus.k();
  }
  return weight;
}

}  // namespace wcap
