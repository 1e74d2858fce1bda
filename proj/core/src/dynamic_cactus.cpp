#include "wcap/dynamic_cactus.hpp"

#include <algorithm>
#include <numeric>

namespace wcap {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::uint64_t pairs(std::size_t len) { return static_cast<std::uint64_t>(len) * (len - 1) / 2; }

Vertex find_root(std::vector<Vertex>& parent, Vertex x) {
  while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
  return x;
}

}  // namespace

DynamicCactus::DynamicCactus(const CactusGraph& base)
    : rep_(static_cast<std::size_t>(base.vertex_count())),
      tree_edges_(base.tree_edge_pairs()),
      cycles_(base.cycles()),
      k_(base.k()) {
  std::iota(rep_.begin(), rep_.end(), 0);
  rebuild();
}

void DynamicCactus::rebuild() {
  remaining_ = tree_edges_.size();
  for (const auto& c : cycles_) remaining_ += pairs(c.size());
  blocks_ = BlockTree(static_cast<int>(rep_.size()), tree_edges_, cycles_, rep_[0]);
}

std::uint64_t DynamicCactus::covered_cuts(Vertex u, Vertex v) const {
  const Vertex ru = representative(u);
  const Vertex rv = representative(v);
  if (ru == rv) return 0;
  return blocks_.separating_cuts(ru, rv);
}

std::uint64_t DynamicCactus::add_link_and_contract(Vertex u, Vertex v) {
  const Vertex ru = representative(u);
  const Vertex rv = representative(v);
  if (ru == rv) return 0;

  const auto steps = blocks_.path(ru, rv);
  std::vector<Vertex> parent = rep_;
  auto unite = [&](Vertex a, Vertex b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[idx(a)] = b;  // smaller id becomes representative
  };

  std::vector<char> drop_tree(tree_edges_.size(), 0);
  std::vector<char> drop_cycle(cycles_.size(), 0);
  std::vector<VertexPair> new_tree;
  std::vector<std::vector<Vertex>> new_cycles;

  for (const auto& step : steps) {
    unite(step.entry, step.exit);
    if (!blocks_.is_cycle(step.block)) {
      drop_tree[static_cast<std::size_t>(step.block)] = 1;
      continue;
    }
    const auto c = static_cast<std::size_t>(blocks_.cycle_of(step.block));
    drop_cycle[c] = 1;
    const auto& seq = cycles_[c];
    const int len = static_cast<int>(seq.size());
    const int a = std::min(step.entry_pos, step.exit_pos);
    const int b = std::max(step.entry_pos, step.exit_pos);
    // Arc a..b closes into a cycle of (b - a) edges once seq[a] and seq[b]
    // are identified; likewise the arc b..a (wrapping).
    auto emit = [&](std::vector<Vertex> arc) {
      if (arc.size() == 2) {
        new_tree.emplace_back(arc[0], arc[1]);
      } else if (arc.size() >= 3) {
        new_cycles.push_back(std::move(arc));
      }
    };
    std::vector<Vertex> inner;
    for (int p = a; p < b; ++p) inner.push_back(seq[static_cast<std::size_t>(p)]);
    std::vector<Vertex> outer;
    for (int p = b; p < len; ++p) outer.push_back(seq[static_cast<std::size_t>(p)]);
    for (int p = 0; p < a; ++p) outer.push_back(seq[static_cast<std::size_t>(p)]);
    emit(std::move(inner));
    emit(std::move(outer));
  }

  for (std::size_t v = 0; v < parent.size(); ++v) rep_[v] = find_root(parent, static_cast<Vertex>(v));
  auto relabel = [&](Vertex x) { return rep_[idx(x)]; };

  std::vector<VertexPair> tree;
  for (std::size_t e = 0; e < tree_edges_.size(); ++e) {
    if (!drop_tree[e]) tree.push_back(tree_edges_[e]);
  }
  tree.insert(tree.end(), new_tree.begin(), new_tree.end());
  for (auto& [a, b] : tree) {
    a = relabel(a);
    b = relabel(b);
  }
  std::erase_if(tree, [](const VertexPair& e) { return e.first == e.second; });

  std::vector<std::vector<Vertex>> cycles;
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    if (!drop_cycle[c]) cycles.push_back(std::move(cycles_[c]));
  }
  for (auto& c : new_cycles) cycles.push_back(std::move(c));
  for (auto& c : cycles) {
    for (auto& x : c) x = relabel(x);
  }

  const std::uint64_t before = remaining_;
  tree_edges_ = std::move(tree);
  cycles_ = std::move(cycles);
  rebuild();
  return before - remaining_;
}

CactusGraph DynamicCactus::snapshot() const {
  std::vector<Vertex> dense(rep_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < rep_.size(); ++v) {
    if (rep_[v] == static_cast<Vertex>(v)) dense[v] = next++;
  }
  std::vector<VertexPair> edges;
  for (const auto& [a, b] : tree_edges_) edges.emplace_back(dense[idx(a)], dense[idx(b)]);
  for (const auto& c : cycles_) {
    for (std::size_t p = 0; p < c.size(); ++p) edges.emplace_back(dense[idx(c[p])], dense[idx(c[(p + 1) % c.size()])]);
  }
  std::vector<Vertex> pi(rep_.size());
  for (std::size_t v = 0; v < rep_.size(); ++v) pi[v] = dense[idx(rep_[v])];
  return CactusGraph::from_edges(next, edges, k_, std::move(pi));
}

bool is_augmentation(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> ids) {
  DynamicCactus dc(cactus);
  for (const LinkId id : ids) {
    dc.add_link_and_contract(links.link(id));
    if (dc.is_fully_augmented()) return true;
  }
  return dc.is_fully_augmented();
}

}  // namespace wcap
