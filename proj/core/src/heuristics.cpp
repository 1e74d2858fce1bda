#include "wcap/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <tuple>

#include "wcap/dynamic_cactus.hpp"
#include "wcap/error.hpp"
#include "wcap/feasibility.hpp"

namespace wcap {

namespace {

struct Candidate {
  Cost ratio;
  Cost cost;
  LinkId id;
  std::uint64_t cuts;

  // Heap order: the top is the smallest (ratio, cost, id).
  friend bool operator<(const Candidate& a, const Candidate& b) {
    return std::tie(a.ratio, a.cost, a.id) > std::tie(b.ratio, b.cost, b.id);
  }
};

}  // namespace

Solution gwc(const CactusGraph& cactus, const LinkGraph& links) {
  DynamicCactus dc(cactus);
  std::priority_queue<Candidate> heap;
  for (const LinkId id : links.ids()) {
    const auto& l = links.link(id);
    const auto cuts = dc.covered_cuts(l.u, l.v);
    if (cuts > 0) heap.push({l.cost.divided_by(cuts), l.cost, id, cuts});
  }

  // Coverage only shrinks as the cactus contracts, so stale heap keys are
  // lower bounds. A popped entry whose key is still current is the argmin.
  std::vector<LinkId> chosen;
  while (!dc.is_fully_augmented()) {
    if (heap.empty()) throw Error(Errc::Infeasible, std::to_string(dc.remaining_cuts()) + " cuts cannot be covered");
    Candidate top = heap.top();
    heap.pop();
    const auto& l = links.link(top.id);
    const auto cuts = dc.covered_cuts(l.u, l.v);
    if (cuts == 0) continue;
    if (cuts != top.cuts) {
      top.cuts = cuts;
      top.ratio = l.cost.divided_by(cuts);
      heap.push(top);
      continue;
    }
    dc.add_link_and_contract(l);
    chosen.push_back(top.id);
  }
  auto s = make_solution(links, std::move(chosen), {"gwc", 0, 0.0});
  s.valid = true;
  return s;
}

std::vector<LinkId> kruskal_msf(const LinkGraph& links) {
  std::vector<LinkId> order = links.ids();
  std::stable_sort(order.begin(), order.end(),
                   [&](LinkId a, LinkId b) { return links.link(a).cost < links.link(b).cost; });
  std::vector<Vertex> parent(static_cast<std::size_t>(links.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  std::vector<LinkId> forest;
  for (const LinkId id : order) {
    const Vertex a = find(links.link(id).u);
    const Vertex b = find(links.link(id).v);
    if (a == b) continue;
    parent[static_cast<std::size_t>(a)] = b;
    forest.push_back(id);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

Solution mst_connect(const CactusGraph& cactus, const LinkGraph& links) {
  std::vector<LinkId> current = kruskal_msf(links);
  if (!is_augmentation(cactus, links, current)) {
    throw Error(Errc::Infeasible, "minimum spanning forest leaves cuts uncovered");
  }
  std::vector<LinkId> order = current;
  std::sort(order.begin(), order.end(), [&](LinkId a, LinkId b) {
    const auto& ca = links.link(a).cost;
    const auto& cb = links.link(b).cost;
    if (ca != cb) return ca > cb;
    return a > b;
  });
  for (const LinkId id : order) {
    if (is_disposable(cactus, links, current, id)) std::erase(current, id);
  }
  auto s = make_solution(links, std::move(current), {"mst", 0, 0.0});
  s.valid = true;
  return s;
}

Solution smc(const CactusGraph& cactus, const LinkGraph& links) {
  DynamicCactus dc(cactus);
  std::vector<LinkId> chosen;
  while (!dc.is_fully_augmented()) {
    bool progress = false;
    for (Vertex v = 0; v < cactus.vertex_count() && !dc.is_fully_augmented(); ++v) {
      std::optional<LinkId> best;
      for (const LinkId id : links.incident(v)) {
        const auto& l = links.link(id);
        if (best && std::tie(links.link(*best).cost, *best) <= std::tie(l.cost, id)) continue;
        if (dc.covered_cuts(l.u, l.v) == 0) continue;
        best = id;
      }
      if (!best) continue;
      dc.add_link_and_contract(links.link(*best));
      chosen.push_back(*best);
      progress = true;
    }
    if (!progress) throw Error(Errc::Infeasible, std::to_string(dc.remaining_cuts()) + " cuts cannot be covered");
  }
  auto s = make_solution(links, std::move(chosen), {"smc", 0, 0.0});
  s.valid = true;
  return s;
}

}  // namespace wcap
