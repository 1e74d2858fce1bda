#include "wcap/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace wcap {

namespace {

constexpr int kTreeCapacity = 2;
constexpr int kCycleCapacity = 1;
constexpr int kLinkCapacity = 1;
constexpr int kNormalizedK = 2;

std::vector<VertexPair> endpoints(const LinkGraph& links, std::span<const LinkId> ids) {
  std::vector<VertexPair> out;
  out.reserve(ids.size());
  for (const LinkId id : ids) out.emplace_back(links.link(id).u, links.link(id).v);
  return out;
}

}  // namespace

FlowNetwork::FlowNetwork(const CactusGraph& cactus, std::span<const VertexPair> links)
    : arcs_(static_cast<std::size_t>(cactus.vertex_count())) {
  for (const auto& e : cactus.edges()) add_edge(e.u, e.v, e.kind == EdgeKind::Tree ? kTreeCapacity : kCycleCapacity, false);
  for (const auto& [a, b] : links) add_edge(a, b, kLinkCapacity, true);
}

void FlowNetwork::add_edge(Vertex a, Vertex b, int cap, bool link) {
  auto& from = arcs_[static_cast<std::size_t>(a)];
  auto& to = arcs_[static_cast<std::size_t>(b)];
  const int ia = static_cast<int>(from.size());
  const int ib = static_cast<int>(to.size());
  from.push_back({b, cap, ib, link});
  to.push_back({a, cap, ia, link});
}

// One BFS augmenting path; returns the amount pushed (0 if none).
int FlowNetwork::augment(Vertex s, Vertex t, bool allow_links) {
  const std::size_t n = arcs_.size();
  std::vector<std::pair<Vertex, int>> pred(n, {-1, -1});
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
    const Vertex x = queue.front();
    queue.pop_front();
    const auto& out = arcs_[static_cast<std::size_t>(x)];
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
      const Arc& a = out[static_cast<std::size_t>(i)];
      if (a.cap <= 0 || seen[static_cast<std::size_t>(a.to)] || (a.link && !allow_links)) continue;
      seen[static_cast<std::size_t>(a.to)] = 1;
      pred[static_cast<std::size_t>(a.to)] = {x, i};
      queue.push_back(a.to);
    }
  }
  if (!seen[static_cast<std::size_t>(t)]) return 0;

  int bottleneck = std::numeric_limits<int>::max();
  for (Vertex x = t; x != s;) {
    const auto [p, i] = pred[static_cast<std::size_t>(x)];
    bottleneck = std::min(bottleneck, arcs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)].cap);
    x = p;
  }
  for (Vertex x = t; x != s;) {
    const auto [p, i] = pred[static_cast<std::size_t>(x)];
    Arc& a = arcs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
    a.cap -= bottleneck;
    arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += bottleneck;
    x = p;
  }
  flow_ += bottleneck;
  return bottleneck;
}

bool FlowNetwork::exceeds_k(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("connectivity query needs distinct vertices");
  // A cactus has u-v connectivity exactly k, so at most two cactus-only
  // rounds are needed (each path carries at least k/2).
  while (flow_ < kNormalizedK) {
    if (augment(u, v, false) == 0) break;
  }
  return augment(u, v, true) > 0;
}

bool connectivity_exceeds_k(const CactusGraph& cactus, std::span<const VertexPair> links, Vertex u, Vertex v) {
  FlowNetwork net(cactus, links);
  return net.exceeds_k(u, v);
}

bool connectivity_exceeds_k(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution,
                            Vertex u, Vertex v) {
  return connectivity_exceeds_k(cactus, endpoints(links, solution), u, v);
}

bool is_disposable(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution, LinkId id) {
  std::vector<LinkId> rest;
  rest.reserve(solution.size());
  for (const LinkId x : solution) {
    if (x != id) rest.push_back(x);
  }
  const auto& l = links.link(id);
  return connectivity_exceeds_k(cactus, links, rest, l.u, l.v);
}

bool is_swap_valid(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> solution,
                   std::span<const LinkId> in, std::span<const LinkId> out) {
  if (out.empty()) return true;
  std::vector<LinkId> next;
  next.reserve(solution.size() + in.size());
  for (const LinkId x : solution) {
    if (std::find(out.begin(), out.end(), x) == out.end()) next.push_back(x);
  }
  next.insert(next.end(), in.begin(), in.end());
  const auto next_pairs = endpoints(links, next);
  return std::all_of(out.begin(), out.end(), [&](LinkId id) {
    const auto& l = links.link(id);
    return connectivity_exceeds_k(cactus, next_pairs, l.u, l.v);
  });
}

}  // namespace wcap
