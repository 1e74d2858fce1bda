#include "wcap/link_graph.hpp"

#include <algorithm>
#include <string>

#include "wcap/error.hpp"

namespace wcap {

LinkGraph::LinkGraph(int vertex_count, std::vector<Link> links) : n_(vertex_count) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    auto& l = links[i];
    if (l.id != static_cast<LinkId>(i)) throw Error(Errc::InvalidParams, "link ids must be dense and ordered");
    if (l.u == l.v) throw Error(Errc::InvalidParams, "self-loop link");
    if (l.u < 0 || l.v < 0 || l.u >= n_ || l.v >= n_) throw Error(Errc::UnknownVertex, "link endpoint out of range");
    if (l.cost < Cost(0)) throw Error(Errc::InvalidParams, "negative link cost");
    if (l.u > l.v) {
      std::swap(l.u, l.v);
      std::swap(l.orig_u, l.orig_v);
    }
  }
  active_.resize(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) active_[i] = static_cast<LinkId>(i);
  links_ = std::make_shared<const std::vector<Link>>(std::move(links));
  index();
  if (by_pair_.size() != active_.size()) throw Error(Errc::InvalidParams, "parallel links in link graph");
}

std::uint64_t LinkGraph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

void LinkGraph::index() {
  member_.assign(links_->size(), 0);
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  by_pair_.clear();
  by_pair_.reserve(active_.size());
  for (const LinkId id : active_) {
    const auto& l = link(id);
    member_[static_cast<std::size_t>(id)] = 1;
    adjacency_[static_cast<std::size_t>(l.u)].push_back(id);
    adjacency_[static_cast<std::size_t>(l.v)].push_back(id);
    by_pair_.emplace(key(l.u, l.v), id);
  }
}

bool LinkGraph::contains(LinkId id) const {
  return id >= 0 && static_cast<std::size_t>(id) < member_.size() && member_[static_cast<std::size_t>(id)];
}

std::optional<LinkId> LinkGraph::find(Vertex u, Vertex v) const {
  const auto it = by_pair_.find(key(u, v));
  if (it == by_pair_.end()) return std::nullopt;
  return it->second;
}

LinkGraph LinkGraph::restricted(std::span<const LinkId> keep) const {
  LinkGraph out;
  out.n_ = n_;
  out.links_ = links_;
  for (const LinkId id : keep) {
    if (contains(id)) out.active_.push_back(id);
  }
  std::sort(out.active_.begin(), out.active_.end());
  out.active_.erase(std::unique(out.active_.begin(), out.active_.end()), out.active_.end());
  out.index();
  return out;
}

LinkGraph build_link_graph(const CactusGraph& cactus, std::span<const RawLink> raw) {
  const auto& pi = cactus.pi();
  std::unordered_map<std::uint64_t, std::size_t> best;  // cactus pair -> raw index
  best.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    if (r.orig_u < 0 || r.orig_v < 0 || static_cast<std::size_t>(r.orig_u) >= pi.size() ||
        static_cast<std::size_t>(r.orig_v) >= pi.size()) {
      throw Error(Errc::UnknownVertex, "link endpoint " + std::to_string(std::max(r.orig_u, r.orig_v) + 1) +
                                           " is not an original vertex");
    }
    if (r.cost < Cost(0)) throw Error(Errc::MalformedInput, "negative link cost");
    Vertex u = pi[static_cast<std::size_t>(r.orig_u)];
    Vertex v = pi[static_cast<std::size_t>(r.orig_v)];
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    const std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    const auto [it, inserted] = best.emplace(k, i);
    if (!inserted && r.cost < raw[it->second].cost) it->second = i;
  }

  std::vector<std::size_t> kept;
  kept.reserve(best.size());
  for (const auto& [k, i] : best) kept.push_back(i);
  std::sort(kept.begin(), kept.end());

  std::vector<Link> links;
  links.reserve(kept.size());
  for (const std::size_t i : kept) {
    const auto& r = raw[i];
    Link l;
    l.id = static_cast<LinkId>(links.size());
    l.u = pi[static_cast<std::size_t>(r.orig_u)];
    l.v = pi[static_cast<std::size_t>(r.orig_v)];
    l.orig_u = r.orig_u;
    l.orig_v = r.orig_v;
    l.cost = r.cost;
    l.raw_index = i;
    links.push_back(l);
  }
  return LinkGraph(cactus.vertex_count(), std::move(links));
}

Cost total_cost(const LinkGraph& links, std::span<const LinkId> ids) {
  Cost sum;
  for (const LinkId id : ids) sum += links.link(id).cost;
  return sum;
}

Solution make_solution(const LinkGraph& links, std::vector<LinkId> ids, SolutionMeta meta) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Solution s;
  s.total_cost = total_cost(links, ids);
  s.link_ids = std::move(ids);
  s.meta = std::move(meta);
  return s;
}

bool validate_solution(const CactusGraph& cactus, const LinkGraph& links, std::span<const LinkId> ids) {
  for (const auto& cut : enumerate_min_cuts(cactus)) {
    const auto side = cut_side_mask(cactus, cut);
    const bool covered = std::any_of(ids.begin(), ids.end(), [&](LinkId id) {
      const auto& l = links.link(id);
      return side[static_cast<std::size_t>(l.u)] != side[static_cast<std::size_t>(l.v)];
    });
    if (!covered) return false;
  }
  return true;
}

std::vector<RawLink> map_solution_back(const Solution& solution, const LinkGraph& links) {
  std::vector<RawLink> out;
  out.reserve(solution.link_ids.size());
  for (const LinkId id : solution.link_ids) {
    const auto& l = links.link(id);
    out.push_back({l.orig_u, l.orig_v, l.cost});
  }
  return out;
}

}  // namespace wcap
