#include "wcap/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <stdexcept>

#include "wcap/feasibility.hpp"
#include "wcap/heuristics.hpp"

namespace wcap {

std::size_t PathHash::operator()(const std::vector<Vertex>& path) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Vertex v : path) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 0x100000001b3ULL;
  }
  return h;
}

LinkGraph reduce_link_set(const LinkGraph& links, std::span<const LinkId> keep, int forests) {
  if (forests < 1) throw std::invalid_argument("need at least one spanning forest");
  std::vector<LinkId> chosen(keep.begin(), keep.end());
  LinkGraph remaining = links;
  for (int f = 0; f < forests && !remaining.empty(); ++f) {
    const auto forest = kruskal_msf(remaining);
    chosen.insert(chosen.end(), forest.begin(), forest.end());
    std::vector<LinkId> rest;
    std::set_difference(remaining.ids().begin(), remaining.ids().end(), forest.begin(), forest.end(),
                        std::back_inserter(rest));
    remaining = links.restricted(rest);
  }
  return links.restricted(chosen);
}

namespace {

class AlternatingSearch {
 public:
  AlternatingSearch(const CactusGraph& cactus, const LinkGraph& reduced, std::span<const LinkId> solution,
                    int depth, const PathCache* cache)
      : cactus_(cactus),
        reduced_(reduced),
        depth_(depth),
        cache_(cache),
        in_solution_(reduced.links().size(), 0),
        solution_degree_(static_cast<std::size_t>(cactus.vertex_count()), 0),
        on_path_(static_cast<std::size_t>(cactus.vertex_count()), 0) {
    for (const LinkId id : solution) {
      in_solution_[static_cast<std::size_t>(id)] = 1;
      ++solution_degree_[static_cast<std::size_t>(reduced.link(id).u)];
      ++solution_degree_[static_cast<std::size_t>(reduced.link(id).v)];
    }
  }

  std::vector<SwapCandidate> run() {
    for (Vertex s = 0; s < cactus_.vertex_count(); ++s) {
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s, -1);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(found_.begin(), found_.end(), [](const SwapCandidate& a, const SwapCandidate& b) {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.path < b.path;
    });
    return std::move(found_);
  }

 private:
  void extend(Vertex x, int last_kind) {
    for (const LinkId id : reduced_.incident(x)) {
      const auto& l = reduced_.link(id);
      const Vertex y = l.u == x ? l.v : l.u;
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      const int kind = in_solution_[static_cast<std::size_t>(id)];
      if (kind == last_kind) continue;

      path_.push_back(y);
      edges_.push_back(id);
      on_path_[static_cast<std::size_t>(y)] = 1;
      if (kind) {
        gain_ -= l.cost;
        ++out_count_;
      } else {
        gain_ += l.cost;
      }

      consider();
      if (static_cast<int>(edges_.size()) < depth_) extend(y, kind);

      if (kind) {
        gain_ += l.cost;
        --out_count_;
      } else {
        gain_ -= l.cost;
      }
      on_path_[static_cast<std::size_t>(y)] = 0;
      edges_.pop_back();
      path_.pop_back();
    }
  }

  bool non_trivial() const {
    for (std::size_t i = 0; i < path_.size(); ++i) {
      int delta = 0;
      bool touches_out = false;
      auto account = [&](LinkId id) {
        if (in_solution_[static_cast<std::size_t>(id)]) {
          --delta;
          touches_out = true;
        } else {
          ++delta;
        }
      };
      if (i > 0) account(edges_[i - 1]);
      if (i < edges_.size()) account(edges_[i]);
      if (!touches_out) continue;
      const Vertex v = path_[i];
      if (cactus_.is_singleton_cut(v) && solution_degree_[static_cast<std::size_t>(v)] + delta <= 0) return false;
    }
    return true;
  }

  void consider() {
    if (out_count_ == 0 || gain_ >= Cost(0)) return;
    if (!non_trivial()) return;
    std::vector<Vertex> key = path_;
    std::vector<LinkId> ordered = edges_;
    if (std::lexicographical_compare(path_.rbegin(), path_.rend(), path_.begin(), path_.end())) {
      std::reverse(key.begin(), key.end());
      std::reverse(ordered.begin(), ordered.end());
    }
    if (cache_ != nullptr && cache_->contains(key)) return;
    if (!seen_.insert(key).second) return;
    SwapCandidate c;
    for (const LinkId id : ordered) (in_solution_[static_cast<std::size_t>(id)] ? c.l_out : c.l_in).push_back(id);
    c.gain = gain_;
    c.path = std::move(key);
    found_.push_back(std::move(c));
  }

  const CactusGraph& cactus_;
  const LinkGraph& reduced_;
  int depth_;
  const PathCache* cache_;
  std::vector<char> in_solution_;
  std::vector<int> solution_degree_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<LinkId> edges_;
  Cost gain_;
  int out_count_ = 0;
  std::unordered_set<std::vector<Vertex>, PathHash> seen_;
  std::vector<SwapCandidate> found_;
};

}  // namespace

std::vector<SwapCandidate> get_swap_candidates(const CactusGraph& cactus, const LinkGraph& reduced,
                                               std::span<const LinkId> solution, int depth,
                                               const PathCache* cache) {
  if (depth < 1) throw std::invalid_argument("swap depth must be positive");
  return AlternatingSearch(cactus, reduced, solution, depth, cache).run();
}

Solution local_search(const CactusGraph& cactus, const LinkGraph& links, const Solution& start, int depth,
                      LocalSearchStats* stats, std::optional<std::chrono::steady_clock::time_point> deadline) {
  LocalSearchStats local;
  LocalSearchStats& st = stats != nullptr ? *stats : local;
  std::vector<LinkId> current = start.link_ids;
  std::string name = start.meta.algorithm.empty() ? "ls" : start.meta.algorithm + "+ls";
  if (deadline && std::chrono::steady_clock::now() >= *deadline) {
    st.timed_out = true;
    auto s = make_solution(links, std::move(current), {name + std::to_string(depth), start.meta.seed, 0.0});
    s.valid = start.valid;
    return s;
  }
  const LinkGraph reduced = reduce_link_set(links, current, 2);
  PathCache cache;

  auto candidates = get_swap_candidates(cactus, reduced, current, depth, &cache);
  ++st.regenerations;
  std::size_t next = 0;
  while (next < candidates.size()) {
    if (deadline && std::chrono::steady_clock::now() >= *deadline) {
      st.timed_out = true;
      break;
    }
    const SwapCandidate& cand = candidates[next++];
    if (cache.contains(cand.path)) continue;
    if (!is_swap_valid(cactus, links, current, cand.l_in, cand.l_out)) {
      cache.insert(cand.path);
      ++st.rejected;
      continue;
    }
    assert(cand.gain < Cost(0));
    assert(static_cast<int>(cand.l_in.size() + cand.l_out.size()) <= depth);
    assert(!cand.l_out.empty());
    std::erase_if(current, [&](LinkId id) {
      return std::find(cand.l_out.begin(), cand.l_out.end(), id) != cand.l_out.end();
    });
    current.insert(current.end(), cand.l_in.begin(), cand.l_in.end());
    std::sort(current.begin(), current.end());
    ++st.swaps;

    candidates = get_swap_candidates(cactus, reduced, current, depth, &cache);
    ++st.regenerations;
    next = 0;
  }

  auto s = make_solution(links, std::move(current), {name + std::to_string(depth), start.meta.seed, 0.0});
  s.valid = start.valid;
  return s;
}

}  // namespace wcap
