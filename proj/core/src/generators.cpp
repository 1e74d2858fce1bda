#include "wcap/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wcap/error.hpp"
#include "wcap/rng.hpp"

namespace wcap {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, RngStream stream) {
  std::uint64_t state = seed ^ (static_cast<std::uint64_t>(stream) * 0xd1b54a32d192ed03ULL);
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state))};
  engine_.seed(seq);
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + x % range;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::poisson(double mean) {
  // Sum of Poisson(<= 16) draws keeps exp() away from underflow.
  int total = 0;
  while (mean > 0.0) {
    const double part = std::min(mean, 16.0);
    mean -= part;
    const double limit = std::exp(-part);
    double p = unit();
    while (p > limit) {
      ++total;
      p *= unit();
    }
  }
  return total;
}

CactusGraph generate_cactus(int n, int cycles, std::uint64_t seed) {
  if (cycles < 1 || n <= cycles || n < 2 * cycles + 1) {
    throw Error(Errc::InvalidParams, "cannot build " + std::to_string(cycles) + " cycles on " + std::to_string(n) + " vertices");
  }
  Rng rng(seed, RngStream::Structure);
  const double mean = static_cast<double>(n) / cycles;
  std::vector<VertexPair> edges;
  int used = 0;
  for (int c = 0; c < cycles; ++c) {
    const int later = cycles - c - 1;
    const int remaining = n - used;
    const int min_new = c == 0 ? 3 : 2;
    const int max_new = remaining - 2 * later;
    int fresh = max_new;
    if (later > 0) {
      // A draw is the cycle length; later cycles also reuse one vertex.
      const int shared = c == 0 ? 0 : 1;
      int attempt = 0;
      for (; attempt < 1000; ++attempt) {
        const int draw = rng.poisson(mean) - shared;
        if (draw >= min_new && draw <= max_new) {
          fresh = draw;
          break;
        }
      }
      if (attempt == 1000) fresh = std::clamp(rng.poisson(mean) - shared, min_new, max_new);
    }
    std::vector<Vertex> seq;
    if (c > 0) seq.push_back(static_cast<Vertex>(rng.uniform(0, static_cast<std::uint64_t>(used - 1))));
    for (int i = 0; i < fresh; ++i) seq.push_back(used + i);
    used += fresh;
    for (std::size_t i = 0; i < seq.size(); ++i) edges.emplace_back(seq[i], seq[(i + 1) % seq.size()]);
  }
  return CactusGraph::from_edges(n, edges, 2);
}

CactusGraph generate_special(SpecialKind kind, int n) {
  std::vector<VertexPair> edges;
  if (kind == SpecialKind::Cycle) {
    if (n < 3) throw Error(Errc::InvalidParams, "a cycle needs at least 3 vertices");
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  } else {
    if (n < 2) throw Error(Errc::InvalidParams, "a star needs at least 2 vertices");
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  }
  return CactusGraph::from_edges(n, edges, 2);
}

CostDistribution CostDistribution::parse(std::string_view name, bool scale) {
  CostDistribution d;
  d.scale_to_unit = scale;
  if (name == "u2") {
    d.kind = Kind::U2;
  } else if (name == "u9") {
    d.kind = Kind::U9;
  } else if (name == "u99") {
    d.kind = Kind::U99;
  } else if (name == "u100000") {
    d.kind = Kind::U100000;
  } else {
    throw Error(Errc::InvalidParams, "unknown cost distribution '" + std::string(name) + "'");
  }
  return d;
}

std::string CostDistribution::name() const {
  switch (kind) {
    case Kind::U2: return "u2";
    case Kind::U9: return "u9";
    case Kind::U99: return "u99";
    case Kind::U100000: return "u100000";
    case Kind::FromFile: return "file";
  }
  return "?";
}

std::int64_t CostDistribution::max_value() const {
  switch (kind) {
    case Kind::U2: return 2;
    case Kind::U9: return 9;
    case Kind::U99: return 99;
    case Kind::U100000: return 100000;
    case Kind::FromFile: break;
  }
  throw Error(Errc::InvalidParams, "file costs are not drawn");
}

std::vector<RawLink> generate_raw_links(const CactusGraph& cactus, const CostDistribution& dist, std::uint64_t seed) {
  const std::int64_t hi = dist.max_value();
  const int n = cactus.vertex_count();
  std::vector<Vertex> orig(static_cast<std::size_t>(n), -1);
  for (std::size_t o = cactus.pi().size(); o-- > 0;) orig[static_cast<std::size_t>(cactus.pi()[o])] = static_cast<Vertex>(o);

  Rng rng(seed, RngStream::Costs);
  std::vector<RawLink> links;
  links.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2);
  std::int64_t largest = 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto c = static_cast<std::int64_t>(rng.uniform(1, static_cast<std::uint64_t>(hi)));
      largest = std::max(largest, c);
      links.push_back({orig[static_cast<std::size_t>(u)], orig[static_cast<std::size_t>(v)], Cost(c)});
    }
  }
  if (dist.scale_to_unit) {
    for (auto& l : links) l.cost = Cost::fraction(l.cost.num(), largest);
  }
  return links;
}

LinkGraph generate_link_costs(const CactusGraph& cactus, const CostDistribution& dist, std::uint64_t seed) {
  const auto raw = generate_raw_links(cactus, dist, seed);
  return build_link_graph(cactus, raw);
}

ExpandedGraph expand_cactus_to_graph(const CactusGraph& cactus, std::uint64_t seed, double gadget_probability,
                                     int max_vertices) {
  if (cactus.k() != 2) throw Error(Errc::Unsupported, "expansion is implemented for k = 2 only");
  const int n = cactus.vertex_count();
  Rng rng(seed, RngStream::Expansion);

  std::vector<char> gadget(static_cast<std::size_t>(n), 0);
  int total = n;
  for (Vertex v = 0; v < n; ++v) {
    if (total + 3 <= max_vertices && rng.bernoulli(gadget_probability)) {
      gadget[static_cast<std::size_t>(v)] = 1;
      total += 3;
    }
  }

  ExpandedGraph out;
  std::vector<Vertex> first(static_cast<std::size_t>(n));
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    first[static_cast<std::size_t>(v)] = next;
    const int size = gadget[static_cast<std::size_t>(v)] ? 4 : 1;
    for (int i = 0; i < size; ++i) out.pi.push_back(v);
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) out.graph.edges.push_back({next + i, next + j, 1});
    }
    next += size;
  }
  out.graph.vertex_count = next;

  auto member = [&](Vertex v) {
    const Vertex base = first[static_cast<std::size_t>(v)];
    return gadget[static_cast<std::size_t>(v)] ? base + static_cast<Vertex>(rng.uniform(0, 3)) : base;
  };
  auto two_members = [&](Vertex v) -> VertexPair {
    const Vertex base = first[static_cast<std::size_t>(v)];
    if (!gadget[static_cast<std::size_t>(v)]) return {base, base};
    const auto a = static_cast<Vertex>(rng.uniform(0, 3));
    auto b = static_cast<Vertex>(rng.uniform(0, 2));
    if (b >= a) ++b;
    return {base + a, base + b};
  };

  for (const auto& e : cactus.edges()) {
    if (e.kind == EdgeKind::Cycle) {
      out.graph.edges.push_back({member(e.u), member(e.v), 1});
      continue;
    }
    const auto [a1, a2] = two_members(e.u);
    const auto [b1, b2] = two_members(e.v);
    if (a1 == a2 && b1 == b2) {
      out.graph.edges.push_back({a1, b1, 2});
    } else {
      out.graph.edges.push_back({a1, b1, 1});
      out.graph.edges.push_back({a2, b2, 1});
    }
  }
  return out;
}

BruteForceCuts enumerate_min_cuts_brute_force(const WeightedGraph& graph) {
  const int n = graph.vertex_count;
  if (n > 16) throw Error(Errc::TooLarge, "brute-force cut enumeration is limited to 16 vertices");
  BruteForceCuts out;
  if (n < 2) return out;
  out.weight = std::numeric_limits<int>::max();
  const std::uint32_t count = 1U << (n - 1);
  for (std::uint32_t half = 1; half < count; ++half) {
    const std::uint32_t side = half << 1;  // vertex 0 is never on this side
    int w = 0;
    for (const auto& e : graph.edges) {
      if (((side >> e.u) & 1U) != ((side >> e.v) & 1U)) w += e.weight;
    }
    if (w < out.weight) {
      out.weight = w;
      out.sides.clear();
    }
    if (w == out.weight) out.sides.push_back(side);
  }
  return out;
}

bool verify_cactus_representation(const WeightedGraph& graph, const CactusGraph& cactus, const std::vector<Vertex>& pi) {
  if (graph.vertex_count > 16) throw Error(Errc::TooLarge, "brute-force cut enumeration is limited to 16 vertices");
  if (static_cast<int>(pi.size()) != graph.vertex_count) return false;
  for (const Vertex c : pi) {
    if (c < 0 || c >= cactus.vertex_count()) return false;
  }
  const auto brute = enumerate_min_cuts_brute_force(graph);
  if (brute.weight != cactus.k()) return false;

  const std::uint32_t all = graph.vertex_count == 32 ? ~0U : (1U << graph.vertex_count) - 1;
  std::vector<std::uint32_t> mapped;
  for (const auto& cut : enumerate_min_cuts(cactus)) {
    const auto mask = cut_side_mask(cactus, cut);
    std::uint32_t side = 0;
    for (std::size_t o = 0; o < pi.size(); ++o) {
      if (mask[static_cast<std::size_t>(pi[o])]) side |= 1U << o;
    }
    if (side & 1U) side = all & ~side;
    mapped.push_back(side);
  }
  std::sort(mapped.begin(), mapped.end());
  if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return false;
  return mapped == brute.sides;
}

}  // namespace wcap
