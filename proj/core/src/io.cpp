#include "wcap/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wcap/error.hpp"

namespace wcap {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == '#') continue;
    fn(line_no, tokens);
  }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": " + what);
}

long long to_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) fail(line_no, "expected integer, got '" + std::string(token) + "'");
  return value;
}

Vertex to_vertex(std::string_view token, std::size_t line_no) {
  const long long v = to_int(token, line_no);
  if (v < 1 || v > (1LL << 30)) fail(line_no, "vertex id out of range: " + std::string(token));
  return static_cast<Vertex>(v - 1);
}

}  // namespace

CactusGraph parse_cactus(std::string_view text, std::string_view pi_text) {
  long long n = -1;
  long long m = -1;
  long long k = -1;
  std::vector<VertexPair> edges;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t[0] == "p") {
      if (n >= 0) fail(line_no, "duplicate problem line");
      if (t.size() != 5 || t[1] != "cactus") fail(line_no, "expected 'p cactus <n> <m> <k>'");
      n = to_int(t[2], line_no);
      m = to_int(t[3], line_no);
      k = to_int(t[4], line_no);
      if (n < 1 || m < 0 || k < 1) fail(line_no, "invalid problem line values");
    } else if (t[0] == "e") {
      if (n < 0) fail(line_no, "edge before problem line");
      if (t.size() != 3) fail(line_no, "expected 'e <u> <v>'");
      const Vertex u = to_vertex(t[1], line_no);
      const Vertex v = to_vertex(t[2], line_no);
      if (u >= n || v >= n) fail(line_no, "edge endpoint exceeds n");
      edges.emplace_back(u, v);
    } else {
      fail(line_no, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  if (n < 0) throw Error(Errc::MalformedInput, "missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(Errc::MalformedInput, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::vector<Vertex> pi;
  if (!pi_text.empty()) pi = parse_pi(pi_text);
  return CactusGraph::from_edges(static_cast<int>(n), edges, static_cast<int>(k), std::move(pi));
}

std::vector<Vertex> parse_pi(std::string_view text) {
  std::vector<Vertex> pi;
  std::vector<char> seen;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t.size() != 2) fail(line_no, "expected '<orig_vertex> <cactus_vertex>'");
    const Vertex orig = to_vertex(t[0], line_no);
    const Vertex cac = to_vertex(t[1], line_no);
    const auto o = static_cast<std::size_t>(orig);
    if (o >= pi.size()) {
      pi.resize(o + 1, -1);
      seen.resize(o + 1, 0);
    }
    if (seen[o]) fail(line_no, "original vertex mapped twice");
    seen[o] = 1;
    pi[o] = cac;
  });
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!seen[i]) throw Error(Errc::MalformedInput, "pi misses original vertex " + std::to_string(i + 1));
  }
  return pi;
}

std::vector<RawLink> parse_links(std::string_view text) {
  std::vector<RawLink> links;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t.size() != 3) fail(line_no, "expected '<u> <v> <cost>'");
    RawLink r;
    r.orig_u = to_vertex(t[0], line_no);
    r.orig_v = to_vertex(t[1], line_no);
    try {
      r.cost = Cost::parse(t[2]);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    if (r.cost < Cost(0)) fail(line_no, "negative cost");
    links.push_back(r);
  });
  return links;
}

SolutionFile parse_solution(std::string_view text) {
  SolutionFile out;
  long long declared = -1;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t[0] == "s") {
      if (declared >= 0) fail(line_no, "duplicate solution header");
      if (t.size() != 4 || t[1] != "wcap") fail(line_no, "expected 's wcap <total_cost> <num_links>'");
      try {
        out.total_cost = Cost::parse(t[2]);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      declared = to_int(t[3], line_no);
    } else if (t[0] == "l") {
      if (declared < 0) fail(line_no, "link before solution header");
      if (t.size() != 3) fail(line_no, "expected 'l <u> <v>'");
      out.links.emplace_back(to_vertex(t[1], line_no), to_vertex(t[2], line_no));
    } else {
      fail(line_no, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  if (declared < 0) throw Error(Errc::MalformedInput, "missing solution header");
  if (static_cast<long long>(out.links.size()) != declared) {
    throw Error(Errc::MalformedInput, "solution header declares " + std::to_string(declared) + " links, found " +
                                          std::to_string(out.links.size()));
  }
  return out;
}

std::string write_cactus(const CactusGraph& cactus, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p cactus " << cactus.vertex_count() << ' ' << cactus.edges().size() << ' ' << cactus.k() << '\n';
  for (const auto& e : cactus.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

std::string write_pi(const CactusGraph& cactus) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cactus.pi().size(); ++i) os << i + 1 << ' ' << cactus.pi()[i] + 1 << '\n';
  return os.str();
}

std::string write_links(std::span<const RawLink> links) {
  std::ostringstream os;
  for (const auto& l : links) os << l.orig_u + 1 << ' ' << l.orig_v + 1 << ' ' << l.cost << '\n';
  return os.str();
}

std::string write_solution(const Solution& solution, const LinkGraph& links) {
  std::ostringstream os;
  os << "s wcap " << solution.total_cost << ' ' << solution.link_ids.size() << '\n';
  for (const auto& r : map_solution_back(solution, links)) os << "l " << r.orig_u + 1 << ' ' << r.orig_v + 1 << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::MalformedInput, "cannot write '" + path + "'");
  out << content;
}

}  // namespace wcap
