#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

// Text formats. All vertex ids are 1-based on disk and 0-based in memory.
//
//   cactus:   c <comment>
//             p cactus <n> <m> <k>
//             e <u> <v>                 (m lines)
//   pi:       <orig_vertex> <cactus_vertex>
//   links:    <u> <v> <cost>            (original vertex ids, decimal or p/q cost)
//   solution: s wcap <total_cost> <num_links>
//             l <u> <v>                 (original vertex ids)

/// Throws MalformedInput on syntax errors plus whatever CactusGraph::from_edges
/// throws. pi_text may be empty for an identity map.
CactusGraph parse_cactus(std::string_view text, std::string_view pi_text = {});

/// Pi file content to a total map over original vertices 1..N.
std::vector<Vertex> parse_pi(std::string_view text);

std::vector<RawLink> parse_links(std::string_view text);

struct SolutionFile {
  Cost total_cost;
  std::vector<VertexPair> links;  ///< original endpoints, 0-based
};

SolutionFile parse_solution(std::string_view text);

std::string write_cactus(const CactusGraph& cactus, std::string_view comment = {});
std::string write_pi(const CactusGraph& cactus);
std::string write_links(std::span<const RawLink> links);
std::string write_solution(const Solution& solution, const LinkGraph& links);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace wcap
