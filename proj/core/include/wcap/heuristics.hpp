#pragma once

#include <vector>

#include "wcap/cactus.hpp"
#include "wcap/link_graph.hpp"

namespace wcap {

/// Greedy weight coverage: repeatedly add the link with the smallest
/// cost / (uncovered cuts it covers), contracting the cactus after each pick.
/// Ties go to the smaller cost, then the smaller link id. Throws Infeasible if
/// cuts remain that no link covers.
Solution gwc(const CactusGraph& cactus, const LinkGraph& links);

/// Kruskal minimum spanning forest over the active links, processing links by
/// (cost, id). Returned ids are ascending.
std::vector<LinkId> kruskal_msf(const LinkGraph& links);

/// Starts from kruskal_msf() and removes disposable links from the most
/// expensive down (ties: larger id first). Throws Infeasible if the forest is
/// not an augmentation, which only happens when no augmentation exists.
Solution mst_connect(const CactusGraph& cactus, const LinkGraph& links);

/// Baseline in the style of the "smallest cost per vertex" greedy: vertices in
/// increasing id each add their cheapest incident link that still covers an
/// uncovered cut, in passes until all cuts are covered. Throws Infeasible when
/// a pass adds nothing while cuts remain.
Solution smc(const CactusGraph& cactus, const LinkGraph& links);

}  // namespace wcap
