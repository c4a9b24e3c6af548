#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "filcover/graph.hpp"

namespace filcover {

struct Fixture {
    WeightedGeometricGraph graph;
    EdgePartition truth;
    std::string description;
};

/// Synthetic network with a right-angle crossing, two filaments sharing a
/// run of edges, and a closed loop joined by a filament that meets it at a
/// sharp corner. Truth labels the shared run with both filaments.
Fixture fixture_contrived();

/// Splits every filament of `truth` into maximal connected runs of edges
/// that carry the same label set. Each run gets a fresh label, so a run
/// shared by two filaments becomes two identical fragments.
EdgePartition fragment_at_overlaps(const WeightedGeometricGraph& graph, const EdgePartition& truth);

/// `n` uniform points in the unit square, their relative neighbourhood
/// graph, and a minimum spanning tree of it under uniform surrogate weights.
/// Edge weights are i.i.d. uniform in (0, 1].
WeightedGeometricGraph random_geometric_tree(int n, std::uint64_t seed);

/// Random tree paths added while the total overlap (extra coverings summed
/// over edges) stays below `max_overlap_edges`, until every edge is covered.
EdgePartition random_overlapping_tree_cover(const WeightedGeometricGraph& tree, int max_overlap_edges,
                                            std::uint64_t seed);

/// Deterministic corpus of connected geometric graphs with at most
/// `max_edges` edges (at most 7), integer weights in {1, 2, 3} and nodes on
/// a small grid: paths, stars, cycles, theta graphs and random graphs.
std::vector<WeightedGeometricGraph> enumerate_small_instances(int max_edges = 7);

/// Straight random lines through the unit square; their pairwise crossings
/// are the nodes and the pieces between crossings are the edges. Each line
/// has its own base weight with small per-edge jitter.
WeightedGeometricGraph random_line_network(int lines, std::uint64_t seed);

}  // namespace filcover
