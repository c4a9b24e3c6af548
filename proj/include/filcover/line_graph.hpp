#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "filcover/graph.hpp"

namespace filcover {

/// Hop limit meaning "no limit".
inline constexpr int kUnboundedHops = std::numeric_limits<int>::max();

/// Node-weighted line graph. Node i of `graph` is edge i of the input; its
/// weight is that edge's weight and its position the edge midpoint. Edges of
/// `graph` carry unit weight.
struct LineGraph {
    WeightedGeometricGraph graph;
    std::vector<double> node_weight;
};

LineGraph line_graph(const WeightedGeometricGraph& graph);

/// Edges sharing an endpoint with each edge, sorted.
std::vector<std::vector<EdgeId>> edge_adjacency(const WeightedGeometricGraph& graph);

/// Dense hop-distance table in the line graph; -1 marks pairs farther than
/// `max_d` (or in different components). Diagonal is 0.
std::vector<std::vector<int>> edge_hop_distances(const WeightedGeometricGraph& graph, int max_d = kUnboundedHops);

/// Ordered pairs (e0, e1), e0 != e1, at line-graph distance <= max_d.
std::map<std::pair<EdgeId, EdgeId>, int> edge_distance_matrix(const WeightedGeometricGraph& graph, int max_d);

}  // namespace filcover
