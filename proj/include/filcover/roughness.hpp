#pragma once

#include <span>
#include <vector>

#include "filcover/graph.hpp"

namespace filcover {

enum class RoughnessKind { pair, all };

/// An edge-simple path of adjacent edges, oriented along `nodes`.
///
/// `nodes` has one more entry than `edges`; edge i joins nodes[i] and
/// nodes[i + 1]. A cyclic path starts and ends at the same node and its
/// deflection angle includes the turn from the last edge back to the first.
/// The cached roughness values are filled by make_path.
struct FilamentPath {
    std::vector<EdgeId> edges;
    std::vector<NodeIndex> nodes;
    bool cyclic = false;
    double r_pair = 0.0;
    double r_all = 0.0;
    double r_angle = 0.0;  ///< degrees; NaN on graphs without coordinates

    int size() const noexcept { return static_cast<int>(edges.size()); }
    bool closed() const noexcept { return nodes.size() > 1 && nodes.front() == nodes.back(); }
    double roughness(RoughnessKind kind) const noexcept { return kind == RoughnessKind::pair ? r_pair : r_all; }

    friend bool operator==(const FilamentPath&, const FilamentPath&) = default;
};

/// Builds a path from an ordered edge list and fills the caches. Throws
/// ValidationError for non-adjacent or repeated edges, or when `cyclic` is
/// requested for a path that does not close.
FilamentPath make_path(const WeightedGeometricGraph& graph, std::vector<EdgeId> edges, bool cyclic = false);

/// Builds a path from a node walk.
FilamentPath make_path_from_nodes(const WeightedGeometricGraph& graph, std::span<const NodeIndex> nodes,
                                  bool cyclic = false);

/// Mean absolute weight difference of consecutive edges; the edge weight for
/// a single-edge path.
double roughness_pair(const FilamentPath& path, const WeightedGeometricGraph& graph);

/// Largest weight spread over the path divided by (P - 1); the edge weight
/// for a single-edge path.
double roughness_all(const FilamentPath& path, const WeightedGeometricGraph& graph);

/// Largest deflection in degrees between consecutive edge directions taken
/// along the traversal. Zero for single-edge paths. Throws
/// DegenerateGeometryError for a zero-length edge.
double roughness_angle(const FilamentPath& path, const WeightedGeometricGraph& graph);

/// Angle in degrees between two direction vectors.
double deflection_deg(const Point& a, const Point& b);

/// Direction of the i-th edge of `path` along its traversal.
Point edge_direction(const FilamentPath& path, const WeightedGeometricGraph& graph, int i);

FilamentPath reversed(const FilamentPath& path);

/// Lexicographically smaller of the forward and reversed edge sequence.
std::vector<EdgeId> canonical_edges(std::span<const EdgeId> edges);

/// Same path, oriented so that its edge sequence is canonical.
FilamentPath canonical(const FilamentPath& path);

}  // namespace filcover
