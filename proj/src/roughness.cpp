#include "filcover/roughness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "filcover/error.hpp"

namespace filcover {

namespace {

void fill_caches(FilamentPath& path, const WeightedGeometricGraph& graph) {
    path.r_pair = roughness_pair(path, graph);
    path.r_all = roughness_all(path, graph);
    path.r_angle = graph.geometric() ? roughness_angle(path, graph) : std::numeric_limits<double>::quiet_NaN();
}

void check_edge_simple(const WeightedGeometricGraph& graph, std::span<const EdgeId> edges) {
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("path repeats an edge", "roughness");
    }
    for (EdgeId e : sorted) {
        if (e < 0 || e >= graph.edge_count()) {
            throw ValidationError("path references unknown edge " + std::to_string(e), "roughness");
        }
    }
}

}  // namespace

FilamentPath make_path(const WeightedGeometricGraph& graph, std::vector<EdgeId> edges, bool cyclic) {
    if (edges.empty()) throw ValidationError("empty path", "roughness");
    check_edge_simple(graph, edges);

    FilamentPath path;
    path.nodes.reserve(edges.size() + 1);
    if (edges.size() == 1) {
        const auto& rec = graph.edge(edges[0]);
        path.nodes = {rec.source, rec.target};
    } else {
        auto first_shared = graph.shared_node(edges[0], edges[1]);
        if (!first_shared) throw ValidationError("consecutive path edges are not adjacent", "roughness");
        NodeIndex cur = graph.other_end(edges[0], *first_shared);
        path.nodes.push_back(cur);
        for (EdgeId e : edges) {
            if (!graph.has_endpoint(e, cur)) {
                throw ValidationError("consecutive path edges are not adjacent", "roughness");
            }
            cur = graph.other_end(e, cur);
            path.nodes.push_back(cur);
        }
    }
    path.edges = std::move(edges);
    if (cyclic && (!path.closed() || path.size() < 3)) {
        throw ValidationError("cyclic flag set on an open path", "roughness");
    }
    path.cyclic = cyclic;
    fill_caches(path, graph);
    return path;
}

FilamentPath make_path_from_nodes(const WeightedGeometricGraph& graph, std::span<const NodeIndex> nodes,
                                  bool cyclic) {
    if (nodes.size() < 2) throw ValidationError("node walk needs at least two nodes", "roughness");
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        auto e = graph.find_edge(nodes[i], nodes[i + 1]);
        if (!e) throw ValidationError("node walk uses a non-edge", "roughness");
        edges.push_back(*e);
    }
    check_edge_simple(graph, edges);
    FilamentPath path;
    path.edges = std::move(edges);
    path.nodes.assign(nodes.begin(), nodes.end());
    if (cyclic && (!path.closed() || path.size() < 3)) {
        throw ValidationError("cyclic flag set on an open path", "roughness");
    }
    path.cyclic = cyclic;
    fill_caches(path, graph);
    return path;
}

double roughness_pair(const FilamentPath& path, const WeightedGeometricGraph& graph) {
    const auto& e = path.edges;
    if (e.size() == 1) return graph.weight(e[0]);
    // Summed in canonical orientation so a path and its reverse agree bit for bit.
    const bool backwards = std::lexicographical_compare(e.rbegin(), e.rend(), e.begin(), e.end());
    double sum = 0.0;
    const std::size_t n = e.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t a = backwards ? n - 1 - i : i;
        const std::size_t b = backwards ? n - 2 - i : i + 1;
        sum += std::abs(graph.weight(e[b]) - graph.weight(e[a]));
    }
    return sum / static_cast<double>(n - 1);
}

double roughness_all(const FilamentPath& path, const WeightedGeometricGraph& graph) {
    const auto& e = path.edges;
    if (e.size() == 1) return graph.weight(e[0]);
    double lo = graph.weight(e[0]);
    double hi = lo;
    for (EdgeId id : e) {
        lo = std::min(lo, graph.weight(id));
        hi = std::max(hi, graph.weight(id));
    }
    return (hi - lo) / static_cast<double>(e.size() - 1);
}

double deflection_deg(const Point& a, const Point& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw DegenerateGeometryError("zero-length edge direction");
    const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
    return std::acos(c) * (180.0 / std::numbers::pi);
}

Point edge_direction(const FilamentPath& path, const WeightedGeometricGraph& graph, int i) {
    const auto k = static_cast<std::size_t>(i);
    return graph.node(path.nodes[k + 1]).position - graph.node(path.nodes[k]).position;
}

double roughness_angle(const FilamentPath& path, const WeightedGeometricGraph& graph) {
    require_geometric(graph, "roughness");
    const int p = path.size();
    for (int i = 0; i < p; ++i) {
        if (edge_direction(path, graph, i).squaredNorm() == 0.0) {
            throw DegenerateGeometryError("edge " + std::to_string(path.edges[static_cast<std::size_t>(i)]) +
                                          " has coincident endpoints");
        }
    }
    double worst = 0.0;
    for (int i = 0; i + 1 < p; ++i) {
        worst = std::max(worst, deflection_deg(edge_direction(path, graph, i), edge_direction(path, graph, i + 1)));
    }
    if (path.cyclic && p >= 3) {
        worst = std::max(worst, deflection_deg(edge_direction(path, graph, p - 1), edge_direction(path, graph, 0)));
    }
    return worst;
}

FilamentPath reversed(const FilamentPath& path) {
    FilamentPath r = path;
    std::reverse(r.edges.begin(), r.edges.end());
    std::reverse(r.nodes.begin(), r.nodes.end());
    return r;
}

std::vector<EdgeId> canonical_edges(std::span<const EdgeId> edges) {
    std::vector<EdgeId> fwd(edges.begin(), edges.end());
    std::vector<EdgeId> rev(edges.rbegin(), edges.rend());
    return std::min(fwd, rev);
}

FilamentPath canonical(const FilamentPath& path) {
    std::vector<EdgeId> rev(path.edges.rbegin(), path.edges.rend());
    if (rev < path.edges) return reversed(path);
    return path;
}

}  // namespace filcover
