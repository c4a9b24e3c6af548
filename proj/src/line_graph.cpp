#include "filcover/line_graph.hpp"

#include <algorithm>
#include <deque>

#include "filcover/error.hpp"

namespace filcover {

std::vector<std::vector<EdgeId>> edge_adjacency(const WeightedGeometricGraph& graph) {
    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(graph.edge_count()));
    for (NodeIndex n = 0; n < graph.node_count(); ++n) {
        const auto inc = graph.incident(n);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                adj[static_cast<std::size_t>(inc[i].edge)].push_back(inc[j].edge);
                adj[static_cast<std::size_t>(inc[j].edge)].push_back(inc[i].edge);
            }
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

LineGraph line_graph(const WeightedGeometricGraph& graph) {
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    LineGraph out;
    nodes.reserve(static_cast<std::size_t>(graph.edge_count()));
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        NodeSpec spec;
        spec.id = e;
        if (graph.geometric()) {
            const Point m = graph.midpoint(e);
            spec.coords.assign(m.data(), m.data() + graph.dimension());
        }
        nodes.push_back(std::move(spec));
        out.node_weight.push_back(graph.weight(e));
    }
    const auto adj = edge_adjacency(graph);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        for (EdgeId f : adj[static_cast<std::size_t>(e)]) {
            if (e < f) edges.push_back({e, f, 1.0});
        }
    }
    out.graph = make_graph(std::move(nodes), std::move(edges));
    return out;
}

std::vector<std::vector<int>> edge_hop_distances(const WeightedGeometricGraph& graph, int max_d) {
    if (max_d < 1) throw ValidationError("hop limit must be at least 1", "similarity");
    const auto n = static_cast<std::size_t>(graph.edge_count());
    const auto adj = edge_adjacency(graph);
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::deque<EdgeId> queue;
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        queue.assign(1, static_cast<EdgeId>(s));
        while (!queue.empty()) {
            const EdgeId u = queue.front();
            queue.pop_front();
            const int du = row[static_cast<std::size_t>(u)];
            if (du >= max_d) continue;
            for (EdgeId v : adj[static_cast<std::size_t>(u)]) {
                if (row[static_cast<std::size_t>(v)] < 0) {
                    row[static_cast<std::size_t>(v)] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

std::map<std::pair<EdgeId, EdgeId>, int> edge_distance_matrix(const WeightedGeometricGraph& graph, int max_d) {
    const auto dist = edge_hop_distances(graph, max_d);
    std::map<std::pair<EdgeId, EdgeId>, int> out;
    for (std::size_t a = 0; a < dist.size(); ++a) {
        for (std::size_t b = 0; b < dist.size(); ++b) {
            if (a != b && dist[a][b] > 0) {
                out.emplace(std::pair{static_cast<EdgeId>(a), static_cast<EdgeId>(b)}, dist[a][b]);
            }
        }
    }
    return out;
}

}  // namespace filcover
