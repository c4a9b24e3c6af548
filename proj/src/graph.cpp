#include "filcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "filcover/error.hpp"

namespace filcover {

namespace {

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
}

std::string node_name(NodeId id) { return "node " + std::to_string(id); }

std::string edge_name(NodeId a, NodeId b) {
    return "edge (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

WeightedGeometricGraph make_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges) {
    WeightedGeometricGraph g;

    std::sort(nodes.begin(), nodes.end(), [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].id == nodes[i - 1].id) {
            throw ValidationError("duplicate " + node_name(nodes[i].id));
        }
    }

    std::size_t dim = nodes.empty() ? 0 : nodes.front().coords.size();
    for (const auto& n : nodes) {
        if (n.coords.size() != dim) {
            throw ValidationError(node_name(n.id) + " has " + std::to_string(n.coords.size()) +
                                  " coordinates, expected " + std::to_string(dim));
        }
    }
    if (dim != 0 && dim != 2 && dim != 3) {
        throw ValidationError("coordinate dimension must be 2 or 3, got " + std::to_string(dim));
    }
    g.dimension_ = static_cast<int>(dim);

    g.nodes_.reserve(nodes.size());
    for (const auto& n : nodes) {
        NodeRecord rec;
        rec.id = n.id;
        for (std::size_t k = 0; k < dim; ++k) {
            if (!std::isfinite(n.coords[k])) {
                throw ValidationError(node_name(n.id) + " has a non-finite coordinate");
            }
            rec.position[static_cast<Eigen::Index>(k)] = n.coords[k];
        }
        g.index_.emplace(n.id, static_cast<NodeIndex>(g.nodes_.size()));
        g.nodes_.push_back(rec);
    }

    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        auto a = g.index_of(e.source);
        auto b = g.index_of(e.target);
        if (!a || !b) {
            throw ValidationError(edge_name(e.source, e.target) + " references a missing node");
        }
        if (*a == *b) {
            throw ValidationError(edge_name(e.source, e.target) + " is a self-loop");
        }
        if (!std::isfinite(e.weight) || e.weight <= 0.0) {
            throw ValidationError(edge_name(e.source, e.target) + " has non-positive weight " +
                                  std::to_string(e.weight));
        }
        EdgeRecord rec;
        rec.source = std::min(*a, *b);
        rec.target = std::max(*a, *b);
        rec.weight = e.weight;
        g.edges_.push_back(rec);
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const EdgeRecord& x, const EdgeRecord& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i].source == g.edges_[i - 1].source && g.edges_[i].target == g.edges_[i - 1].target) {
            throw ValidationError("parallel " + edge_name(g.nodes_[g.edges_[i].source].id,
                                                          g.nodes_[g.edges_[i].target].id));
        }
    }

    g.finalize();
    return g;
}

void WeightedGeometricGraph::finalize() {
    adjacency_.assign(nodes_.size(), {});
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    h = hash_combine(h, static_cast<std::uint64_t>(nodes_.size()));
    for (const auto& n : nodes_) {
        h = hash_combine(h, static_cast<std::uint64_t>(n.id));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        const auto id = static_cast<EdgeId>(i);
        adjacency_[static_cast<std::size_t>(e.source)].push_back({e.target, id});
        adjacency_[static_cast<std::size_t>(e.target)].push_back({e.source, id});
        e.euclidean_length = dimension_ > 0 ? (nodes_[e.target].position - nodes_[e.source].position).norm() : 0.0;
        h = hash_combine(h, static_cast<std::uint64_t>(e.source));
        h = hash_combine(h, static_cast<std::uint64_t>(e.target));
        h = hash_combine(h, std::bit_cast<std::uint64_t>(e.weight));
    }
    for (auto& inc : adjacency_) {
        std::sort(inc.begin(), inc.end(), [](const Incidence& x, const Incidence& y) { return x.edge < y.edge; });
    }
    signature_ = h;
}

std::optional<NodeIndex> WeightedGeometricGraph::index_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> WeightedGeometricGraph::find_edge(NodeIndex a, NodeIndex b) const {
    for (const auto& inc : incident(a)) {
        if (inc.neighbor == b) return inc.edge;
    }
    return std::nullopt;
}

NodeIndex WeightedGeometricGraph::other_end(EdgeId e, NodeIndex n) const {
    const auto& rec = edge(e);
    return rec.source == n ? rec.target : rec.source;
}

bool WeightedGeometricGraph::has_endpoint(EdgeId e, NodeIndex n) const {
    const auto& rec = edge(e);
    return rec.source == n || rec.target == n;
}

std::optional<NodeIndex> WeightedGeometricGraph::shared_node(EdgeId a, EdgeId b) const {
    if (a == b) return std::nullopt;
    const auto& x = edge(a);
    if (has_endpoint(b, x.source)) return x.source;
    if (has_endpoint(b, x.target)) return x.target;
    return std::nullopt;
}

Point WeightedGeometricGraph::midpoint(EdgeId e) const {
    const auto& rec = edge(e);
    return 0.5 * (nodes_[rec.source].position + nodes_[rec.target].position);
}

WeightedGeometricGraph WeightedGeometricGraph::without_edges(std::span<const EdgeId> removed,
                                                             std::vector<EdgeId>* kept) const {
    std::vector<char> drop(edges_.size(), 0);
    for (EdgeId e : removed) drop.at(static_cast<std::size_t>(e)) = 1;

    WeightedGeometricGraph g;
    g.nodes_ = nodes_;
    g.index_ = index_;
    g.dimension_ = dimension_;
    if (kept) kept->clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (drop[i]) continue;
        g.edges_.push_back(edges_[i]);
        if (kept) kept->push_back(static_cast<EdgeId>(i));
    }
    g.finalize();
    return g;
}

WeightedGeometricGraph WeightedGeometricGraph::with_weights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) {
        throw ValidationError("weight vector has " + std::to_string(weights.size()) + " entries for " +
                              std::to_string(edges_.size()) + " edges");
    }
    WeightedGeometricGraph g = *this;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
            throw ValidationError("replacement weight for edge " + std::to_string(i) + " is not positive");
        }
        g.edges_[i].weight = weights[i];
    }
    g.finalize();
    return g;
}

std::vector<int> WeightedGeometricGraph::node_components() const {
    std::vector<int> comp(nodes_.size(), -1);
    int next = 0;
    std::vector<NodeIndex> stack;
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(static_cast<NodeIndex>(s));
        while (!stack.empty()) {
            NodeIndex n = stack.back();
            stack.pop_back();
            for (const auto& inc : adjacency_[static_cast<std::size_t>(n)]) {
                if (comp[static_cast<std::size_t>(inc.neighbor)] < 0) {
                    comp[static_cast<std::size_t>(inc.neighbor)] = next;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        ++next;
    }
    return comp;
}

int WeightedGeometricGraph::component_count() const {
    auto comp = node_components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

void require_geometric(const WeightedGeometricGraph& graph, const char* module) {
    if (!graph.geometric()) {
        throw MissingCoordinatesError("operation needs node coordinates but the graph has none", module);
    }
}

EdgePartition::EdgePartition(std::vector<std::vector<Label>> labels) : labels_(std::move(labels)) {
    for (auto& l : labels_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

EdgePartition EdgePartition::from_filaments(int edge_count, const std::vector<std::vector<EdgeId>>& filaments) {
    std::vector<std::vector<Label>> labels(static_cast<std::size_t>(edge_count));
    for (std::size_t f = 0; f < filaments.size(); ++f) {
        for (EdgeId e : filaments[f]) {
            labels.at(static_cast<std::size_t>(e)).push_back(static_cast<Label>(f));
        }
    }
    return EdgePartition(std::move(labels));
}

bool EdgePartition::overlapping() const noexcept {
    return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.size() > 1; });
}

bool EdgePartition::complete() const noexcept {
    return std::none_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.empty(); });
}

std::map<Label, std::vector<EdgeId>> EdgePartition::filaments() const {
    std::map<Label, std::vector<EdgeId>> out;
    for (std::size_t e = 0; e < labels_.size(); ++e) {
        for (Label l : labels_[e]) out[l].push_back(static_cast<EdgeId>(e));
    }
    return out;
}

std::vector<Label> EdgePartition::distinct_labels() const {
    std::set<Label> s;
    for (const auto& l : labels_) s.insert(l.begin(), l.end());
    return {s.begin(), s.end()};
}

void EdgePartition::validate_for(int edge_count, const char* module) const {
    if (this->edge_count() != edge_count) {
        throw ValidationError("partition labels " + std::to_string(this->edge_count()) + " edges, graph has " +
                                  std::to_string(edge_count),
                              module);
    }
    for (std::size_t e = 0; e < labels_.size(); ++e) {
        if (labels_[e].empty()) {
            throw ValidationError("edge " + std::to_string(e) + " carries no filament label", module);
        }
    }
}

}  // namespace filcover
