#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace filcover {

using NodeId = std::int64_t;  ///< identifier as written in the exchange file
using NodeIndex = int;        ///< dense index into WeightedGeometricGraph::nodes()
using EdgeId = int;           ///< canonical dense edge index
using Label = int;            ///< filament label
using Point = Eigen::Vector3d;

struct NodeRecord {
    NodeId id = 0;
    Point position = Point::Zero();  ///< z (and x, y) are zero when unused
};

struct EdgeRecord {
    NodeIndex source = 0;  ///< smaller endpoint index
    NodeIndex target = 0;
    double weight = 1.0;
    double euclidean_length = 0.0;
};

struct Incidence {
    NodeIndex neighbor;
    EdgeId edge;
};

/// Raw node description accepted by make_graph; empty coords = no position.
struct NodeSpec {
    NodeId id = 0;
    std::vector<double> coords;
};

struct EdgeSpec {
    NodeId source = 0;
    NodeId target = 0;
    double weight = 1.0;
};

/// Undirected simple graph with positive edge weights and optional node
/// positions in 2 or 3 dimensions. Immutable once built.
///
/// Nodes are stored sorted by id; edges are stored sorted by their
/// (smaller id, larger id) endpoint pair, and the position in that order
/// is the edge's canonical EdgeId.
class WeightedGeometricGraph {
public:
    WeightedGeometricGraph() = default;

    int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// 0 for a graph without coordinates, else 2 or 3.
    int dimension() const noexcept { return dimension_; }
    bool geometric() const noexcept { return dimension_ > 0; }

    std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
    std::span<const EdgeRecord> edges() const noexcept { return edges_; }
    const NodeRecord& node(NodeIndex n) const { return nodes_.at(static_cast<std::size_t>(n)); }
    const EdgeRecord& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    double weight(EdgeId e) const { return edge(e).weight; }

    std::span<const Incidence> incident(NodeIndex n) const {
        return adjacency_.at(static_cast<std::size_t>(n));
    }
    int degree(NodeIndex n) const { return static_cast<int>(incident(n).size()); }

    std::optional<NodeIndex> index_of(NodeId id) const;
    std::optional<EdgeId> find_edge(NodeIndex a, NodeIndex b) const;

    /// Endpoint of `e` opposite to `n`; `n` must be an endpoint.
    NodeIndex other_end(EdgeId e, NodeIndex n) const;
    bool has_endpoint(EdgeId e, NodeIndex n) const;
    /// Node shared by two distinct edges, if any.
    std::optional<NodeIndex> shared_node(EdgeId a, EdgeId b) const;

    Point midpoint(EdgeId e) const;

    /// Structural fingerprint (node ids, edge endpoints, weights).
    std::uint64_t signature() const noexcept { return signature_; }

    /// Copy with the given edges removed; nodes are kept. `kept` receives the
    /// original id of every surviving edge, indexed by its new id.
    WeightedGeometricGraph without_edges(std::span<const EdgeId> removed,
                                         std::vector<EdgeId>* kept = nullptr) const;

    /// Copy with every edge weight replaced.
    WeightedGeometricGraph with_weights(std::span<const double> weights) const;

    /// Number of connected components (isolated nodes count).
    int component_count() const;
    /// Component index for every node.
    std::vector<int> node_components() const;

    friend WeightedGeometricGraph make_graph(std::vector<NodeSpec>, std::vector<EdgeSpec>);

private:
    void finalize();

    std::vector<NodeRecord> nodes_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::map<NodeId, NodeIndex> index_;
    int dimension_ = 0;
    std::uint64_t signature_ = 0;
};

/// Validates and builds a graph. Throws ValidationError on self-loops,
/// parallel edges, dangling endpoints, duplicate node ids, non-positive or
/// non-finite weights, non-finite coordinates and mixed dimensions.
WeightedGeometricGraph make_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges);

/// Throws MissingCoordinatesError unless the graph carries positions.
void require_geometric(const WeightedGeometricGraph& graph, const char* module);

/// Edge -> set of filament labels. Labels per edge are kept sorted and unique.
class EdgePartition {
public:
    EdgePartition() = default;
    explicit EdgePartition(std::vector<std::vector<Label>> labels);

    /// Builds a partition from filaments given as edge lists; filament i gets label i.
    static EdgePartition from_filaments(int edge_count, const std::vector<std::vector<EdgeId>>& filaments);

    int edge_count() const noexcept { return static_cast<int>(labels_.size()); }
    std::span<const Label> labels(EdgeId e) const { return labels_.at(static_cast<std::size_t>(e)); }
    const std::vector<std::vector<Label>>& all_labels() const noexcept { return labels_; }

    /// True iff some edge carries two or more labels.
    bool overlapping() const noexcept;
    /// True iff every edge carries at least one label.
    bool complete() const noexcept;

    /// Label -> sorted edge list.
    std::map<Label, std::vector<EdgeId>> filaments() const;
    std::vector<Label> distinct_labels() const;

    /// Throws ValidationError if the partition does not label every edge of a
    /// graph with `edge_count` edges.
    void validate_for(int edge_count, const char* module) const;

    friend bool operator==(const EdgePartition&, const EdgePartition&) = default;

private:
    std::vector<std::vector<Label>> labels_;
};

}  // namespace filcover
