#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "filcover/graph.hpp"
#include "filcover/roughness.hpp"

namespace filcover {

enum class PathMethod { bfs, rmst, all, mixed };

std::string to_string(PathMethod method);

struct SamplerConfig {
    double angle_threshold_deg = 60.0;
    int rmst_trees = 100;
    std::int64_t max_paths = 5'000'000;
    std::uint64_t rng_seed = 1;

    /// Throws ValidationError when a field is out of range for a graph with
    /// `edge_count` edges.
    void validate(int edge_count) const;
};

/// Deduplicated candidate paths, sorted by canonical edge sequence. Every
/// single-edge path of the graph is present.
struct PathPool {
    std::vector<FilamentPath> paths;
    PathMethod method = PathMethod::bfs;
    SamplerConfig parameters;
    bool coverage_ok = false;
    std::uint64_t graph_signature = 0;
    int edge_count = 0;

    std::size_t size() const noexcept { return paths.size(); }
};

/// All edge-simple paths whose consecutive deflections stay below the
/// threshold, grown from every node. Closed walks whose wrap-around turn
/// also passes are flagged cyclic. Throws PoolExplosionError past max_paths.
PathPool sample_bfs(const WeightedGeometricGraph& graph, const SamplerConfig& config);

/// Tree paths of `rmst_trees` minimum spanning forests drawn under i.i.d.
/// uniform surrogate weights, plus every single edge.
PathPool sample_rmst(const WeightedGeometricGraph& graph, const SamplerConfig& config);

/// Every edge-simple path, ignoring geometry. Intended for small graphs.
PathPool enumerate_all_paths(const WeightedGeometricGraph& graph, std::int64_t max_paths = 5'000'000);

/// Deduplicated union. Throws GraphMismatchError for pools of different graphs.
PathPool pool_union(const PathPool& a, const PathPool& b);

}  // namespace filcover
