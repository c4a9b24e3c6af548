#include "filcover/pipeline.hpp"

#include <chrono>

#include "filcover/error.hpp"

namespace filcover {

std::string to_string(PoolChoice choice) {
    switch (choice) {
        case PoolChoice::bfs: return "bfs";
        case PoolChoice::rmst: return "rmst";
        case PoolChoice::both: return "both";
    }
    return "bfs";
}

PoolChoice parse_pool_choice(std::string_view text) {
    if (text == "bfs") return PoolChoice::bfs;
    if (text == "rmst") return PoolChoice::rmst;
    if (text == "both") return PoolChoice::both;
    throw ValidationError("unknown path sampler '" + std::string(text) + "'", "path-pool");
}

PathPool build_pool(const WeightedGeometricGraph& graph, PoolChoice choice, const SamplerConfig& sampler) {
    switch (choice) {
        case PoolChoice::bfs: return sample_bfs(graph, sampler);
        case PoolChoice::rmst: return sample_rmst(graph, sampler);
        case PoolChoice::both: return pool_union(sample_bfs(graph, sampler), sample_rmst(graph, sampler));
    }
    return sample_bfs(graph, sampler);
}

FilamentCover decompose(const WeightedGeometricGraph& graph, const PipelineConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const PathPool pool = build_pool(graph, config.paths, config.sampler);
    FilamentCover cover = solve_cover(pool, graph, config.solver);
    cover.solver_stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cover;
}

}  // namespace filcover
