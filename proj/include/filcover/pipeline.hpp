#pragma once

#include <string>
#include <string_view>

#include "filcover/cover_solver.hpp"
#include "filcover/path_pool.hpp"

namespace filcover {

enum class PoolChoice { bfs, rmst, both };

std::string to_string(PoolChoice choice);
PoolChoice parse_pool_choice(std::string_view text);

struct PipelineConfig {
    PoolChoice paths = PoolChoice::bfs;
    SamplerConfig sampler;
    SolverConfig solver;
};

PathPool build_pool(const WeightedGeometricGraph& graph, PoolChoice choice, const SamplerConfig& sampler);

/// Samples a pool and solves the cover program on it.
FilamentCover decompose(const WeightedGeometricGraph& graph, const PipelineConfig& config);

}  // namespace filcover
