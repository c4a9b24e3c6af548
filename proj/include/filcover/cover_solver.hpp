#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "filcover/graph.hpp"
#include "filcover/path_pool.hpp"
#include "filcover/roughness.hpp"

namespace filcover {

enum class CoverMode { exact, over };
enum class Objective { total, avg };

std::string to_string(CoverMode mode);
std::string to_string(Objective objective);
std::string to_string(RoughnessKind kind);
CoverMode parse_cover_mode(std::string_view text);
Objective parse_objective(std::string_view text);
RoughnessKind parse_roughness_kind(std::string_view text);

struct SolverConfig {
    CoverMode cover_mode = CoverMode::over;
    Objective objective = Objective::total;
    RoughnessKind roughness_kind = RoughnessKind::pair;
    double big_m = 2.0;
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    std::int64_t node_limit = 10'000'000;

    void validate() const;
};

struct SolverStats {
    std::int64_t branch_nodes = 0;
    std::size_t pool_size = 0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    std::string method;
    std::string rng;
    double lower_bound = 0.0;
    int dinkelbach_iterations = 0;
    /// Optimal value of the shifted program at the final ratio (avg only).
    double dinkelbach_residual = 0.0;
};

/// Selected filaments, ordered by decreasing edge count and then by sorted
/// edge set; filament i carries label i.
struct FilamentCover {
    std::vector<FilamentPath> selected;
    EdgePartition labels;
    double objective_value = 0.0;
    Objective objective_kind = Objective::total;
    SolverStats solver_stats;
};

FilamentCover solve_total(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config);

/// Minimizes the mean roughness of the selected paths by Dinkelbach
/// iteration over shifted total-cost programs.
FilamentCover solve_avg(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config);

/// Dispatches on config.objective.
FilamentCover solve_cover(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config);

/// Greedy cover by roughness per newly covered edge. Throws
/// InfeasibleCoverError when it cannot complete.
FilamentCover greedy_warm_start(const PathPool& pool, const WeightedGeometricGraph& graph,
                                const SolverConfig& config);

/// Merges fragments of an external decomposition: each pool path is
/// discounted by 1e4 per initial fragment it fully contains and charged a
/// 1e8 offset, then a cover-mode total program is solved. The reported
/// objective is the plain total roughness of the result.
FilamentCover postprocess_merge(const WeightedGeometricGraph& graph, const EdgePartition& initial,
                                const PathPool& pool, const SolverConfig& config);

/// Objective recomputed from the selected paths.
double cover_objective(const FilamentCover& cover, Objective objective, RoughnessKind kind);

/// Builds a cover from explicit paths (labels and ordering as above).
FilamentCover make_cover(std::vector<FilamentPath> paths, int edge_count, Objective objective, RoughnessKind kind);

/// Number of paths covering each edge.
std::vector<int> coverage_counts(const FilamentCover& cover, int edge_count);

}  // namespace filcover
