#include "filcover/cover_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "filcover/error.hpp"
#include "filcover/random.hpp"
#include "filcover/set_cover.hpp"

namespace filcover {

namespace {

constexpr int kMaxDinkelbachIterations = 100;
constexpr double kFragmentDiscount = 1e4;
constexpr double kPathOffset = 1e8;

std::vector<int> sorted_edges(const FilamentPath& p) {
    std::vector<int> e(p.edges.begin(), p.edges.end());
    std::sort(e.begin(), e.end());
    return e;
}

SetCoverInstance make_instance(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config) {
    if (pool.graph_signature != graph.signature() || pool.edge_count != graph.edge_count()) {
        throw GraphMismatchError("path pool was built on a different graph", "cover-solver");
    }
    SetCoverInstance inst;
    inst.element_count = graph.edge_count();
    inst.exact = config.cover_mode == CoverMode::exact;
    inst.sets.reserve(pool.size());
    inst.costs.reserve(pool.size());
    for (const auto& p : pool.paths) {
        inst.sets.push_back(sorted_edges(p));
        inst.costs.push_back(p.roughness(config.roughness_kind));
    }
    return inst;
}

SetCoverOptions options_from(const SolverConfig& config) {
    SetCoverOptions opt;
    opt.opt_tol = config.opt_tol;
    opt.node_limit = config.node_limit;
    return opt;
}

FilamentCover finish(const PathPool& pool, const std::vector<int>& chosen, const WeightedGeometricGraph& graph,
                     const SolverConfig& config, Objective objective) {
    std::vector<FilamentPath> paths;
    paths.reserve(chosen.size());
    for (int s : chosen) paths.push_back(pool.paths[static_cast<std::size_t>(s)]);
    FilamentCover cover = make_cover(std::move(paths), graph.edge_count(), objective, config.roughness_kind);
    cover.solver_stats.pool_size = pool.size();
    cover.solver_stats.seed = pool.parameters.rng_seed;
    cover.solver_stats.method = to_string(pool.method);
    cover.solver_stats.rng = std::string(kRngName);
    return cover;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_coverage(const FilamentCover& cover, int edge_count, CoverMode mode) {
    const auto counts = coverage_counts(cover, edge_count);
    for (int c : counts) {
        if (c < 1 || (mode == CoverMode::exact && c != 1)) {
            throw NumericalError("solver returned a selection that violates the coverage constraints");
        }
    }
}

}  // namespace

std::string to_string(CoverMode mode) { return mode == CoverMode::exact ? "exact" : "over"; }
std::string to_string(Objective objective) { return objective == Objective::total ? "total" : "avg"; }
std::string to_string(RoughnessKind kind) { return kind == RoughnessKind::pair ? "pair" : "all"; }

CoverMode parse_cover_mode(std::string_view text) {
    if (text == "exact") return CoverMode::exact;
    if (text == "over") return CoverMode::over;
    throw ValidationError("unknown cover mode '" + std::string(text) + "'", "cover-solver");
}

Objective parse_objective(std::string_view text) {
    if (text == "total") return Objective::total;
    if (text == "avg") return Objective::avg;
    throw ValidationError("unknown objective '" + std::string(text) + "'", "cover-solver");
}

RoughnessKind parse_roughness_kind(std::string_view text) {
    if (text == "pair") return RoughnessKind::pair;
    if (text == "all") return RoughnessKind::all;
    throw ValidationError("unknown roughness kind '" + std::string(text) + "'", "cover-solver");
}

void SolverConfig::validate() const {
    if (!(big_m >= 2.0)) throw ValidationError("big_m must be at least 2", "cover-solver");
    if (!(feas_tol > 0.0) || !(opt_tol > 0.0)) throw ValidationError("tolerances must be positive", "cover-solver");
    if (node_limit < 1) throw ValidationError("node limit must be positive", "cover-solver");
}

FilamentCover make_cover(std::vector<FilamentPath> paths, int edge_count, Objective objective, RoughnessKind kind) {
    std::vector<std::pair<std::vector<int>, std::size_t>> keys;
    keys.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) keys.emplace_back(sorted_edges(paths[i]), i);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
    });
    FilamentCover cover;
    std::vector<std::vector<EdgeId>> filaments;
    for (const auto& [edges, i] : keys) {
        cover.selected.push_back(std::move(paths[i]));
        filaments.push_back(edges);
    }
    cover.labels = EdgePartition::from_filaments(edge_count, filaments);
    cover.objective_kind = objective;
    cover.objective_value = cover_objective(cover, objective, kind);
    return cover;
}

double cover_objective(const FilamentCover& cover, Objective objective, RoughnessKind kind) {
    double sum = 0.0;
    for (const auto& p : cover.selected) sum += p.roughness(kind);
    if (objective == Objective::avg) {
        return cover.selected.empty() ? 0.0 : sum / static_cast<double>(cover.selected.size());
    }
    return sum;
}

std::vector<int> coverage_counts(const FilamentCover& cover, int edge_count) {
    std::vector<int> counts(static_cast<std::size_t>(edge_count), 0);
    for (const auto& p : cover.selected) {
        for (EdgeId e : p.edges) ++counts.at(static_cast<std::size_t>(e));
    }
    return counts;
}

FilamentCover greedy_warm_start(const PathPool& pool, const WeightedGeometricGraph& graph,
                                const SolverConfig& config) {
    config.validate();
    const auto inst = make_instance(pool, graph, config);
    const auto chosen = greedy_set_cover(inst);
    if (chosen.empty() && graph.edge_count() > 0) {
        throw InfeasibleCoverError("greedy selection could not complete a cover", {});
    }
    return finish(pool, chosen, graph, config, config.objective);
}

FilamentCover solve_total(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto inst = make_instance(pool, graph, config);
    const auto warm = greedy_set_cover(inst);
    const auto result = solve_set_cover(inst, options_from(config), warm);
    FilamentCover cover = finish(pool, result.chosen, graph, config, Objective::total);
    check_coverage(cover, graph.edge_count(), config.cover_mode);
    cover.solver_stats.branch_nodes = result.nodes;
    cover.solver_stats.lower_bound = result.root_bound;
    cover.solver_stats.wall_time_s = seconds_since(start);
    return cover;
}

FilamentCover solve_avg(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto base = make_instance(pool, graph, config);
    const auto opt = options_from(config);

    std::vector<int> current = greedy_set_cover(base);
    std::int64_t nodes = 0;
    if (current.empty()) {
        auto first = solve_set_cover(base, opt);
        nodes += first.nodes;
        current = first.chosen;
    }
    auto ratio = [&](const std::vector<int>& sel) {
        return selection_cost(base, sel) / static_cast<double>(sel.size());
    };

    double lambda = ratio(current);
    double residual = 0.0;
    int iterations = 0;
    SetCoverInstance shifted = base;
    while (true) {
        if (++iterations > kMaxDinkelbachIterations) {
            throw NumericalError("fractional iteration did not converge within " +
                                 std::to_string(kMaxDinkelbachIterations) + " steps");
        }
        for (std::size_t s = 0; s < base.costs.size(); ++s) shifted.costs[s] = base.costs[s] - lambda;
        auto step = solve_set_cover(shifted, opt, current);
        nodes += step.nodes;
        residual = step.cost;
        const double scale = config.opt_tol * std::max(1.0, std::abs(lambda) * static_cast<double>(step.chosen.size()));
        if (step.chosen == current || residual >= -scale) break;
        const double next = ratio(step.chosen);
        current = std::move(step.chosen);
        if (!(next < lambda)) {
            lambda = next;
            break;
        }
        lambda = next;
    }

    FilamentCover cover = finish(pool, current, graph, config, Objective::avg);
    check_coverage(cover, graph.edge_count(), config.cover_mode);
    cover.solver_stats.branch_nodes = nodes;
    cover.solver_stats.lower_bound = lambda;
    cover.solver_stats.dinkelbach_iterations = iterations;
    cover.solver_stats.dinkelbach_residual = residual;
    cover.solver_stats.wall_time_s = seconds_since(start);
    return cover;
}

FilamentCover solve_cover(const PathPool& pool, const WeightedGeometricGraph& graph, const SolverConfig& config) {
    return config.objective == Objective::avg ? solve_avg(pool, graph, config) : solve_total(pool, graph, config);
}

FilamentCover postprocess_merge(const WeightedGeometricGraph& graph, const EdgePartition& initial,
                                const PathPool& pool, const SolverConfig& config) {
    config.validate();
    initial.validate_for(graph.edge_count(), "cover-solver");
    const auto start = std::chrono::steady_clock::now();

    SolverConfig merge_config = config;
    merge_config.cover_mode = CoverMode::over;
    auto inst = make_instance(pool, graph, merge_config);

    std::vector<std::vector<EdgeId>> fragments;
    for (auto& [label, edges] : initial.filaments()) fragments.push_back(edges);
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
        const auto& set = inst.sets[s];
        int contained = 0;
        for (const auto& frag : fragments) {
            if (std::includes(set.begin(), set.end(), frag.begin(), frag.end())) ++contained;
        }
        inst.costs[s] = (kPathOffset - kFragmentDiscount * contained) + inst.costs[s];
    }
    SetCoverOptions opt = options_from(merge_config);
    opt.opt_tol = config.opt_tol * 1e-6;
    const auto warm = greedy_set_cover(inst);
    const auto result = solve_set_cover(inst, opt, warm);

    FilamentCover cover = finish(pool, result.chosen, graph, merge_config, Objective::total);
    check_coverage(cover, graph.edge_count(), CoverMode::over);
    cover.solver_stats.branch_nodes = result.nodes;
    cover.solver_stats.lower_bound = result.root_bound;
    cover.solver_stats.wall_time_s = seconds_since(start);
    return cover;
}

}  // namespace filcover
