#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace filcover {

/// Weighted set cover (or set partitioning when `exact`) over elements
/// 0..element_count-1. Set element lists must be sorted and unique. Costs
/// may be negative.
struct SetCoverInstance {
    int element_count = 0;
    std::vector<std::vector<int>> sets;
    std::vector<double> costs;
    bool exact = false;
};

struct SetCoverOptions {
    double opt_tol = 1e-9;
    std::int64_t node_limit = 10'000'000;
    int root_iterations = 300;
    int node_iterations = 40;
};

struct SetCoverResult {
    std::vector<int> chosen;  ///< sorted set indices
    double cost = 0.0;
    double root_bound = 0.0;
    std::int64_t nodes = 0;
};

/// Best-ratio greedy. Returns the chosen sets (sorted) or an empty vector
/// when it cannot complete (exact mode) or the instance is uncoverable. In
/// cover mode, sets made redundant by later picks are dropped.
std::vector<int> greedy_set_cover(const SetCoverInstance& instance);

/// Sum of the costs of `chosen`.
double selection_cost(const SetCoverInstance& instance, std::span<const int> chosen);

/// Checks coverage (exactly once in exact mode).
bool is_cover(const SetCoverInstance& instance, std::span<const int> chosen);

/// Optimal selection by depth-first branch and bound with Lagrangian bounds.
/// `incumbent`, if non-empty, must be a feasible selection and seeds the
/// upper bound. Throws InfeasibleCoverError when no feasible selection
/// exists and NodeLimitError when the node budget runs out.
SetCoverResult solve_set_cover(const SetCoverInstance& instance, const SetCoverOptions& options,
                               std::span<const int> incumbent = {});

}  // namespace filcover
