#pragma once

#include "filcover/cover_solver.hpp"
#include "filcover/graph.hpp"

namespace filcover {

struct TreeCoverConfig {
    /// Largest number of selected paths allowed to share one edge (1 to 3).
    int k_overlap = 1;
    Objective objective = Objective::total;
    RoughnessKind roughness_kind = RoughnessKind::pair;
    /// Use the multiplicity dynamic program even when k_overlap is 1. It is
    /// exponential in node degree and meant for small trees and cross-checks.
    bool multiplicity_dp = false;

    void validate() const;
};

/// Optimal filament cover of a tree in which every edge is used by between
/// 1 and k_overlap distinct paths. Throws NotATreeError unless the graph is
/// connected and acyclic.
FilamentCover solve_tree(const WeightedGeometricGraph& graph, const TreeCoverConfig& config);

}  // namespace filcover
