#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "filcover/graph.hpp"
#include "filcover/line_graph.hpp"

namespace filcover {

/// Pair counts for edge pairs within line-graph distance d. The first index
/// refers to partition a, the second to b; "e" means same, "n" different.
struct ContingencyCounts {
    std::int64_t h_ee = 0;
    std::int64_t h_en = 0;
    std::int64_t h_ne = 0;
    std::int64_t h_nn = 0;
    int d = kUnboundedHops;

    std::int64_t total() const noexcept { return h_ee + h_en + h_ne + h_nn; }
    friend bool operator==(const ContingencyCounts&, const ContingencyCounts&) = default;
};

struct RandJaccard {
    double ri = 1.0;
    double ji = 1.0;
    ContingencyCounts counts;
};

struct SimilarityReport {
    std::optional<double> vi;  ///< empty when either partition overlaps
    double ri = 1.0;
    double ji = 1.0;
    std::map<int, double> ri_d;
    std::map<int, double> ji_d;
};

/// Normalized variation of information (1 for identical partitions); empty
/// when either partition has an edge with several labels.
std::optional<double> variation_of_information(const EdgePartition& a, const EdgePartition& b);

/// Rand and Jaccard indices over the unordered edge pairs at line-graph
/// distance at most d. Two edges are in the same set of a partition when
/// their label sets intersect. `graph` may be null when d is unbounded.
RandJaccard rand_jaccard(const EdgePartition& a, const EdgePartition& b, int d,
                         const WeightedGeometricGraph* graph = nullptr);

/// Counts for several distances at once, sharing one distance table.
std::vector<RandJaccard> rand_jaccard(const EdgePartition& a, const EdgePartition& b, const std::vector<int>& ds,
                                      const WeightedGeometricGraph& graph);

SimilarityReport compare_partitions(const EdgePartition& a, const EdgePartition& b,
                                    const WeightedGeometricGraph& graph, const std::vector<int>& ds);

struct FilamentMatching {
    std::map<Label, Label> a_to_b;  ///< only pairs sharing at least one edge
    std::int64_t shared_edges = 0;
};

/// One-to-one matching of filament labels maximizing the total number of
/// shared edges.
FilamentMatching match_filament_identities(const EdgePartition& a, const EdgePartition& b);

}  // namespace filcover
