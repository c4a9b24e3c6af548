#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "filcover/graph.hpp"
#include "filcover/pipeline.hpp"

namespace filcover {

enum class PerturbationKind { delete_edges, weight_noise };

struct PerturbationPlan {
    PerturbationKind kind = PerturbationKind::weight_noise;
    /// Number of removed edges, or noise factors f.
    std::vector<double> levels;
    int trials_per_level = 100;
    std::uint64_t rng_seed = 1;
    /// Keep the weights untouched in noise scans (checks determinism).
    bool zero_variance = false;

    void validate(int edge_count) const;
};

struct ScanRow {
    double level = 0.0;
    int trial = 0;
    double ji1 = 0.0;  ///< NaN when the trial failed
    double ri1 = 0.0;
    bool baseline = false;  ///< unperturbed reference row
    std::string error;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    /// Least-squares slopes of the scores against the level, over the
    /// successful non-baseline rows; NaN with fewer than two levels.
    double ji1_slope = 0.0;
    double ri1_slope = 0.0;

    /// Mean score over the successful rows of one level.
    double mean_ji1(double level) const;
    double mean_ri1(double level) const;
};

/// Removes `level` random edges per trial, re-decomposes, and scores the
/// cover against `reference` on the full edge set. Removed edges carry a
/// fresh label of their own in the recomputed cover.
ScanResult run_deletion_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                             const PerturbationPlan& plan, const PipelineConfig& config);

/// Adds centred Gaussian noise with standard deviation (1 + f/100) w to every
/// weight w (floored at 1e-6 w) and re-decomposes. The first row is an
/// unperturbed baseline.
ScanResult run_noise_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                          const PerturbationPlan& plan, const PipelineConfig& config);

ScanResult run_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                    const PerturbationPlan& plan, const PipelineConfig& config);

/// CSV with header `level,trial,ji1,ri1`; the baseline row has level `baseline`.
void write_scan_csv(std::ostream& out, const ScanResult& result);

}  // namespace filcover
