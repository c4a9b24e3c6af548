#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "filcover/cover_solver.hpp"
#include "filcover/graph.hpp"

namespace filcover {

inline constexpr std::string_view kMetricsHeader =
    "filament_id,n_edges,length,mean_weight,roughness_pair,roughness_all,max_angle_deg,median_angle_deg,"
    "convolutedness";

/// Geometric fields are NaN for graphs without coordinates.
struct FilamentMetrics {
    int filament_id = 0;
    int n_edges = 0;
    double length = 0.0;
    double mean_weight = 0.0;  ///< length-weighted
    double roughness_pair = 0.0;
    double roughness_all = 0.0;
    double max_angle_deg = 0.0;
    double median_angle_deg = 0.0;  ///< edge-wise, to the first axis, folded into [0, 90]
    double convolutedness = 1.0;
};

/// One row per selected filament, in cover order. Throws
/// DegenerateGeometryError when a filament's bounding box is a single point.
std::vector<FilamentMetrics> compute_metrics(const FilamentCover& cover, const WeightedGeometricGraph& graph);

FilamentMetrics filament_metrics(const FilamentPath& path, const WeightedGeometricGraph& graph, int id);

void write_metrics_csv(std::ostream& out, const std::vector<FilamentMetrics>& rows);

}  // namespace filcover
