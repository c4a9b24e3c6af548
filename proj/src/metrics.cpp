#include "filcover/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "filcover/error.hpp"
#include "filcover/gml.hpp"

namespace filcover {

namespace {

double axis_angle_deg(const Point& direction) {
    const double c = std::min(1.0, std::abs(direction.x()) / direction.norm());
    return std::acos(c) * 180.0 / std::numbers::pi;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

FilamentMetrics filament_metrics(const FilamentPath& path, const WeightedGeometricGraph& graph, int id) {
    FilamentMetrics m;
    m.filament_id = id;
    m.n_edges = path.size();
    m.roughness_pair = path.r_pair;
    m.roughness_all = path.r_all;

    if (!graph.geometric()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        double sum = 0.0;
        for (EdgeId e : path.edges) sum += graph.weight(e);
        m.mean_weight = sum / path.size();
        m.length = m.max_angle_deg = m.median_angle_deg = m.convolutedness = nan;
        return m;
    }

    double weighted = 0.0;
    std::vector<double> angles;
    for (int i = 0; i < path.size(); ++i) {
        const auto& rec = graph.edge(path.edges[static_cast<std::size_t>(i)]);
        m.length += rec.euclidean_length;
        weighted += rec.weight * rec.euclidean_length;
        angles.push_back(axis_angle_deg(edge_direction(path, graph, i)));
    }
    Point lo = graph.node(path.nodes.front()).position;
    Point hi = lo;
    for (NodeIndex v : path.nodes) {
        lo = lo.cwiseMin(graph.node(v).position);
        hi = hi.cwiseMax(graph.node(v).position);
    }
    const double side = (hi - lo).maxCoeff();
    if (!(side > 0.0) || !(m.length > 0.0)) {
        throw DegenerateGeometryError("filament " + std::to_string(id) + " has a point-like bounding box", "metrics");
    }
    m.mean_weight = weighted / m.length;
    m.max_angle_deg = path.r_angle;
    m.median_angle_deg = median(std::move(angles));
    m.convolutedness = m.length / side;
    return m;
}

std::vector<FilamentMetrics> compute_metrics(const FilamentCover& cover, const WeightedGeometricGraph& graph) {
    std::vector<FilamentMetrics> rows;
    for (std::size_t i = 0; i < cover.selected.size(); ++i) {
        rows.push_back(filament_metrics(cover.selected[i], graph, static_cast<int>(i)));
    }
    return rows;
}

void write_metrics_csv(std::ostream& out, const std::vector<FilamentMetrics>& rows) {
    out << kMetricsHeader << '\n';
    for (const auto& m : rows) {
        out << m.filament_id << ',' << m.n_edges << ',' << format_real(m.length) << ',' << format_real(m.mean_weight)
            << ',' << format_real(m.roughness_pair) << ',' << format_real(m.roughness_all) << ','
            << format_real(m.max_angle_deg) << ',' << format_real(m.median_angle_deg) << ','
            << format_real(m.convolutedness) << '\n';
    }
}

}  // namespace filcover
