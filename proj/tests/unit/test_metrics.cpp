#include <doctest.h>

#include <cmath>
#include <sstream>

#include "filcover/cover_solver.hpp"
#include "filcover/error.hpp"
#include "filcover/generators.hpp"
#include "filcover/metrics.hpp"
#include "oracles.hpp"

using namespace filcover;

namespace {

FilamentMetrics single(const WeightedGeometricGraph& g, std::vector<EdgeId> edges) {
    return filament_metrics(make_path(g, std::move(edges)), g, 0);
}

}  // namespace

TEST_CASE("straight filament") {
    const auto g = oracle::path_graph({1, 1});
    const auto m = single(g, {0, 1});
    CHECK(m.length == doctest::Approx(2.0));
    CHECK(m.convolutedness == doctest::Approx(1.0));
    CHECK(m.median_angle_deg == doctest::Approx(0.0));
    CHECK(m.max_angle_deg == doctest::Approx(0.0));
    CHECK(m.n_edges == 2);
}

TEST_CASE("L-shaped filament") {
    const auto g = oracle::graph_from({{0, 0}, {1, 0}, {1, 1}}, {{0, 1}, {1, 2}}, {1, 3});
    const auto m = single(g, {0, 1});
    CHECK(m.length == doctest::Approx(2.0));
    CHECK(m.convolutedness == doctest::Approx(2.0));
    CHECK(m.max_angle_deg == doctest::Approx(90.0));
    CHECK(m.median_angle_deg == doctest::Approx(45.0));
    CHECK(m.mean_weight == doctest::Approx(2.0));
}

TEST_CASE("vertical edge and length weighting") {
    const auto g = oracle::graph_from({{0, 0}, {0, 1}, {0, 4}}, {{0, 1}, {1, 2}}, {1, 2});
    CHECK(single(g, {0}).median_angle_deg == doctest::Approx(90.0));
    CHECK(single(g, {0, 1}).mean_weight == doctest::Approx((1 * 1 + 2 * 3) / 4.0));
}

TEST_CASE("angles fold into the first quadrant") {
    const auto g = oracle::graph_from({{0, 0}, {-1, 1}, {-3, 1}}, {{0, 1}, {1, 2}}, {1, 1});
    CHECK(single(g, {0}).median_angle_deg == doctest::Approx(45.0));
    CHECK(single(g, {1}).median_angle_deg == doctest::Approx(0.0));
}

TEST_CASE("translation invariance and shared angle implementation") {
    const auto fx = fixture_contrived();
    const auto cover = make_cover({make_path(fx.graph, {0, 1, 2})}, fx.graph.edge_count(), Objective::total,
                                  RoughnessKind::pair);
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    for (const auto& n : fx.graph.nodes()) nodes.push_back({n.id, {n.position.x() + 3.5, n.position.y() - 7.25}});
    for (const auto& e : fx.graph.edges()) {
        edges.push_back({fx.graph.node(e.source).id, fx.graph.node(e.target).id, e.weight});
    }
    const auto moved = make_graph(nodes, edges);
    const auto a = compute_metrics(cover, fx.graph);
    const auto b = filament_metrics(make_path(moved, {0, 1, 2}), moved, 0);
    CHECK(a[0].convolutedness == doctest::Approx(b.convolutedness));
    CHECK(a[0].max_angle_deg == roughness_angle(cover.selected[0], fx.graph));
}

TEST_CASE("point-like bounding box") {
    const auto g = oracle::graph_from({{0, 0}, {1, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {1, 1});
    CHECK_THROWS_AS(single(g, {1}), DegenerateGeometryError);
}

TEST_CASE("graph without coordinates") {
    const auto g = make_graph({{0, {}}, {1, {}}}, {{0, 1, 2.0}});
    FilamentPath p;
    p.edges = {0};
    p.nodes = {0, 1};
    p.r_pair = p.r_all = 2.0;
    const auto m = filament_metrics(p, g, 0);
    CHECK(std::isnan(m.length));
    CHECK(std::isnan(m.convolutedness));
    CHECK(m.mean_weight == 2.0);
}

TEST_CASE("CSV table") {
    const auto fx = fixture_contrived();
    const auto cover = solve_total(sample_bfs(fx.graph, SamplerConfig{}), fx.graph, SolverConfig{});
    const auto rows = compute_metrics(cover, fx.graph);
    CHECK(rows.size() == cover.selected.size());
    std::ostringstream out;
    write_metrics_csv(out, rows);
    const auto text = out.str();
    CHECK(text.rfind("filament_id,n_edges,length,mean_weight,roughness_pair,roughness_all,max_angle_deg,"
                     "median_angle_deg,convolutedness\n",
                     0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(rows.size()) + 1);
    for (const auto& r : rows) CHECK(r.convolutedness >= 1.0);
}
