#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "filcover/generators.hpp"
#include "filcover/line_graph.hpp"

using namespace filcover;

namespace {

bool is_tree(const WeightedGeometricGraph& g) {
    return g.edge_count() == g.node_count() - 1 && g.component_count() == 1;
}

// True when the edges form one path or one cycle.
bool path_or_cycle(const WeightedGeometricGraph& g, const std::vector<EdgeId>& edges) {
    std::map<NodeIndex, int> degree;
    for (EdgeId e : edges) ++degree[g.edge(e).source], ++degree[g.edge(e).target];
    int ends = 0;
    for (const auto& [v, d] : degree) {
        if (d > 2) return false;
        ends += d == 1;
    }
    if (ends != 0 && ends != 2) return false;
    std::set<EdgeId> seen{edges.front()};
    std::vector<EdgeId> stack{edges.front()};
    while (!stack.empty()) {
        const EdgeId x = stack.back();
        stack.pop_back();
        for (EdgeId y : edges) {
            if (!seen.count(y) && g.shared_node(x, y)) seen.insert(y), stack.push_back(y);
        }
    }
    return seen.size() == edges.size();
}

}  // namespace

TEST_CASE("fixture structure") {
    const auto fx = fixture_contrived();
    CHECK(fx.truth.complete());
    CHECK(fx.truth.overlapping());
    CHECK(fx.truth.edge_count() == fx.graph.edge_count());
    const auto filaments = fx.truth.filaments();
    CHECK(filaments.size() >= 4);
    bool loop = false;
    for (const auto& [label, edges] : filaments) {
        CHECK(path_or_cycle(fx.graph, edges));
        std::map<NodeIndex, int> degree;
        for (EdgeId e : edges) ++degree[fx.graph.edge(e).source], ++degree[fx.graph.edge(e).target];
        loop = loop || std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; });
        // The shared run sits between its two filaments' levels; the spread
        // is checked on edges owned by one filament.
        double lo = 1e9, hi = -1e9;
        for (EdgeId e : edges) {
            if (fx.truth.labels(e).size() != 1) continue;
            lo = std::min(lo, fx.graph.weight(e));
            hi = std::max(hi, fx.graph.weight(e));
        }
        CHECK(hi - lo <= 0.04 + 1e-12);
    }
    CHECK(loop);
    bool crossing = false;
    for (NodeIndex v = 0; v < fx.graph.node_count(); ++v) crossing = crossing || fx.graph.degree(v) == 4;
    CHECK(crossing);

    std::vector<double> means;
    for (const auto& [label, edges] : filaments) {
        double s = 0.0;
        int n = 0;
        for (EdgeId e : edges) {
            if (fx.truth.labels(e).size() != 1) continue;
            s += fx.graph.weight(e);
            ++n;
        }
        means.push_back(s / n);
    }
    std::sort(means.begin(), means.end());
    for (std::size_t i = 1; i < means.size(); ++i) CHECK(means[i] - means[i - 1] >= 0.2 - 1e-9);
}

TEST_CASE("fragments split at overlaps") {
    const auto fx = fixture_contrived();
    const auto fragments = fragment_at_overlaps(fx.graph, fx.truth);
    CHECK(fragments.complete());
    CHECK(fragments.filaments().size() > fx.truth.filaments().size());
    for (const auto& [label, edges] : fragments.filaments()) {
        CHECK(path_or_cycle(fx.graph, edges));
        for (EdgeId e : edges) {
            const auto a = fx.truth.labels(e);
            const auto b = fx.truth.labels(edges.front());
            CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
}

TEST_CASE("random geometric trees") {
    const auto a = random_geometric_tree(60, 11);
    CHECK(is_tree(a));
    for (const auto& n : a.nodes()) {
        CHECK(n.position.x() >= 0.0);
        CHECK(n.position.x() <= 1.0);
        CHECK(n.position.y() >= 0.0);
        CHECK(n.position.y() <= 1.0);
    }
    for (const auto& e : a.edges()) {
        CHECK(e.weight > 0.0);
        CHECK(e.weight <= 1.0);
    }
    CHECK(a.signature() == random_geometric_tree(60, 11).signature());
    CHECK(a.signature() != random_geometric_tree(60, 12).signature());
    CHECK(is_tree(random_geometric_tree(2, 1)));
}

TEST_CASE("random overlapping tree covers") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto tree = random_geometric_tree(40, seed);
        const auto cover = random_overlapping_tree_cover(tree, 10, seed);
        CHECK(cover.complete());
        int overlap = 0;
        for (EdgeId e = 0; e < tree.edge_count(); ++e) overlap += static_cast<int>(cover.labels(e).size()) - 1;
        CHECK(overlap < 10);
        CHECK(cover == random_overlapping_tree_cover(tree, 10, seed));
        for (const auto& [label, edges] : cover.filaments()) CHECK(path_or_cycle(tree, edges));
    }
}

TEST_CASE("small instance corpus") {
    const auto corpus = enumerate_small_instances(7);
    CHECK(corpus.size() >= 200);
    bool star = false, square = false;
    for (const auto& g : corpus) {
        CHECK(g.edge_count() <= 7);
        CHECK(g.component_count() == 1);
        for (const auto& e : g.edges()) CHECK((e.weight == 1.0 || e.weight == 2.0 || e.weight == 3.0));
        std::vector<int> deg;
        for (NodeIndex v = 0; v < g.node_count(); ++v) deg.push_back(g.degree(v));
        std::sort(deg.begin(), deg.end());
        star = star || deg == std::vector<int>{1, 1, 1, 3};
        square = square || deg == std::vector<int>{2, 2, 2, 2};
    }
    CHECK(star);
    CHECK(square);
    CHECK(enumerate_small_instances(7).size() == corpus.size());
    for (const auto& g : enumerate_small_instances(4)) CHECK(g.edge_count() <= 4);
}

TEST_CASE("line networks") {
    const auto g = random_line_network(20, 1);
    CHECK(g.edge_count() > 150);
    CHECK(g.signature() == random_line_network(20, 1).signature());
    for (NodeIndex v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) >= 1);
}
