#include "filcover/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "filcover/error.hpp"
#include "filcover/random.hpp"

namespace filcover {

namespace {

// Assembles a graph from polylines on integer coordinates. Weights are given
// in hundredths so that they print and parse back to the same double.
class FixtureBuilder {
public:
    void chain(const std::vector<std::array<int, 2>>& points, int base_cents, bool start_high,
               std::vector<Label> labels) {
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            const bool high = (i % 2 == 0) == start_high;
            const int cents = base_cents + (high ? 2 : -2);
            edges_.push_back({node(points[i]), node(points[i + 1]), cents / 100.0});
            labels_.push_back(labels);
        }
    }

    Fixture build(std::string description) {
        Fixture f;
        f.graph = make_graph(nodes_, edges_);
        std::vector<std::vector<Label>> labels(static_cast<std::size_t>(f.graph.edge_count()));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto a = *f.graph.index_of(edges_[i].source);
            const auto b = *f.graph.index_of(edges_[i].target);
            labels[static_cast<std::size_t>(*f.graph.find_edge(a, b))] = labels_[i];
        }
        f.truth = EdgePartition(std::move(labels));
        f.description = std::move(description);
        return f;
    }

private:
    NodeId node(const std::array<int, 2>& p) {
        auto [it, fresh] = ids_.try_emplace(p, static_cast<NodeId>(nodes_.size()));
        if (fresh) nodes_.push_back({it->second, {static_cast<double>(p[0]), static_cast<double>(p[1])}});
        return it->second;
    }

    std::map<std::array<int, 2>, NodeId> ids_;
    std::vector<NodeSpec> nodes_;
    std::vector<EdgeSpec> edges_;
    std::vector<std::vector<Label>> labels_;
};

std::vector<std::array<int, 2>> ray(std::array<int, 2> from, std::array<int, 2> step, int count) {
    std::vector<std::array<int, 2>> pts;
    for (int i = 0; i <= count; ++i) pts.push_back({from[0] + i * step[0], from[1] + i * step[1]});
    return pts;
}

WeightedGeometricGraph grid_graph(const std::vector<std::array<int, 2>>& pos,
                                  const std::vector<std::array<int, 2>>& pairs, const std::vector<int>& weights) {
    std::vector<NodeSpec> nodes;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        nodes.push_back({static_cast<NodeId>(i), {static_cast<double>(pos[i][0]), static_cast<double>(pos[i][1])}});
    }
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        edges.push_back({pairs[i][0], pairs[i][1], static_cast<double>(weights[i % weights.size()])});
    }
    return make_graph(std::move(nodes), std::move(edges));
}

const std::vector<std::vector<int>> kWeightPatterns = {{1}, {1, 2}, {3, 1, 2}, {2, 2, 3, 1}};

}  // namespace

Fixture fixture_contrived() {
    enum : Label { kA, kB, kC, kD, kE, kLoop };
    FixtureBuilder b;

    // Right-angle crossing at (3, 0).
    b.chain(ray({0, 0}, {1, 0}, 6), 100, false, {kA});
    b.chain(ray({3, -3}, {0, 1}, 6), 140, false, {kB});

    // Two filaments sharing the run (10,6)-(13,6); C has a short lower-left
    // arm and a long upper-right arm, D the other way round.
    b.chain(ray({8, 4}, {1, 1}, 2), 200, false, {kC});
    b.chain(ray({10, 6}, {1, 0}, 3), 220, false, {kC, kD});
    b.chain(ray({13, 6}, {1, 1}, 6), 200, false, {kC});
    b.chain(ray({4, 12}, {1, -1}, 6), 240, false, {kD});
    b.chain(ray({13, 6}, {1, -1}, 2), 240, false, {kD});

    // Octagon with 45 degree turns, entered at a corner by a filament whose
    // direction deviates by more than 60 degrees from both loop edges.
    std::vector<std::array<int, 2>> loop = {{30, 0}, {32, 0}, {34, 2}, {34, 4}, {32, 6},
                                            {30, 6}, {28, 4}, {28, 2}, {30, 0}};
    b.chain(loop, 300, false, {kLoop});
    b.chain(ray({13, -4}, {5, 2}, 3), 340, false, {kE});

    return b.build("crossing, two-filament overlap and a loop with a sharply attached filament");
}

EdgePartition fragment_at_overlaps(const WeightedGeometricGraph& graph, const EdgePartition& truth) {
    truth.validate_for(graph.edge_count(), "generators");
    std::vector<std::vector<Label>> out(static_cast<std::size_t>(graph.edge_count()));
    Label next = 0;
    for (const auto& [label, edges] : truth.filaments()) {
        std::vector<char> done(edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (done[i]) continue;
            const Label fresh = next++;
            std::vector<std::size_t> run{i};
            done[i] = 1;
            while (!run.empty()) {
                const EdgeId e = edges[run.back()];
                run.pop_back();
                out[static_cast<std::size_t>(e)].push_back(fresh);
                for (std::size_t j = 0; j < edges.size(); ++j) {
                    if (done[j] || !graph.shared_node(e, edges[j])) continue;
                    const auto a = truth.labels(e);
                    const auto b = truth.labels(edges[j]);
                    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) continue;
                    done[j] = 1;
                    run.push_back(j);
                }
            }
        }
    }
    return EdgePartition(std::move(out));
}

WeightedGeometricGraph random_geometric_tree(int n, std::uint64_t seed) {
    if (n < 2) throw ValidationError("a random tree needs at least two nodes", "generators");
    Rng rng(seed);
    std::vector<Eigen::Vector2d> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p.x() = rng.uniform();
        p.y() = rng.uniform();
    }
    // Relative neighbourhood graph: p-q is an edge unless some r is closer
    // to both endpoints than they are to each other.
    std::vector<std::array<int, 2>> rng_edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dij = (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]).norm();
            bool blocked = false;
            for (int k = 0; k < n && !blocked; ++k) {
                if (k == i || k == j) continue;
                const double dik = (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(k)]).norm();
                const double djk = (pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(k)]).norm();
                blocked = std::max(dik, djk) < dij;
            }
            if (!blocked) rng_edges.push_back({i, j});
        }
    }
    std::vector<double> surrogate(rng_edges.size());
    for (auto& s : surrogate) s = rng.uniform();
    std::vector<std::size_t> order(rng_edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return surrogate[a] < surrogate[b]; });
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    std::vector<NodeSpec> nodes;
    for (int i = 0; i < n; ++i) {
        nodes.push_back({i, {pts[static_cast<std::size_t>(i)].x(), pts[static_cast<std::size_t>(i)].y()}});
    }
    std::vector<EdgeSpec> edges;
    for (std::size_t k : order) {
        const int a = find(rng_edges[k][0]);
        const int c = find(rng_edges[k][1]);
        if (a == c) continue;
        parent[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
        edges.push_back({rng_edges[k][0], rng_edges[k][1], 0.0});
    }
    for (auto& e : edges) e.weight = rng.uniform_open_closed();
    return make_graph(std::move(nodes), std::move(edges));
}

EdgePartition random_overlapping_tree_cover(const WeightedGeometricGraph& tree, int max_overlap_edges,
                                            std::uint64_t seed) {
    const int n = tree.node_count();
    const int m = tree.edge_count();
    if (m != n - 1 || tree.component_count() != 1) {
        throw NotATreeError("overlapping covers are drawn on connected trees only");
    }
    Rng rng(seed);
    std::vector<std::vector<Label>> labels(static_cast<std::size_t>(m));
    std::vector<int> count(static_cast<std::size_t>(m), 0);
    int uncovered = m;
    int overlap = 0;
    Label next = 0;

    std::vector<NodeIndex> parent(static_cast<std::size_t>(n));
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n));
    auto tree_path = [&](NodeIndex s, NodeIndex t) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(s)] = s;
        std::vector<NodeIndex> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const auto& inc : tree.incident(queue[qi])) {
                if (parent[static_cast<std::size_t>(inc.neighbor)] < 0) {
                    parent[static_cast<std::size_t>(inc.neighbor)] = queue[qi];
                    parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
                    queue.push_back(inc.neighbor);
                }
            }
        }
        std::vector<EdgeId> path;
        for (NodeIndex v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
            path.push_back(parent_edge[static_cast<std::size_t>(v)]);
        }
        return path;
    };
    auto add = [&](const std::vector<EdgeId>& path) {
        for (EdgeId e : path) {
            auto& c = count[static_cast<std::size_t>(e)];
            if (c == 0) --uncovered;
            else ++overlap;
            ++c;
            labels[static_cast<std::size_t>(e)].push_back(next);
        }
        ++next;
    };

    const std::int64_t patience = 1000LL * n;
    std::int64_t failures = 0;
    while (uncovered > 0) {
        const auto s = static_cast<NodeIndex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto t = static_cast<NodeIndex>(rng.below(static_cast<std::uint64_t>(n)));
        if (s != t) {
            const auto path = tree_path(s, t);
            int fresh = 0;
            int extra = 0;
            for (EdgeId e : path) (count[static_cast<std::size_t>(e)] == 0 ? fresh : extra) += 1;
            if (fresh > 0 && overlap + extra < max_overlap_edges) {
                add(path);
                continue;
            }
        }
        if (++failures >= patience) {
            // Finish with single uncovered edges, which add no overlap.
            for (EdgeId e = 0; e < m; ++e) {
                if (count[static_cast<std::size_t>(e)] == 0) add({e});
            }
        }
    }
    return EdgePartition(std::move(labels));
}

std::vector<WeightedGeometricGraph> enumerate_small_instances(int max_edges) {
    if (max_edges < 1 || max_edges > 7) throw ValidationError("max_edges must lie in [1, 7]", "generators");
    std::vector<WeightedGeometricGraph> out;
    auto emit = [&](const std::vector<std::array<int, 2>>& pos, const std::vector<std::array<int, 2>>& pairs,
                    const std::vector<int>& weights) {
        if (static_cast<int>(pairs.size()) <= max_edges) out.push_back(grid_graph(pos, pairs, weights));
    };

    // Paths, laid out straight and as a staircase.
    for (int len = 1; len <= 7; ++len) {
        for (const auto& w : kWeightPatterns) {
            std::vector<std::array<int, 2>> straight, stairs, pairs;
            for (int i = 0; i <= len; ++i) {
                straight.push_back({i, 0});
                stairs.push_back({(i + 1) / 2, i / 2});
            }
            for (int i = 0; i < len; ++i) pairs.push_back({i, i + 1});
            emit(straight, pairs, w);
            emit(stairs, pairs, w);
        }
    }

    // Stars around (1,1) using the eight grid neighbours.
    const std::vector<std::array<int, 2>> ring = {{2, 1}, {0, 1}, {1, 2}, {1, 0}, {2, 2}, {0, 0}, {2, 0}, {0, 2}};
    for (int k = 3; k <= 7; ++k) {
        for (const auto& w : kWeightPatterns) {
            std::vector<std::array<int, 2>> pos{{1, 1}}, pairs;
            for (int i = 0; i < k; ++i) {
                pos.push_back(ring[static_cast<std::size_t>(i)]);
                pairs.push_back({0, i + 1});
            }
            emit(pos, pairs, w);
        }
    }

    // Cycles along the boundary of the 3x3 grid.
    const std::vector<std::array<int, 2>> perimeter = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    const std::vector<std::vector<int>> cycle_picks = {
        {0, 2, 4}, {0, 2, 4, 6}, {0, 1, 2, 4, 6}, {0, 1, 2, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}};
    for (const auto& pick : cycle_picks) {
        for (const auto& w : kWeightPatterns) {
            std::vector<std::array<int, 2>> pos, pairs;
            const int k = static_cast<int>(pick.size());
            for (int i = 0; i < k; ++i) {
                pos.push_back(perimeter[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
                pairs.push_back({i, (i + 1) % k});
            }
            emit(pos, pairs, w);
        }
    }

    // Theta graphs: three internally disjoint paths between (0,0) and (4,0).
    const std::vector<std::array<int, 3>> thetas = {{1, 2, 2}, {1, 2, 3}, {2, 2, 2}, {1, 3, 3}, {2, 2, 3},
                                                    {1, 2, 4}, {2, 3, 2}, {1, 4, 2}, {3, 2, 2}, {2, 4, 1}};
    for (const auto& lens : thetas) {
        for (std::size_t wi = 0; wi < 2; ++wi) {
            std::vector<std::array<int, 2>> pos{{0, 0}, {4, 0}}, pairs;
            const std::array<int, 3> offsets = {0, 2, -2};
            for (int r = 0; r < 3; ++r) {
                const int len = lens[static_cast<std::size_t>(r)];
                int prev = 0;
                for (int j = 1; j < len; ++j) {
                    pos.push_back({4 * j / len, offsets[static_cast<std::size_t>(r)] + (len == 1 ? 0 : (r == 0 ? 1 : 0))});
                    pairs.push_back({prev, static_cast<int>(pos.size()) - 1});
                    prev = static_cast<int>(pos.size()) - 1;
                }
                pairs.push_back({prev, 1});
            }
            emit(pos, pairs, kWeightPatterns[wi + 2]);
        }
    }

    // Random connected graphs on the 3x3 grid.
    Rng rng(20240607);
    int made = 0;
    while (made < 100) {
        const int n = std::min(3 + static_cast<int>(rng.below(4)), max_edges + 1);
        std::vector<int> cells(9);
        std::iota(cells.begin(), cells.end(), 0);
        for (int i = 8; i > 0; --i) std::swap(cells[static_cast<std::size_t>(i)], cells[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<std::array<int, 2>> pos;
        for (int i = 0; i < n; ++i) pos.push_back({cells[static_cast<std::size_t>(i)] % 3, cells[static_cast<std::size_t>(i)] / 3});
        std::set<std::array<int, 2>> chosen;
        for (int i = 1; i < n; ++i) {
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
            chosen.insert({j, i});
        }
        const int target = std::min(max_edges, std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng.below(4))));
        while (static_cast<int>(chosen.size()) < target) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (a == c) continue;
            chosen.insert({std::min(a, c), std::max(a, c)});
        }
        if (static_cast<int>(chosen.size()) > max_edges) continue;
        std::vector<std::array<int, 2>> pairs(chosen.begin(), chosen.end());
        std::vector<int> w;
        for (std::size_t i = 0; i < pairs.size(); ++i) w.push_back(1 + static_cast<int>(rng.below(3)));
        emit(pos, pairs, w);
        ++made;
    }
    return out;
}

WeightedGeometricGraph random_line_network(int lines, std::uint64_t seed) {
    if (lines < 2) throw ValidationError("need at least two lines", "generators");
    Rng rng(seed);
    struct Line {
        Eigen::Vector2d p, d;
    };
    std::vector<Line> ls;
    for (int i = 0; i < lines; ++i) {
        const double theta = std::numbers::pi * rng.uniform();
        ls.push_back({{rng.uniform(), rng.uniform()}, {std::cos(theta), std::sin(theta)}});
    }
    std::vector<NodeSpec> nodes;
    std::vector<std::vector<std::pair<double, NodeId>>> on_line(static_cast<std::size_t>(lines));
    for (int i = 0; i < lines; ++i) {
        for (int j = i + 1; j < lines; ++j) {
            const auto& a = ls[static_cast<std::size_t>(i)];
            const auto& b = ls[static_cast<std::size_t>(j)];
            const double det = a.d.x() * (-b.d.y()) - a.d.y() * (-b.d.x());
            if (std::abs(det) < 1e-9) continue;
            const Eigen::Vector2d r = b.p - a.p;
            const double t = (r.x() * (-b.d.y()) - r.y() * (-b.d.x())) / det;
            const double s = (a.d.x() * r.y() - a.d.y() * r.x()) / det;
            const Eigen::Vector2d x = a.p + t * a.d;
            if (x.x() <= 0.0 || x.x() >= 1.0 || x.y() <= 0.0 || x.y() >= 1.0) continue;
            const auto id = static_cast<NodeId>(nodes.size());
            nodes.push_back({id, {x.x(), x.y()}});
            on_line[static_cast<std::size_t>(i)].emplace_back(t, id);
            on_line[static_cast<std::size_t>(j)].emplace_back(s, id);
        }
    }
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < lines; ++i) {
        auto& pts = on_line[static_cast<std::size_t>(i)];
        std::sort(pts.begin(), pts.end());
        const double base = 1.0 + 0.25 * i;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            edges.push_back({pts[k].second, pts[k + 1].second, base + 0.04 * (rng.uniform() - 0.5)});
        }
    }
    // Keep only nodes that carry an edge.
    std::set<NodeId> used;
    for (const auto& e : edges) used.insert(e.source), used.insert(e.target);
    std::erase_if(nodes, [&](const NodeSpec& n) { return used.count(n.id) == 0; });
    return make_graph(std::move(nodes), std::move(edges));
}

}  // namespace filcover
