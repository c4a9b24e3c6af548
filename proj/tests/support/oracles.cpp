#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

using filcover::EdgeSpec;
using filcover::NodeIndex;
using filcover::NodeSpec;

WeightedGeometricGraph graph_from(const std::vector<std::pair<double, double>>& pos,
                                  const std::vector<std::pair<int, int>>& pairs, const std::vector<double>& weights) {
    std::vector<NodeSpec> nodes;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        nodes.push_back({static_cast<filcover::NodeId>(i), {pos[i].first, pos[i].second}});
    }
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].first, pairs[i].second, weights[i]});
    return filcover::make_graph(std::move(nodes), std::move(edges));
}

WeightedGeometricGraph path_graph(const std::vector<double>& weights) {
    std::vector<std::pair<double, double>> pos;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i <= weights.size(); ++i) pos.emplace_back(static_cast<double>(i), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return graph_from(pos, pairs, weights);
}

WeightedGeometricGraph star_graph(int k, double weight) {
    const std::vector<std::pair<double, double>> dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                                         {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    std::vector<std::pair<double, double>> pos{{0, 0}};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
        pos.push_back(dirs[static_cast<std::size_t>(i)]);
        pairs.emplace_back(0, i + 1);
    }
    return graph_from(pos, pairs, std::vector<double>(static_cast<std::size_t>(k), weight));
}

namespace {

unsigned mask_of(const std::vector<int>& set) {
    unsigned m = 0;
    for (int e : set) m |= 1u << e;
    return m;
}

}  // namespace

std::optional<double> min_cover_cost(int element_count, const std::vector<std::vector<int>>& sets,
                                     const std::vector<double>& costs, bool exact) {
    // 0/1 knapsack over covered-element masks: best[m] is the cheapest
    // selection (each set at most once) whose union is exactly m.
    const unsigned full = (1u << element_count) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best(full + 1, inf);
    best[0] = 0.0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const unsigned sm = mask_of(sets[s]);
        std::vector<double> next = best;
        for (unsigned m = 0; m <= full; ++m) {
            if (best[m] == inf) continue;
            if (exact && (m & sm) != 0) continue;
            next[m | sm] = std::min(next[m | sm], best[m] + costs[s]);
        }
        best = std::move(next);
    }
    if (best[full] == inf) return std::nullopt;
    return best[full];
}

std::optional<double> min_average_cover_cost(int element_count, const std::vector<std::vector<int>>& sets,
                                             const std::vector<double>& costs, bool exact) {
    // Same table, additionally indexed by the number of selected sets.
    const unsigned full = (1u << element_count) - 1;
    const std::size_t n = sets.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best(n + 1, std::vector<double>(full + 1, inf));
    best[0][0] = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const unsigned sm = mask_of(sets[s]);
        auto next = best;
        for (std::size_t k = 0; k < n; ++k) {
            for (unsigned m = 0; m <= full; ++m) {
                if (best[k][m] == inf) continue;
                if (exact && (m & sm) != 0) continue;
                next[k + 1][m | sm] = std::min(next[k + 1][m | sm], best[k][m] + costs[s]);
            }
        }
        best = std::move(next);
    }
    std::optional<double> out;
    for (std::size_t k = 1; k <= n; ++k) {
        if (best[k][full] == inf) continue;
        const double v = best[k][full] / static_cast<double>(k);
        if (!out || v < *out) out = v;
    }
    return out;
}

std::optional<double> min_big_m_program(int element_count, const std::vector<std::vector<int>>& sets,
                                        const std::vector<double>& costs, bool exact, double big_m) {
    const std::size_t n = sets.size();
    const double tol = 1e-12;
    std::optional<double> best;
    std::vector<double> z(n);
    for (unsigned long x = 1; x < (1ul << n); ++x) {
        auto xp = [&](std::size_t p) { return static_cast<double>((x >> p) & 1ul); };
        // The constraints z_p <= y, y - z_p <= M(1 - x_p), z_p <= M x_p and
        // z_p >= 0 pin z_p = x_p y; sum z_p = 1 then pins y = 1 / sum x_p.
        // Those values are substituted and every constraint is re-checked.
        double count = 0.0;
        for (std::size_t p = 0; p < n; ++p) count += xp(p);
        const double y = 1.0 / count;
        for (std::size_t p = 0; p < n; ++p) z[p] = xp(p) * y;

        bool ok = y >= 0.0;
        double zsum = 0.0;
        for (std::size_t p = 0; p < n && ok; ++p) {
            zsum += z[p];
            ok = (y - z[p] <= big_m - big_m * xp(p) + tol) && (z[p] <= y + tol) && (z[p] <= big_m * xp(p) + tol) &&
                 (z[p] >= 0.0);
        }
        ok = ok && std::abs(zsum - 1.0) <= tol;
        for (int e = 0; e < element_count && ok; ++e) {
            double covered = 0.0;
            for (std::size_t p = 0; p < n; ++p) {
                if (std::find(sets[p].begin(), sets[p].end(), e) != sets[p].end()) covered += z[p];
            }
            ok = exact ? std::abs(covered - y) <= tol : covered >= y - tol;
        }
        if (!ok) continue;
        double objective = 0.0;
        for (std::size_t p = 0; p < n; ++p) objective += costs[p] * z[p];
        if (!best || objective < *best) best = objective;
    }
    return best;
}

std::optional<double> min_bounded_cover_cost(int element_count, const std::vector<std::vector<int>>& sets,
                                             const std::vector<double>& costs, int k, bool average) {
    // State: coverage count of every element in base k + 1, plus the number
    // of selected sets.
    std::size_t states = 1;
    for (int e = 0; e < element_count; ++e) states *= static_cast<std::size_t>(k + 1);
    const std::size_t n = sets.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best(n + 1, std::vector<double>(states, inf));
    best[0][0] = 0.0;
    auto digit = [&](std::size_t code, int e) {
        for (int i = 0; i < e; ++i) code /= static_cast<std::size_t>(k + 1);
        return static_cast<int>(code % static_cast<std::size_t>(k + 1));
    };
    for (std::size_t s = 0; s < n; ++s) {
        auto next = best;
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t code = 0; code < states; ++code) {
                if (best[c][code] == inf) continue;
                std::size_t to = code;
                bool ok = true;
                for (int e : sets[s]) {
                    if (digit(code, e) == k) ok = false;
                    std::size_t place = 1;
                    for (int i = 0; i < e; ++i) place *= static_cast<std::size_t>(k + 1);
                    to += place;
                }
                if (ok) next[c + 1][to] = std::min(next[c + 1][to], best[c][code] + costs[s]);
            }
        }
        best = std::move(next);
    }
    std::optional<double> out;
    for (std::size_t c = 1; c <= n; ++c) {
        for (std::size_t code = 0; code < states; ++code) {
            if (best[c][code] == inf) continue;
            bool covered = true;
            for (int e = 0; e < element_count; ++e) covered = covered && digit(code, e) >= 1;
            if (!covered) continue;
            const double v = average ? best[c][code] / static_cast<double>(c) : best[c][code];
            if (!out || v < *out) out = v;
        }
    }
    return out;
}

namespace {

struct Walk {
    std::vector<EdgeId> edges;
    std::vector<NodeIndex> nodes;
};

double turn_deg(const WeightedGeometricGraph& g, NodeIndex a, NodeIndex b, NodeIndex c) {
    const auto& pa = g.node(a).position;
    const auto& pb = g.node(b).position;
    const auto& pc = g.node(c).position;
    const double ux = pb.x() - pa.x(), uy = pb.y() - pa.y(), uz = pb.z() - pa.z();
    const double vx = pc.x() - pb.x(), vy = pc.y() - pb.y(), vz = pc.z() - pb.z();
    const double cosv = (ux * vx + uy * vy + uz * vz) /
                        (std::sqrt(ux * ux + uy * uy + uz * uz) * std::sqrt(vx * vx + vy * vy + vz * vz));
    return std::acos(std::max(-1.0, std::min(1.0, cosv))) * 180.0 / 3.14159265358979323846;
}

// All ordered sequences of distinct edges that form a walk, by extending
// every permutation prefix; independent of the library's enumerator.
void sequences(const WeightedGeometricGraph& g, std::vector<Walk>& out) {
    const int m = g.edge_count();
    std::vector<Walk> frontier;
    for (EdgeId e = 0; e < m; ++e) {
        const auto& r = g.edge(e);
        frontier.push_back({{e}, {r.source, r.target}});
        frontier.push_back({{e}, {r.target, r.source}});
    }
    while (!frontier.empty()) {
        std::vector<Walk> next;
        for (const auto& w : frontier) {
            out.push_back(w);
            for (EdgeId e = 0; e < m; ++e) {
                if (std::find(w.edges.begin(), w.edges.end(), e) != w.edges.end()) continue;
                const auto& r = g.edge(e);
                const NodeIndex end = w.nodes.back();
                if (r.source != end && r.target != end) continue;
                Walk x = w;
                x.edges.push_back(e);
                x.nodes.push_back(r.source == end ? r.target : r.source);
                next.push_back(std::move(x));
            }
        }
        frontier = std::move(next);
    }
}

std::vector<EdgeId> canon(const std::vector<EdgeId>& e) {
    std::vector<EdgeId> r(e.rbegin(), e.rend());
    return std::min(e, r);
}

}  // namespace

std::set<std::pair<std::vector<EdgeId>, bool>> angle_paths(const WeightedGeometricGraph& graph, double threshold_deg) {
    std::vector<Walk> walks;
    sequences(graph, walks);
    std::set<std::pair<std::vector<EdgeId>, bool>> out;
    for (const auto& w : walks) {
        const std::size_t p = w.edges.size();
        double worst = 0.0;
        for (std::size_t i = 0; i + 2 < w.nodes.size(); ++i) {
            worst = std::max(worst, turn_deg(graph, w.nodes[i], w.nodes[i + 1], w.nodes[i + 2]));
        }
        if (!(worst < threshold_deg)) continue;
        bool cyclic = false;
        if (p >= 3 && w.nodes.front() == w.nodes.back()) {
            cyclic = turn_deg(graph, w.nodes[p - 1], w.nodes[p], w.nodes[1]) < threshold_deg;
        }
        out.emplace(canon(w.edges), cyclic);
    }
    return out;
}

std::set<std::vector<EdgeId>> all_paths(const WeightedGeometricGraph& graph) {
    std::vector<Walk> walks;
    sequences(graph, walks);
    std::set<std::vector<EdgeId>> out;
    for (const auto& w : walks) out.insert(canon(w.edges));
    return out;
}

double pair_roughness(const WeightedGeometricGraph& graph, const std::vector<EdgeId>& edges) {
    if (edges.size() == 1) return graph.weight(edges[0]);
    double s = 0.0;
    for (std::size_t i = 1; i < edges.size(); ++i) s += std::abs(graph.weight(edges[i]) - graph.weight(edges[i - 1]));
    return s / static_cast<double>(edges.size() - 1);
}

double all_roughness(const WeightedGeometricGraph& graph, const std::vector<EdgeId>& edges) {
    if (edges.size() == 1) return graph.weight(edges[0]);
    double spread = 0.0;
    for (EdgeId a : edges) {
        for (EdgeId b : edges) spread = std::max(spread, std::abs(graph.weight(a) - graph.weight(b)));
    }
    return spread / static_cast<double>(edges.size() - 1);
}

std::string data_path(const std::string& name) { return std::string(FILCOVER_DATA_DIR) + "/" + name; }

}  // namespace oracle
