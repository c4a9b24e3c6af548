#include "filcover/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "filcover/error.hpp"

namespace filcover {

namespace {

void check_same_edges(const EdgePartition& a, const EdgePartition& b) {
    if (a.edge_count() != b.edge_count()) {
        throw GraphMismatchError("partitions label " + std::to_string(a.edge_count()) + " and " +
                                     std::to_string(b.edge_count()) + " edges",
                                 "similarity");
    }
}

bool intersects(std::span<const Label> x, std::span<const Label> y) {
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

double ratio(std::int64_t num, std::int64_t den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

RandJaccard finish(const ContingencyCounts& c) {
    return {ratio(c.h_ee + c.h_nn, c.total()), ratio(c.h_ee, c.h_ee + c.h_en + c.h_ne), c};
}

void classify(const EdgePartition& a, const EdgePartition& b, EdgeId e0, EdgeId e1, ContingencyCounts& c) {
    const bool sa = intersects(a.labels(e0), a.labels(e1));
    const bool sb = intersects(b.labels(e0), b.labels(e1));
    if (sa && sb) ++c.h_ee;
    else if (sa) ++c.h_en;
    else if (sb) ++c.h_ne;
    else ++c.h_nn;
}

}  // namespace

std::optional<double> variation_of_information(const EdgePartition& a, const EdgePartition& b) {
    check_same_edges(a, b);
    if (a.overlapping() || b.overlapping()) return std::nullopt;
    std::map<std::pair<Label, Label>, double> g;
    std::map<Label, double> row, col;
    double u = 0.0;
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        const auto la = a.labels(e);
        const auto lb = b.labels(e);
        if (la.empty() || lb.empty()) continue;
        g[{la[0], lb[0]}] += 1.0;
        row[la[0]] += 1.0;
        col[lb[0]] += 1.0;
        u += 1.0;
    }
    if (u <= 1.0) return 1.0;
    double sum = 0.0;
    for (const auto& [key, gij] : g) {
        sum += gij * (std::log(gij / col[key.second]) + std::log(gij / row[key.first]));
    }
    return 1.0 + sum / (u * std::log(u));
}

RandJaccard rand_jaccard(const EdgePartition& a, const EdgePartition& b, int d, const WeightedGeometricGraph* graph) {
    check_same_edges(a, b);
    if (d == kUnboundedHops) {
        ContingencyCounts c;
        for (EdgeId e0 = 0; e0 < a.edge_count(); ++e0) {
            for (EdgeId e1 = e0 + 1; e1 < a.edge_count(); ++e1) classify(a, b, e0, e1, c);
        }
        return finish(c);
    }
    if (graph == nullptr) throw ValidationError("a graph is required for finite distances", "similarity");
    return rand_jaccard(a, b, std::vector<int>{d}, *graph).front();
}

std::vector<RandJaccard> rand_jaccard(const EdgePartition& a, const EdgePartition& b, const std::vector<int>& ds,
                                      const WeightedGeometricGraph& graph) {
    check_same_edges(a, b);
    if (a.edge_count() != graph.edge_count()) {
        throw GraphMismatchError("partitions do not match the graph's edge set", "similarity");
    }
    int max_d = 0;
    for (int d : ds) {
        if (d < 1) throw ValidationError("distance must be at least 1", "similarity");
        if (d != kUnboundedHops) max_d = std::max(max_d, d);
    }
    std::vector<std::vector<int>> dist;
    if (max_d > 0) dist = edge_hop_distances(graph, max_d);

    std::vector<RandJaccard> out;
    for (int d : ds) {
        if (d == kUnboundedHops) {
            out.push_back(rand_jaccard(a, b, d, nullptr));
            continue;
        }
        ContingencyCounts c;
        c.d = d;
        for (EdgeId e0 = 0; e0 < a.edge_count(); ++e0) {
            const auto& row = dist[static_cast<std::size_t>(e0)];
            for (EdgeId e1 = e0 + 1; e1 < a.edge_count(); ++e1) {
                const int h = row[static_cast<std::size_t>(e1)];
                if (h >= 0 && h <= d) classify(a, b, e0, e1, c);
            }
        }
        out.push_back(finish(c));
    }
    return out;
}

SimilarityReport compare_partitions(const EdgePartition& a, const EdgePartition& b,
                                    const WeightedGeometricGraph& graph, const std::vector<int>& ds) {
    SimilarityReport report;
    report.vi = variation_of_information(a, b);
    const auto global = rand_jaccard(a, b, kUnboundedHops);
    report.ri = global.ri;
    report.ji = global.ji;
    const auto local = rand_jaccard(a, b, ds, graph);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        report.ri_d[ds[i]] = local[i].ri;
        report.ji_d[ds[i]] = local[i].ji;
    }
    return report;
}

namespace {

// Minimum-cost assignment on a square matrix (rows to columns) with the
// potential-based shortest augmenting path method. Returns the column of
// every row.
std::vector<int> hungarian(const Eigen::MatrixXd& cost) {
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0), v(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<int> p(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n + 1), inf);
        std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) assignment[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
    return assignment;
}

}  // namespace

FilamentMatching match_filament_identities(const EdgePartition& a, const EdgePartition& b) {
    check_same_edges(a, b);
    const auto la = a.distinct_labels();
    const auto lb = b.distinct_labels();
    const auto n = static_cast<Eigen::Index>(std::max(la.size(), lb.size()));
    FilamentMatching out;
    if (n == 0) return out;

    std::map<Label, Eigen::Index> ra, rb;
    for (std::size_t i = 0; i < la.size(); ++i) ra[la[i]] = static_cast<Eigen::Index>(i);
    for (std::size_t i = 0; i < lb.size(); ++i) rb[lb[i]] = static_cast<Eigen::Index>(i);
    Eigen::MatrixXd shared = Eigen::MatrixXd::Zero(n, n);
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        for (Label x : a.labels(e)) {
            for (Label y : b.labels(e)) shared(ra[x], rb[y]) += 1.0;
        }
    }
    const auto assignment = hungarian(-shared);
    for (std::size_t i = 0; i < la.size(); ++i) {
        const int j = assignment[i];
        if (j < 0 || static_cast<std::size_t>(j) >= lb.size()) continue;
        const double s = shared(static_cast<Eigen::Index>(i), j);
        if (s <= 0.0) continue;
        out.a_to_b[la[i]] = lb[static_cast<std::size_t>(j)];
        out.shared_edges += static_cast<std::int64_t>(s);
    }
    return out;
}

}  // namespace filcover
