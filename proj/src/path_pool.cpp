#include "filcover/path_pool.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "filcover/error.hpp"
#include "filcover/random.hpp"

namespace filcover {

namespace {

struct EdgeSeqHash {
    std::size_t operator()(const std::vector<EdgeId>& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (EdgeId e : v) h = mix_seed(h ^ static_cast<std::uint64_t>(e));
        return static_cast<std::size_t>(h);
    }
};

bool is_canonical(const std::vector<EdgeId>& edges) {
    return !std::lexicographical_compare(edges.rbegin(), edges.rend(), edges.begin(), edges.end());
}

void finish(PathPool& pool, const WeightedGeometricGraph& graph) {
    std::sort(pool.paths.begin(), pool.paths.end(),
              [](const FilamentPath& a, const FilamentPath& b) { return a.edges < b.edges; });
    std::vector<char> seen(static_cast<std::size_t>(graph.edge_count()), 0);
    for (const auto& p : pool.paths) {
        for (EdgeId e : p.edges) seen[static_cast<std::size_t>(e)] = 1;
    }
    pool.coverage_ok = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    pool.graph_signature = graph.signature();
    pool.edge_count = graph.edge_count();
}

void explode(std::int64_t cap) {
    throw PoolExplosionError("path pool exceeds the cap of " + std::to_string(cap) +
                             " paths; lower the angle threshold or raise --max-paths");
}

// Depth-first growth of edge-simple walks from one start node. With
// `use_angles`, an extension is admitted only if its deflection against the
// previous edge is below the threshold. Each path is recorded once, from the
// end that makes its edge sequence canonical.
class WalkEnumerator {
public:
    WalkEnumerator(const WeightedGeometricGraph& graph, bool use_angles, double threshold, std::int64_t cap,
                   std::vector<FilamentPath>& out)
        : graph_(graph), use_angles_(use_angles), threshold_(threshold), cap_(cap), out_(out),
          used_(static_cast<std::size_t>(graph.edge_count()), 0) {}

    void run(NodeIndex start) {
        start_ = start;
        nodes_.assign(1, start);
        edges_.clear();
        dirs_.clear();
        grow(start);
    }

private:
    void grow(NodeIndex cur) {
        for (const auto& inc : graph_.incident(cur)) {
            if (used_[static_cast<std::size_t>(inc.edge)]) continue;
            Point dir = Point::Zero();
            if (use_angles_) {
                dir = graph_.node(inc.neighbor).position - graph_.node(cur).position;
                if (dir.squaredNorm() == 0.0) {
                    throw DegenerateGeometryError("edge " + std::to_string(inc.edge) + " has coincident endpoints");
                }
                if (!dirs_.empty() && !(deflection_deg(dirs_.back(), dir) < threshold_)) continue;
            }
            used_[static_cast<std::size_t>(inc.edge)] = 1;
            edges_.push_back(inc.edge);
            nodes_.push_back(inc.neighbor);
            dirs_.push_back(dir);
            record();
            grow(inc.neighbor);
            dirs_.pop_back();
            nodes_.pop_back();
            edges_.pop_back();
            used_[static_cast<std::size_t>(inc.edge)] = 0;
        }
    }

    void record() {
        if (edges_.size() == 1) {
            if (graph_.edge(edges_[0]).source != start_) return;
        } else if (!is_canonical(edges_)) {
            return;
        }
        FilamentPath p;
        p.edges = edges_;
        p.nodes = nodes_;
        if (use_angles_ && p.size() >= 3 && p.closed()) {
            p.cyclic = deflection_deg(dirs_.back(), dirs_.front()) < threshold_;
        }
        p.r_pair = roughness_pair(p, graph_);
        p.r_all = roughness_all(p, graph_);
        p.r_angle = graph_.geometric() ? roughness_angle(p, graph_) : std::numeric_limits<double>::quiet_NaN();
        out_.push_back(std::move(p));
        if (static_cast<std::int64_t>(out_.size()) > cap_) explode(cap_);
    }

    const WeightedGeometricGraph& graph_;
    bool use_angles_;
    double threshold_;
    std::int64_t cap_;
    std::vector<FilamentPath>& out_;
    std::vector<char> used_;
    NodeIndex start_ = 0;
    std::vector<NodeIndex> nodes_;
    std::vector<EdgeId> edges_;
    std::vector<Point> dirs_;
};

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

}  // namespace

std::string to_string(PathMethod method) {
    switch (method) {
        case PathMethod::bfs: return "bfs";
        case PathMethod::rmst: return "rmst";
        case PathMethod::all: return "all";
        case PathMethod::mixed: return "mixed";
    }
    return "unknown";
}

void SamplerConfig::validate(int edge_count) const {
    if (!(angle_threshold_deg > 0.0 && angle_threshold_deg <= 180.0)) {
        throw ValidationError("angle threshold must lie in (0, 180]", "path-pool");
    }
    if (rmst_trees < 1) throw ValidationError("rmst_trees must be at least 1", "path-pool");
    if (max_paths < edge_count) throw ValidationError("max_paths must be at least the edge count", "path-pool");
}

PathPool sample_bfs(const WeightedGeometricGraph& graph, const SamplerConfig& config) {
    require_geometric(graph, "path-pool");
    config.validate(graph.edge_count());
    PathPool pool;
    pool.method = PathMethod::bfs;
    pool.parameters = config;
    WalkEnumerator walk(graph, true, config.angle_threshold_deg, config.max_paths, pool.paths);
    for (NodeIndex s = 0; s < graph.node_count(); ++s) walk.run(s);
    finish(pool, graph);
    return pool;
}

PathPool enumerate_all_paths(const WeightedGeometricGraph& graph, std::int64_t max_paths) {
    PathPool pool;
    pool.method = PathMethod::all;
    pool.parameters.max_paths = max_paths;
    WalkEnumerator walk(graph, false, 180.0, max_paths, pool.paths);
    for (NodeIndex s = 0; s < graph.node_count(); ++s) walk.run(s);
    finish(pool, graph);
    return pool;
}

PathPool sample_rmst(const WeightedGeometricGraph& graph, const SamplerConfig& config) {
    config.validate(graph.edge_count());
    const int n = graph.node_count();
    const int m = graph.edge_count();

    std::unordered_set<std::vector<EdgeId>, EdgeSeqHash> found;
    auto insert = [&](std::vector<EdgeId> edges) {
        found.insert(canonical_edges(edges));
        if (static_cast<std::int64_t>(found.size()) > config.max_paths) explode(config.max_paths);
    };
    for (EdgeId e = 0; e < m; ++e) insert({e});

    Rng rng(config.rng_seed);
    std::vector<double> surrogate(static_cast<std::size_t>(m));
    std::vector<EdgeId> order(static_cast<std::size_t>(m));
    std::vector<std::vector<Incidence>> tree(static_cast<std::size_t>(n));
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n));
    std::vector<NodeIndex> parent(static_cast<std::size_t>(n));
    std::vector<NodeIndex> queue;

    for (int t = 0; t < config.rmst_trees; ++t) {
        for (auto& s : surrogate) s = rng.uniform();
        std::iota(order.begin(), order.end(), 0);
        // Ties (equal 64-bit draws) go to the lower edge id.
        std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
            const double wa = surrogate[static_cast<std::size_t>(a)];
            const double wb = surrogate[static_cast<std::size_t>(b)];
            return wa < wb || (wa == wb && a < b);
        });
        DisjointSets dsu(n);
        for (auto& adj : tree) adj.clear();
        for (EdgeId e : order) {
            const auto& rec = graph.edge(e);
            if (dsu.unite(rec.source, rec.target)) {
                tree[static_cast<std::size_t>(rec.source)].push_back({rec.target, e});
                tree[static_cast<std::size_t>(rec.target)].push_back({rec.source, e});
            }
        }
        for (NodeIndex s = 0; s < n; ++s) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[static_cast<std::size_t>(s)] = s;
            queue.assign(1, s);
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const NodeIndex u = queue[qi];
                for (const auto& inc : tree[static_cast<std::size_t>(u)]) {
                    if (parent[static_cast<std::size_t>(inc.neighbor)] < 0) {
                        parent[static_cast<std::size_t>(inc.neighbor)] = u;
                        parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
                        queue.push_back(inc.neighbor);
                    }
                }
            }
            for (NodeIndex target : queue) {
                if (target <= s) continue;
                std::vector<EdgeId> edges;
                for (NodeIndex v = target; v != s; v = parent[static_cast<std::size_t>(v)]) {
                    edges.push_back(parent_edge[static_cast<std::size_t>(v)]);
                }
                insert(std::move(edges));
            }
        }
    }

    PathPool pool;
    pool.method = PathMethod::rmst;
    pool.parameters = config;
    pool.paths.reserve(found.size());
    for (const auto& edges : found) pool.paths.push_back(make_path(graph, edges));
    finish(pool, graph);
    return pool;
}

PathPool pool_union(const PathPool& a, const PathPool& b) {
    if (a.graph_signature != b.graph_signature || a.edge_count != b.edge_count) {
        throw GraphMismatchError("cannot merge path pools built on different graphs");
    }
    PathPool out;
    out.method = a.method == b.method ? a.method : PathMethod::mixed;
    out.parameters = a.parameters;
    out.graph_signature = a.graph_signature;
    out.edge_count = a.edge_count;
    out.paths.reserve(a.size() + b.size());
    auto less = [](const FilamentPath& x, const FilamentPath& y) { return x.edges < y.edges; };
    std::merge(a.paths.begin(), a.paths.end(), b.paths.begin(), b.paths.end(), std::back_inserter(out.paths), less);
    out.paths.erase(std::unique(out.paths.begin(), out.paths.end(),
                                [](const FilamentPath& x, const FilamentPath& y) { return x.edges == y.edges; }),
                    out.paths.end());
    out.coverage_ok = a.coverage_ok || b.coverage_ok;
    if (!out.coverage_ok) {
        std::vector<char> seen(static_cast<std::size_t>(out.edge_count), 0);
        for (const auto& p : out.paths) {
            for (EdgeId e : p.edges) seen[static_cast<std::size_t>(e)] = 1;
        }
        out.coverage_ok = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }
    return out;
}

}  // namespace filcover
