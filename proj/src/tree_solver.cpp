#include "filcover/tree_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "filcover/error.hpp"

namespace filcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDegree = 20;
constexpr int kMaxDinkelbachIterations = 100;

// Cost with the number of paths as tie-breaker, so that equally rough
// covers resolve to the one with fewer filaments.
struct Score {
    double cost = kInf;
    int paths = 0;

    Score operator+(const Score& o) const { return {cost + o.cost, paths + o.paths}; }
};

bool better(const Score& a, const Score& b) {
    if (std::isinf(a.cost) || std::isinf(b.cost)) return a.cost < b.cost;
    const double tol = 1e-12 * std::max({1.0, std::abs(a.cost), std::abs(b.cost)});
    if (a.cost < b.cost - tol) return true;
    if (a.cost > b.cost + tol) return false;
    return a.paths < b.paths;
}

struct Endpoints {
    NodeIndex a;
    NodeIndex b;
};

// Rooted view of the tree with all-pairs path roughness.
class RootedTree {
public:
    RootedTree(const WeightedGeometricGraph& graph, RoughnessKind kind) : graph_(graph) {
        const int n = graph.node_count();
        parent_.assign(static_cast<std::size_t>(n), -1);
        parent_edge_.assign(static_cast<std::size_t>(n), -1);
        children_.assign(static_cast<std::size_t>(n), {});
        child_pos_.assign(static_cast<std::size_t>(n), -1);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<NodeIndex> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            order_.push_back(v);
            for (const auto& inc : graph.incident(v)) {
                if (seen[static_cast<std::size_t>(inc.neighbor)]) continue;
                seen[static_cast<std::size_t>(inc.neighbor)] = 1;
                parent_[static_cast<std::size_t>(inc.neighbor)] = v;
                parent_edge_[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
                child_pos_[static_cast<std::size_t>(inc.neighbor)] = static_cast<int>(children_[static_cast<std::size_t>(v)].size());
                children_[static_cast<std::size_t>(v)].push_back(inc.neighbor);
                stack.push_back(inc.neighbor);
            }
        }
        std::reverse(order_.begin(), order_.end());

        // Path roughness from every source by a walk over the tree that
        // carries running sums along the current path.
        cost_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        struct Frame {
            NodeIndex v, from;
            int count;
            double last, diff_sum, lo, hi;
        };
        for (NodeIndex s = 0; s < n; ++s) {
            std::vector<Frame> frames{{s, -1, 0, 0.0, 0.0, kInf, -kInf}};
            while (!frames.empty()) {
                const Frame f = frames.back();
                frames.pop_back();
                if (f.count > 0) {
                    double r;
                    if (f.count == 1) {
                        r = f.last;
                    } else if (kind == RoughnessKind::pair) {
                        r = f.diff_sum / (f.count - 1);
                    } else {
                        r = (f.hi - f.lo) / (f.count - 1);
                    }
                    cost_[index(s, f.v)] = r;
                }
                for (const auto& inc : graph.incident(f.v)) {
                    if (inc.neighbor == f.from) continue;
                    const double w = graph.weight(inc.edge);
                    frames.push_back({inc.neighbor, f.v, f.count + 1, w,
                                      f.diff_sum + (f.count > 0 ? std::abs(w - f.last) : 0.0), std::min(f.lo, w),
                                      std::max(f.hi, w)});
                }
            }
        }
    }

    int size() const { return graph_.node_count(); }
    NodeIndex parent(NodeIndex v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeIndex>& children(NodeIndex v) const { return children_[static_cast<std::size_t>(v)]; }
    int child_pos(NodeIndex v) const { return child_pos_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeIndex>& post_order() const { return order_; }
    double cost(NodeIndex a, NodeIndex b) const { return cost_[index(a, b)]; }

    /// Nodes of the subtree rooted at v.
    std::vector<NodeIndex> subtree(NodeIndex v) const {
        std::vector<NodeIndex> out{v};
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (NodeIndex c : children(out[i])) out.push_back(c);
        }
        return out;
    }

    /// Edge sequence of the tree path from a to b.
    std::vector<EdgeId> path_edges(NodeIndex a, NodeIndex b) const {
        std::vector<char> on_a(static_cast<std::size_t>(size()), 0);
        for (NodeIndex v = a; v >= 0; v = parent(v)) on_a[static_cast<std::size_t>(v)] = 1;
        NodeIndex meet = b;
        while (!on_a[static_cast<std::size_t>(meet)]) meet = parent(meet);
        std::vector<EdgeId> left, right;
        for (NodeIndex v = a; v != meet; v = parent(v)) left.push_back(parent_edge_[static_cast<std::size_t>(v)]);
        for (NodeIndex v = b; v != meet; v = parent(v)) right.push_back(parent_edge_[static_cast<std::size_t>(v)]);
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
    }

private:
    std::size_t index(NodeIndex a, NodeIndex b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(b);
    }

    const WeightedGeometricGraph& graph_;
    std::vector<NodeIndex> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<std::vector<NodeIndex>> children_;
    std::vector<int> child_pos_;
    std::vector<NodeIndex> order_;
    std::vector<double> cost_;
};

// Disjoint covers (k = 1). best[x][S] is the cheapest partition of the edges
// below x into child set S (edges x-c for c in S and the subtrees of those c)
// by paths that do not rise above x. The path covering edge x-c for the
// lowest c in S either stops at x or turns down into another child c'.
class DisjointDp {
public:
    DisjointDp(const RootedTree& tree, double shift) : tree_(tree), shift_(shift) {
        const int n = tree.size();
        best_.resize(static_cast<std::size_t>(n));
        choice_.resize(static_cast<std::size_t>(n));
        single_arg_.resize(static_cast<std::size_t>(n));
        pair_arg_.resize(static_cast<std::size_t>(n));
        for (NodeIndex x : tree.post_order()) process(x);
    }

    Score value() const { return best_[0][full(0)]; }

    std::vector<Endpoints> paths() const {
        std::vector<Endpoints> out;
        emit(0, full(0), out);
        return out;
    }

private:
    unsigned full(NodeIndex v) const { return (1u << tree_.children(v).size()) - 1u; }

    Score path_score(NodeIndex a, NodeIndex b) const { return {tree_.cost(a, b) - shift_, 1}; }

    Score best_full_minus(NodeIndex v, NodeIndex child) const {
        return best_[static_cast<std::size_t>(v)][full(v) & ~(1u << tree_.child_pos(child))];
    }

    // Cost of the parts of T_c left over when a path enters T_c at c and
    // stops at y: every node on the way keeps its other children.
    std::vector<std::pair<NodeIndex, Score>> residual_costs(NodeIndex c) const {
        std::vector<std::pair<NodeIndex, Score>> out;
        std::vector<std::pair<NodeIndex, Score>> stack{{c, Score{0.0, 0}}};
        while (!stack.empty()) {
            const auto [v, acc] = stack.back();
            stack.pop_back();
            out.emplace_back(v, acc + best_[static_cast<std::size_t>(v)][full(v)]);
            for (NodeIndex w : tree_.children(v)) stack.emplace_back(w, acc + best_full_minus(v, w));
        }
        return out;
    }

    void process(NodeIndex x) {
        const auto& ch = tree_.children(x);
        const int d = static_cast<int>(ch.size());
        if (d > kMaxDegree) {
            throw ValidationError("node degree " + std::to_string(d) + " exceeds the tree solver limit", "tree-solver");
        }
        const auto xs = static_cast<std::size_t>(x);
        std::vector<std::vector<std::pair<NodeIndex, Score>>> down(ch.size());
        for (std::size_t i = 0; i < ch.size(); ++i) down[i] = residual_costs(ch[i]);

        std::vector<Score> single(ch.size());
        single_arg_[xs].assign(ch.size(), -1);
        for (std::size_t i = 0; i < ch.size(); ++i) {
            for (const auto& [y, rest] : down[i]) {
                const Score v = path_score(y, x) + rest;
                if (better(v, single[i])) single[i] = v, single_arg_[xs][i] = y;
            }
        }
        std::vector<std::vector<Score>> pair(ch.size(), std::vector<Score>(ch.size()));
        pair_arg_[xs].assign(ch.size() * ch.size(), {-1, -1});
        for (std::size_t i = 0; i < ch.size(); ++i) {
            for (std::size_t j = i + 1; j < ch.size(); ++j) {
                for (const auto& [y, ry] : down[i]) {
                    for (const auto& [z, rz] : down[j]) {
                        const Score v = path_score(y, z) + ry + rz;
                        if (better(v, pair[i][j])) pair[i][j] = v, pair_arg_[xs][i * ch.size() + j] = {y, z};
                    }
                }
            }
        }

        const unsigned states = 1u << d;
        auto& best = best_[xs];
        auto& choice = choice_[xs];
        best.assign(states, Score{});
        choice.assign(states, {-1, -1});
        best[0] = Score{0.0, 0};
        for (unsigned s = 1; s < states; ++s) {
            const int i = std::countr_zero(s);
            const unsigned rest = s & ~(1u << i);
            Score v = single[static_cast<std::size_t>(i)] + best[rest];
            if (better(v, best[s])) best[s] = v, choice[s] = {i, -1};
            for (int j = i + 1; j < d; ++j) {
                if (!(rest & (1u << j))) continue;
                v = pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + best[rest & ~(1u << j)];
                if (better(v, best[s])) best[s] = v, choice[s] = {i, j};
            }
        }
    }

    // Emits the leftovers of T_c below the path that runs from c down to y.
    void emit_side(NodeIndex c, NodeIndex y, std::vector<Endpoints>& out) const {
        emit(y, full(y), out);
        for (NodeIndex v = y; v != c; v = tree_.parent(v)) {
            const NodeIndex p = tree_.parent(v);
            emit(p, full(p) & ~(1u << tree_.child_pos(v)), out);
        }
    }

    void emit(NodeIndex x, unsigned s, std::vector<Endpoints>& out) const {
        const auto xs = static_cast<std::size_t>(x);
        const auto& ch = tree_.children(x);
        while (s != 0) {
            const auto [i, j] = choice_[xs][s];
            const NodeIndex ci = ch[static_cast<std::size_t>(i)];
            if (j < 0) {
                const NodeIndex y = single_arg_[xs][static_cast<std::size_t>(i)];
                out.push_back({y, x});
                emit_side(ci, y, out);
                s &= ~(1u << i);
            } else {
                const auto [y, z] = pair_arg_[xs][static_cast<std::size_t>(i) * ch.size() + static_cast<std::size_t>(j)];
                out.push_back({y, z});
                emit_side(ci, y, out);
                emit_side(ch[static_cast<std::size_t>(j)], z, out);
                s &= ~((1u << i) | (1u << j));
            }
        }
    }

    const RootedTree& tree_;
    double shift_;
    std::vector<std::vector<Score>> best_;
    std::vector<std::vector<std::pair<int, int>>> choice_;
    std::vector<std::vector<NodeIndex>> single_arg_;
    std::vector<std::vector<std::pair<NodeIndex, NodeIndex>>> pair_arg_;
};

// Covers with up to k distinct paths per edge. The state of the edge from v
// to its parent is the sorted list of lower endpoints of the paths crossing
// it upwards; table[v][state] is the cheapest way to handle everything
// strictly below that edge. At each node, every incoming path either stops,
// joins a path from another child, or continues upwards, and new paths may
// start upwards from the node itself.
class MultiplicityDp {
public:
    MultiplicityDp(const RootedTree& tree, int k, double shift) : tree_(tree), k_(k), shift_(shift) {
        table_.resize(static_cast<std::size_t>(tree.size()));
        for (NodeIndex x : tree.post_order()) process(x);
    }

    bool feasible() const { return table_[0].count({}) != 0; }
    Score value() const { return table_[0].at({}).score; }

    std::vector<Endpoints> paths() const {
        std::vector<Endpoints> out;
        emit(0, {}, out);
        return out;
    }

private:
    using State = std::vector<NodeIndex>;
    struct Entry {
        Score score;
        std::vector<State> child_states;
        std::vector<Endpoints> closed;
    };
    struct Stub {
        NodeIndex low;
        int child;
    };

    void process(NodeIndex x) {
        const auto& ch = tree_.children(x);
        std::vector<State> picked(ch.size());
        std::vector<Stub> stubs;
        combine(x, 0, Score{0.0, 0}, picked, stubs);
    }

    void combine(NodeIndex x, std::size_t i, Score base, std::vector<State>& picked, std::vector<Stub>& stubs) {
        const auto& ch = tree_.children(x);
        if (i == ch.size()) {
            std::vector<char> fate(stubs.size(), 0);
            std::vector<Endpoints> closed;
            std::vector<NodeIndex> up;
            assign(x, 0, base, picked, stubs, fate, closed, up);
            return;
        }
        for (const auto& [state, entry] : table_[static_cast<std::size_t>(ch[i])]) {
            picked[i] = state;
            for (NodeIndex y : state) stubs.push_back({y, static_cast<int>(i)});
            combine(x, i + 1, base + entry.score, picked, stubs);
            stubs.resize(stubs.size() - state.size());
        }
    }

    static bool same_path(const Endpoints& p, NodeIndex a, NodeIndex b) {
        return (p.a == a && p.b == b) || (p.a == b && p.b == a);
    }

    bool is_new(const std::vector<Endpoints>& closed, NodeIndex a, NodeIndex b) const {
        return std::none_of(closed.begin(), closed.end(), [&](const Endpoints& p) { return same_path(p, a, b); });
    }

    void assign(NodeIndex x, std::size_t idx, Score cost, const std::vector<State>& picked,
                const std::vector<Stub>& stubs, std::vector<char>& fate, std::vector<Endpoints>& closed,
                std::vector<NodeIndex>& up) {
        while (idx < stubs.size() && fate[idx]) ++idx;
        if (idx == stubs.size()) {
            finish(x, cost, picked, closed, up);
            return;
        }
        const Stub& s = stubs[idx];
        fate[idx] = 1;
        if (is_new(closed, s.low, x)) {
            closed.push_back({s.low, x});
            assign(x, idx + 1, cost + Score{tree_.cost(s.low, x) - shift_, 1}, picked, stubs, fate, closed, up);
            closed.pop_back();
        }
        if (static_cast<int>(up.size()) < k_) {
            up.push_back(s.low);
            assign(x, idx + 1, cost, picked, stubs, fate, closed, up);
            up.pop_back();
        }
        for (std::size_t j = idx + 1; j < stubs.size(); ++j) {
            if (fate[j] || stubs[j].child == s.child || !is_new(closed, s.low, stubs[j].low)) continue;
            fate[j] = 1;
            closed.push_back({s.low, stubs[j].low});
            assign(x, idx + 1, cost + Score{tree_.cost(s.low, stubs[j].low) - shift_, 1}, picked, stubs, fate, closed,
                   up);
            closed.pop_back();
            fate[j] = 0;
        }
        fate[idx] = 0;
    }

    void finish(NodeIndex x, Score cost, const std::vector<State>& picked, const std::vector<Endpoints>& closed,
                const std::vector<NodeIndex>& up) {
        const bool root = tree_.parent(x) < 0;
        const int lo = root ? 0 : 1;
        const int hi = root ? 0 : k_;
        for (int fresh = 0; fresh + static_cast<int>(up.size()) <= hi; ++fresh) {
            const int total = fresh + static_cast<int>(up.size());
            if (total < lo) continue;
            State state = up;
            state.insert(state.end(), static_cast<std::size_t>(fresh), x);
            std::sort(state.begin(), state.end());
            auto& entry = table_[static_cast<std::size_t>(x)][state];
            if (better(cost, entry.score)) {
                entry.score = cost;
                entry.child_states = picked;
                entry.closed = closed;
            }
        }
    }

    void emit(NodeIndex x, const State& state, std::vector<Endpoints>& out) const {
        const auto& entry = table_[static_cast<std::size_t>(x)].at(state);
        out.insert(out.end(), entry.closed.begin(), entry.closed.end());
        const auto& ch = tree_.children(x);
        for (std::size_t i = 0; i < ch.size(); ++i) emit(ch[i], entry.child_states[i], out);
    }

    const RootedTree& tree_;
    int k_;
    double shift_;
    std::vector<std::map<State, Entry>> table_;
};

std::vector<Endpoints> solve_shifted(const RootedTree& tree, const TreeCoverConfig& config, double shift,
                                     double& value) {
    if (config.k_overlap == 1 && !config.multiplicity_dp) {
        DisjointDp dp(tree, shift);
        value = dp.value().cost;
        return dp.paths();
    }
    MultiplicityDp dp(tree, config.k_overlap, shift);
    if (!dp.feasible()) throw NumericalError("no admissible tree cover found", "tree-solver");
    value = dp.value().cost;
    return dp.paths();
}

}  // namespace

void TreeCoverConfig::validate() const {
    if (k_overlap < 1 || k_overlap > 3) {
        throw ValidationError("k_overlap must lie in [1, 3]", "tree-solver");
    }
}

FilamentCover solve_tree(const WeightedGeometricGraph& graph, const TreeCoverConfig& config) {
    config.validate();
    if (graph.node_count() == 0 || graph.edge_count() != graph.node_count() - 1 || graph.component_count() != 1) {
        throw NotATreeError("input graph is not a connected acyclic graph");
    }
    const auto start = std::chrono::steady_clock::now();
    const RootedTree tree(graph, config.roughness_kind);

    auto to_paths = [&](const std::vector<Endpoints>& ends) {
        std::vector<FilamentPath> paths;
        for (const auto& p : ends) paths.push_back(canonical(make_path(graph, tree.path_edges(p.a, p.b))));
        return paths;
    };

    double value = 0.0;
    auto ends = solve_shifted(tree, config, 0.0, value);
    int iterations = 0;
    double residual = 0.0;
    if (config.objective == Objective::avg && !ends.empty()) {
        auto mean = [&](const std::vector<Endpoints>& sel) {
            double sum = 0.0;
            for (const auto& p : sel) sum += tree.cost(p.a, p.b);
            return sum / static_cast<double>(sel.size());
        };
        double lambda = mean(ends);
        while (true) {
            if (++iterations > kMaxDinkelbachIterations) {
                throw NumericalError("fractional iteration did not converge", "tree-solver");
            }
            double shifted = 0.0;
            auto next = solve_shifted(tree, config, lambda, shifted);
            residual = shifted;
            const double tol = 1e-9 * std::max(1.0, std::abs(lambda) * static_cast<double>(next.size()));
            if (shifted >= -tol) break;
            const double ratio = mean(next);
            if (!(ratio < lambda)) break;
            ends = std::move(next);
            lambda = ratio;
        }
    }

    FilamentCover cover = make_cover(to_paths(ends), graph.edge_count(), config.objective, config.roughness_kind);
    cover.solver_stats.method = "tree";
    cover.solver_stats.pool_size = static_cast<std::size_t>(graph.node_count()) *
                                   static_cast<std::size_t>(graph.node_count() - 1) / 2;
    cover.solver_stats.dinkelbach_iterations = iterations;
    cover.solver_stats.dinkelbach_residual = residual;
    cover.solver_stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cover;
}

}  // namespace filcover
