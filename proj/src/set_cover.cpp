#include "filcover/set_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <tuple>
#include <string>

#include "filcover/error.hpp"

namespace filcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A subproblem: the still-uncovered elements and the sets that may still be
// chosen, restricted to those elements (cover mode) or untouched (exact
// mode, where any set meeting a covered element has been removed).
struct Residual {
    std::vector<int> elems;
    std::vector<std::vector<int>> sets;
    std::vector<double> cost;
    std::vector<int> id;
};

struct Partial {
    std::vector<int> sets;
    double cost = 0.0;

    void append(const Partial& other) {
        sets.insert(sets.end(), other.sets.begin(), other.sets.end());
        cost += other.cost;
    }
};

void validate(const SetCoverInstance& instance) {
    if (instance.element_count < 0) throw ValidationError("negative element count", "cover-solver");
    if (instance.costs.size() != instance.sets.size()) {
        throw ValidationError("cost vector does not match the number of sets", "cover-solver");
    }
    for (std::size_t s = 0; s < instance.sets.size(); ++s) {
        if (!std::isfinite(instance.costs[s])) throw NumericalError("non-finite set cost");
        const auto& set = instance.sets[s];
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 0 || set[i] >= instance.element_count || (i > 0 && set[i] <= set[i - 1])) {
                throw ValidationError("set " + std::to_string(s) + " is not a sorted list of valid elements",
                                      "cover-solver");
            }
        }
    }
}

// Drops covered elements and the sets in `removed`. In exact mode a set
// touching a covered element is dropped as well; in cover mode it is
// restricted to the uncovered part and dropped only if nothing is left.
Residual restrict(const Residual& r, const std::vector<char>& covered, const std::vector<char>& removed, bool exact) {
    Residual out;
    std::vector<int> local(r.elems.size(), -1);
    for (std::size_t e = 0; e < r.elems.size(); ++e) {
        if (!covered[e]) {
            local[e] = static_cast<int>(out.elems.size());
            out.elems.push_back(r.elems[e]);
        }
    }
    std::vector<int> buf;
    for (std::size_t s = 0; s < r.sets.size(); ++s) {
        if (removed[s]) continue;
        buf.clear();
        bool clash = false;
        for (int e : r.sets[s]) {
            if (local[static_cast<std::size_t>(e)] < 0) {
                clash = true;
                if (exact) break;
            } else {
                buf.push_back(local[static_cast<std::size_t>(e)]);
            }
        }
        if ((exact && clash) || buf.empty()) continue;
        out.sets.push_back(buf);
        out.cost.push_back(r.cost[s]);
        out.id.push_back(r.id[s]);
    }
    return out;
}

std::vector<std::vector<int>> cover_lists(const Residual& r) {
    std::vector<std::vector<int>> cov(r.elems.size());
    for (std::size_t s = 0; s < r.sets.size(); ++s) {
        for (int e : r.sets[s]) cov[static_cast<std::size_t>(e)].push_back(static_cast<int>(s));
    }
    return cov;
}

class Solver {
public:
    Solver(const SetCoverInstance& instance, const SetCoverOptions& options)
        : exact_(instance.exact), options_(options),
          u_(static_cast<std::size_t>(instance.element_count), 0.0),
          u_valid_(static_cast<std::size_t>(instance.element_count), 0) {}

    void set_tolerance(double tol) { tol_ = tol; }
    void set_incumbent(double ub) { global_ub_ = ub; }
    std::int64_t nodes() const { return nodes_; }
    double root_bound() const { return root_bound_; }
    const std::vector<int>& root_uncovered() const { return root_uncovered_; }

    // Best selection of cost below ub - tol, if any.
    std::optional<Partial> solve(Residual r, double ub, int iterations, int depth) {
        if (++nodes_ > options_.node_limit) {
            throw NodeLimitError("branch-and-bound node limit of " + std::to_string(options_.node_limit) +
                                     " reached",
                                 global_ub_, root_bound_);
        }
        Partial fixed;
        std::optional<Partial> best;
        bool first_bound = true;
        while (true) {
            if (!reduce(r, fixed, depth == 0 && first_bound)) return best;
            const double rub = ub - fixed.cost;
            if (r.elems.empty()) {
                if (fixed.cost < ub - tol_) return fixed;
                return best;
            }
            auto comps = components(r);
            if (comps.size() > 1) {
                auto rest = solve_components(r, comps, rub, iterations, depth);
                if (rest && fixed.cost + rest->cost < ub - tol_) {
                    fixed.append(*rest);
                    return fixed;
                }
                return best;
            }

            std::vector<double> u;
            Partial lag;
            bool lag_found = false;
            const double lb = bound(r, iterations, rub, u, lag, lag_found);
            if (depth == 0 && first_bound) root_bound_ = fixed.cost + lb;
            first_bound = false;
            if (lag_found && fixed.cost + lag.cost < ub - tol_) {
                Partial cand = fixed;
                cand.append(lag);
                ub = cand.cost;
                if (depth == 0) global_ub_ = ub;
                best = std::move(cand);
            }
            if (fixed.cost + lb >= ub - tol_) return best;
            if (!std::isfinite(ub)) break;

            // Reduced-cost fixing against the current upper bound.
            const double target = ub - fixed.cost - tol_;
            std::vector<char> removed(r.sets.size(), 0);
            std::vector<char> forced(r.sets.size(), 0);
            bool any = false;
            for (std::size_t s = 0; s < r.sets.size(); ++s) {
                double rc = r.cost[s];
                for (int e : r.sets[s]) rc -= u[static_cast<std::size_t>(e)];
                if (rc > 0.0 && lb + rc >= target) {
                    removed[s] = 1;
                    any = true;
                } else if (rc < 0.0 && lb - rc >= target) {
                    forced[s] = 1;
                    any = true;
                }
            }
            if (!any) break;
            if (!apply(r, fixed, forced, removed)) return best;
        }

        // Branch on the element with the fewest covering sets; child i takes
        // the i-th covering set and excludes the ones before it.
        const auto cov = cover_lists(r);
        std::size_t pick = 0;
        for (std::size_t e = 1; e < cov.size(); ++e) {
            if (cov[e].size() < cov[pick].size()) pick = e;
        }
        std::vector<double> rc(r.sets.size());
        for (std::size_t s = 0; s < r.sets.size(); ++s) {
            rc[s] = r.cost[s];
            for (int e : r.sets[s]) rc[s] -= last_u_[static_cast<std::size_t>(e)];
        }
        std::vector<int> order = cov[pick];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto sa = static_cast<std::size_t>(a);
            const auto sb = static_cast<std::size_t>(b);
            return rc[sa] < rc[sb] || (rc[sa] == rc[sb] && r.id[sa] < r.id[sb]);
        });
        std::vector<char> removed(r.sets.size(), 0);
        std::vector<char> covered(r.elems.size(), 0);
        for (int s : order) {
            const auto ss = static_cast<std::size_t>(s);
            std::fill(covered.begin(), covered.end(), 0);
            for (int e : r.sets[ss]) covered[static_cast<std::size_t>(e)] = 1;
            removed[ss] = 1;
            Residual child = restrict(r, covered, removed, exact_);
            const double child_ub = ub - fixed.cost - r.cost[ss];
            auto sub = solve(std::move(child), child_ub, options_.node_iterations, depth + 1);
            if (sub) {
                Partial cand = fixed;
                cand.sets.push_back(r.id[ss]);
                cand.cost += r.cost[ss];
                cand.append(*sub);
                ub = cand.cost;
                if (depth == 0) global_ub_ = ub;
                best = std::move(cand);
            }
        }
        return best;
    }

private:
    // Forces `forced`, drops `removed`. Returns false on an exact-mode clash.
    bool apply(Residual& r, Partial& fixed, const std::vector<char>& forced, std::vector<char> removed) {
        std::vector<char> covered(r.elems.size(), 0);
        for (std::size_t s = 0; s < r.sets.size(); ++s) {
            if (!forced[s]) continue;
            fixed.sets.push_back(r.id[s]);
            fixed.cost += r.cost[s];
            removed[s] = 1;
            for (int e : r.sets[s]) {
                auto& c = covered[static_cast<std::size_t>(e)];
                if (exact_ && c) return false;
                c = 1;
            }
        }
        r = restrict(r, covered, removed, exact_);
        return true;
    }

    bool reduce(Residual& r, Partial& fixed, bool diagnose) {
        while (true) {
            std::vector<char> forced(r.sets.size(), 0);
            bool any = false;
            if (!exact_) {
                for (std::size_t s = 0; s < r.sets.size(); ++s) {
                    if (r.cost[s] < 0.0) forced[s] = 1, any = true;
                }
            }
            const auto cov = cover_lists(r);
            bool infeasible = false;
            for (std::size_t e = 0; e < cov.size(); ++e) {
                if (cov[e].empty()) {
                    infeasible = true;
                    if (diagnose) root_uncovered_.push_back(r.elems[e]);
                } else if (cov[e].size() == 1) {
                    forced[static_cast<std::size_t>(cov[e][0])] = 1;
                    any = true;
                }
            }
            if (infeasible) return false;
            if (any) {
                if (!apply(r, fixed, forced, std::vector<char>(r.sets.size(), 0))) return false;
                continue;
            }
            if (!drop_dominated(r)) return true;
        }
    }

    // Removes duplicate sets and, in cover mode, sets contained in a set
    // that costs no more. Returns true if anything was removed.
    bool drop_dominated(Residual& r) {
        const std::size_t n = r.sets.size();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto sa = static_cast<std::size_t>(a);
            const auto sb = static_cast<std::size_t>(b);
            if (r.cost[sa] != r.cost[sb]) return r.cost[sa] < r.cost[sb];
            if (r.sets[sa].size() != r.sets[sb].size()) return r.sets[sa].size() > r.sets[sb].size();
            return r.id[sa] < r.id[sb];
        });
        std::vector<std::vector<int>> kept_by_elem(r.elems.size());
        std::vector<char> removed(n, 0);
        bool any = false;
        for (int s : order) {
            const auto& set = r.sets[static_cast<std::size_t>(s)];
            int rarest = set[0];
            for (int e : set) {
                if (kept_by_elem[static_cast<std::size_t>(e)].size() <
                    kept_by_elem[static_cast<std::size_t>(rarest)].size()) {
                    rarest = e;
                }
            }
            bool dominated = false;
            for (int t : kept_by_elem[static_cast<std::size_t>(rarest)]) {
                const auto& other = r.sets[static_cast<std::size_t>(t)];
                if (exact_ ? other == set
                           : other.size() >= set.size() &&
                                 std::includes(other.begin(), other.end(), set.begin(), set.end())) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) {
                removed[static_cast<std::size_t>(s)] = 1;
                any = true;
            } else {
                for (int e : set) kept_by_elem[static_cast<std::size_t>(e)].push_back(s);
            }
        }
        if (any) r = restrict(r, std::vector<char>(r.elems.size(), 0), removed, exact_);
        return any;
    }

    std::vector<std::vector<int>> components(const Residual& r) const {
        std::vector<int> parent(r.elems.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& set : r.sets) {
            for (int e : set) {
                const int a = find(set[0]);
                const int b = find(e);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        std::vector<int> root_index(r.elems.size(), -1);
        std::vector<std::vector<int>> comps;
        for (std::size_t e = 0; e < r.elems.size(); ++e) {
            const int root = find(static_cast<int>(e));
            auto& idx = root_index[static_cast<std::size_t>(root)];
            if (idx < 0) {
                idx = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comps[static_cast<std::size_t>(idx)].push_back(static_cast<int>(e));
        }
        return comps;
    }

    std::optional<Partial> solve_components(const Residual& r, const std::vector<std::vector<int>>& comps, double ub,
                                            int iterations, int depth) {
        std::vector<int> comp_of(r.elems.size());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (int e : comps[c]) comp_of[static_cast<std::size_t>(e)] = static_cast<int>(c);
        }
        std::vector<Residual> parts(comps.size());
        std::vector<int> local(r.elems.size());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (int e : comps[c]) {
                local[static_cast<std::size_t>(e)] = static_cast<int>(parts[c].elems.size());
                parts[c].elems.push_back(r.elems[static_cast<std::size_t>(e)]);
            }
        }
        for (std::size_t s = 0; s < r.sets.size(); ++s) {
            auto& part = parts[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(r.sets[s][0])])];
            std::vector<int> set;
            set.reserve(r.sets[s].size());
            for (int e : r.sets[s]) set.push_back(local[static_cast<std::size_t>(e)]);
            part.sets.push_back(std::move(set));
            part.cost.push_back(r.cost[s]);
            part.id.push_back(r.id[s]);
        }
        std::vector<double> lbs(parts.size());
        double lb_sum = 0.0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            std::vector<double> u;
            Partial unused;
            bool found = false;
            lbs[c] = bound(parts[c], iterations, kInf, u, unused, found);
            lb_sum += lbs[c];
        }
        if (lb_sum >= ub - tol_) return std::nullopt;
        Partial total;
        double rest = lb_sum;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            rest -= lbs[c];
            auto sub = solve(std::move(parts[c]), ub - total.cost - rest, iterations, depth + 1);
            if (!sub) return std::nullopt;
            total.append(*sub);
        }
        return total;
    }

    // Lagrangian lower bound by projected subgradient ascent. Also reports
    // the best feasible selection met along the way.
    double bound(const Residual& r, int iterations, double ub, std::vector<double>& u, Partial& found_sol,
                 bool& found) {
        const std::size_t m = r.elems.size();
        const std::size_t n = r.sets.size();
        std::vector<double> init(m, kInf);
        for (std::size_t s = 0; s < n; ++s) {
            const double share = r.cost[s] / static_cast<double>(r.sets[s].size());
            for (int e : r.sets[s]) init[static_cast<std::size_t>(e)] = std::min(init[static_cast<std::size_t>(e)], share);
        }
        u.assign(m, 0.0);
        for (std::size_t e = 0; e < m; ++e) {
            const auto orig = static_cast<std::size_t>(r.elems[e]);
            u[e] = u_valid_[orig] ? u_[orig] : init[e];
            if (!exact_) u[e] = std::max(0.0, u[e]);
        }
        std::vector<double> best_u = u;
        double best = -kInf;
        double found_cost = kInf;
        double mu = 2.0;
        int stall = 0;
        std::vector<int> count(m);
        std::vector<double> g(m);
        std::vector<char> in_x(n);
        for (int it = 0; it < std::max(1, iterations); ++it) {
            double value = std::accumulate(u.begin(), u.end(), 0.0);
            double xcost = 0.0;
            std::fill(count.begin(), count.end(), 0);
            for (std::size_t s = 0; s < n; ++s) {
                double rc = r.cost[s];
                for (int e : r.sets[s]) rc -= u[static_cast<std::size_t>(e)];
                in_x[s] = rc < 0.0;
                if (in_x[s]) {
                    value += rc;
                    xcost += r.cost[s];
                    for (int e : r.sets[s]) ++count[static_cast<std::size_t>(e)];
                }
            }
            if (value > best) {
                best = value;
                best_u = u;
                stall = 0;
            } else if (++stall >= 5) {
                mu *= 0.5;
                stall = 0;
            }
            bool feasible = true;
            for (std::size_t e = 0; e < m && feasible; ++e) {
                feasible = exact_ ? count[e] == 1 : count[e] >= 1;
            }
            if (feasible && xcost < found_cost) {
                found_cost = xcost;
                found = true;
                found_sol.sets.clear();
                for (std::size_t s = 0; s < n; ++s) {
                    if (in_x[s]) found_sol.sets.push_back(r.id[s]);
                }
                found_sol.cost = xcost;
                if (exact_) break;
            }
            const double target = std::min(ub, found_cost);
            if (best >= target - tol_) break;
            double norm = 0.0;
            for (std::size_t e = 0; e < m; ++e) {
                g[e] = 1.0 - count[e];
                if (!exact_ && u[e] <= 0.0 && g[e] < 0.0) g[e] = 0.0;
                norm += g[e] * g[e];
            }
            if (norm == 0.0 || mu < 1e-6) break;
            const double aim = std::isfinite(target) ? target : best + std::max(1.0, std::abs(best)) * 0.1;
            const double step = mu * (aim - value) / norm;
            if (!(step > 0.0)) break;
            for (std::size_t e = 0; e < m; ++e) {
                u[e] += step * g[e];
                if (!exact_) u[e] = std::max(0.0, u[e]);
            }
        }
        u = best_u;
        for (std::size_t e = 0; e < m; ++e) {
            u_[static_cast<std::size_t>(r.elems[e])] = u[e];
            u_valid_[static_cast<std::size_t>(r.elems[e])] = 1;
        }
        last_u_ = u;
        return best;
    }

    bool exact_;
    SetCoverOptions options_;
    double tol_ = 1e-9;
    double global_ub_ = kInf;
    double root_bound_ = -kInf;
    std::int64_t nodes_ = 0;
    std::vector<double> u_;
    std::vector<char> u_valid_;
    std::vector<double> last_u_;
    std::vector<int> root_uncovered_;
};

}  // namespace

double selection_cost(const SetCoverInstance& instance, std::span<const int> chosen) {
    double sum = 0.0;
    for (int s : chosen) sum += instance.costs.at(static_cast<std::size_t>(s));
    return sum;
}

bool is_cover(const SetCoverInstance& instance, std::span<const int> chosen) {
    std::vector<int> count(static_cast<std::size_t>(instance.element_count), 0);
    for (int s : chosen) {
        for (int e : instance.sets.at(static_cast<std::size_t>(s))) ++count[static_cast<std::size_t>(e)];
    }
    return std::all_of(count.begin(), count.end(),
                       [&](int c) { return instance.exact ? c == 1 : c >= 1; });
}

namespace {

// Drops non-negative-cost sets whose elements are all covered by other
// chosen sets, most expensive first.
std::vector<int> drop_redundant(const SetCoverInstance& instance, std::vector<int> chosen) {
    std::vector<int> count(static_cast<std::size_t>(instance.element_count), 0);
    for (int s : chosen) {
        for (int e : instance.sets[static_cast<std::size_t>(s)]) ++count[static_cast<std::size_t>(e)];
    }
    std::vector<int> by_cost = chosen;
    std::stable_sort(by_cost.begin(), by_cost.end(), [&](int a, int b) {
        const auto sa = static_cast<std::size_t>(a);
        const auto sb = static_cast<std::size_t>(b);
        if (instance.costs[sa] != instance.costs[sb]) return instance.costs[sa] > instance.costs[sb];
        return instance.sets[sa].size() < instance.sets[sb].size();
    });
    std::vector<char> dropped(instance.sets.size(), 0);
    for (int s : by_cost) {
        const auto ss = static_cast<std::size_t>(s);
        if (instance.costs[ss] < 0.0) continue;
        const auto& set = instance.sets[ss];
        if (std::all_of(set.begin(), set.end(), [&](int e) { return count[static_cast<std::size_t>(e)] >= 2; })) {
            for (int e : set) --count[static_cast<std::size_t>(e)];
            dropped[ss] = 1;
        }
    }
    std::erase_if(chosen, [&](int s) { return dropped[static_cast<std::size_t>(s)] != 0; });
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

std::vector<int> greedy_set_cover(const SetCoverInstance& instance) {
    const auto m = static_cast<std::size_t>(instance.element_count);
    const std::size_t n = instance.sets.size();
    std::vector<char> covered(m, 0);
    std::size_t remaining = m;
    std::vector<int> chosen;
    auto take = [&](std::size_t s) {
        chosen.push_back(static_cast<int>(s));
        for (int e : instance.sets[s]) {
            if (!covered[static_cast<std::size_t>(e)]) {
                covered[static_cast<std::size_t>(e)] = 1;
                --remaining;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        if (instance.sets[s].empty() && instance.costs[s] < 0.0) take(s);
    }

    if (instance.exact) {
        std::vector<int> order;
        for (std::size_t s = 0; s < n; ++s) {
            if (!instance.sets[s].empty()) order.push_back(static_cast<int>(s));
        }
        auto ratio = [&](int s) {
            const auto ss = static_cast<std::size_t>(s);
            return instance.costs[ss] / static_cast<double>(instance.sets[ss].size());
        };
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ratio(a) < ratio(b); });
        for (int s : order) {
            const auto& set = instance.sets[static_cast<std::size_t>(s)];
            if (std::none_of(set.begin(), set.end(), [&](int e) { return covered[static_cast<std::size_t>(e)] != 0; })) {
                take(static_cast<std::size_t>(s));
            }
        }
        if (remaining != 0) return {};
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    for (std::size_t s = 0; s < n; ++s) {
        if (!instance.sets[s].empty() && instance.costs[s] < 0.0) take(s);
    }
    using Entry = std::tuple<double, int, int>;  // ratio, -fresh count, set
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto fresh = [&](std::size_t s) {
        int k = 0;
        for (int e : instance.sets[s]) k += covered[static_cast<std::size_t>(e)] ? 0 : 1;
        return k;
    };
    for (std::size_t s = 0; s < n; ++s) {
        if (instance.costs[s] >= 0.0 && !instance.sets[s].empty()) {
            const int k = fresh(s);
            if (k > 0) heap.emplace(instance.costs[s] / k, -k, static_cast<int>(s));
        }
    }
    while (remaining > 0 && !heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        const auto s = static_cast<std::size_t>(std::get<2>(top));
        const int k = fresh(s);
        if (k == 0) continue;
        const Entry now{instance.costs[s] / k, -k, std::get<2>(top)};
        if (!heap.empty() && heap.top() < now) {
            heap.push(now);
            continue;
        }
        take(s);
    }
    if (remaining != 0) return {};
    return drop_redundant(instance, std::move(chosen));
}

SetCoverResult solve_set_cover(const SetCoverInstance& instance, const SetCoverOptions& options,
                               std::span<const int> incumbent) {
    validate(instance);
    if (!(options.opt_tol > 0.0)) throw ValidationError("optimality tolerance must be positive", "cover-solver");

    double ub = kInf;
    if (!incumbent.empty()) {
        if (!is_cover(instance, incumbent)) throw ValidationError("warm start is not a feasible cover", "cover-solver");
        ub = selection_cost(instance, incumbent);
    }
    double scale = 1.0;
    if (std::isfinite(ub)) {
        scale = std::max(1.0, std::abs(ub));
    } else {
        double sum = 0.0;
        for (double c : instance.costs) sum += std::abs(c);
        scale = std::max(1.0, sum);
    }

    Solver solver(instance, options);
    solver.set_tolerance(options.opt_tol * scale);
    solver.set_incumbent(ub);

    Residual root;
    std::vector<int> always;
    root.elems.resize(static_cast<std::size_t>(instance.element_count));
    std::iota(root.elems.begin(), root.elems.end(), 0);
    for (std::size_t s = 0; s < instance.sets.size(); ++s) {
        if (instance.sets[s].empty()) {
            if (instance.costs[s] < 0.0) always.push_back(static_cast<int>(s));
            continue;
        }
        root.sets.push_back(instance.sets[s]);
        root.cost.push_back(instance.costs[s]);
        root.id.push_back(static_cast<int>(s));
    }
    const double always_cost = selection_cost(instance, always);

    auto found = solver.solve(std::move(root), ub - always_cost, options.root_iterations, 0);

    SetCoverResult result;
    result.nodes = solver.nodes();
    result.root_bound = solver.root_bound() + always_cost;
    if (found) {
        result.chosen = std::move(found->sets);
        result.chosen.insert(result.chosen.end(), always.begin(), always.end());
    } else if (!incumbent.empty()) {
        result.chosen.assign(incumbent.begin(), incumbent.end());
    } else {
        std::string what = instance.exact ? "no selection of pool paths covers every edge exactly once"
                                          : "some edges are not covered by any pool path";
        throw InfeasibleCoverError(what, solver.root_uncovered());
    }
    if (!instance.exact) result.chosen = drop_redundant(instance, std::move(result.chosen));
    std::sort(result.chosen.begin(), result.chosen.end());
    result.cost = selection_cost(instance, result.chosen);
    return result;
}

}  // namespace filcover
