#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "filcover/error.hpp"
#include "filcover/generators.hpp"
#include "filcover/random.hpp"
#include "filcover/similarity.hpp"
#include "oracles.hpp"

using namespace filcover;

namespace {

EdgePartition relabel(const EdgePartition& p, int offset) {
    auto labels = p.all_labels();
    for (auto& l : labels) {
        for (auto& x : l) x = 100 - x + offset;
    }
    return EdgePartition(std::move(labels));
}

// Brute-force maximum shared-edge matching over all injective assignments.
std::int64_t best_matching(const EdgePartition& a, const EdgePartition& b) {
    const auto la = a.distinct_labels();
    const auto lb = b.distinct_labels();
    std::vector<int> cols(std::max(la.size(), lb.size()));
    std::iota(cols.begin(), cols.end(), 0);
    std::int64_t best = 0;
    do {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < la.size(); ++i) {
            const auto j = static_cast<std::size_t>(cols[i]);
            if (j >= lb.size()) continue;
            for (EdgeId e = 0; e < a.edge_count(); ++e) {
                const auto x = a.labels(e);
                const auto y = b.labels(e);
                if (std::find(x.begin(), x.end(), la[i]) != x.end() && std::find(y.begin(), y.end(), lb[j]) != y.end())
                    ++total;
            }
        }
        best = std::max(best, total);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

}  // namespace

TEST_CASE("identical partitions") {
    const auto g = oracle::path_graph({1, 1, 1, 1});
    const auto p = EdgePartition::from_filaments(4, {{0, 1}, {2, 3}});
    CHECK(*variation_of_information(p, p) == doctest::Approx(1.0).epsilon(1e-12));
    for (int d : {1, 2, 3, kUnboundedHops}) {
        const auto r = rand_jaccard(p, p, d, &g);
        CHECK(r.ri == 1.0);
        CHECK(r.ji == 1.0);
    }
}

TEST_CASE("overlapping partitions have no VI") {
    const auto p = EdgePartition::from_filaments(3, {{0, 1}, {1, 2}});
    const auto q = EdgePartition::from_filaments(3, {{0, 1}, {2}});
    CHECK_FALSE(variation_of_information(p, p).has_value());
    CHECK_FALSE(variation_of_information(q, p).has_value());
    CHECK(variation_of_information(q, q).has_value());
}

TEST_CASE("VI hand value on three edges") {
    const auto a = EdgePartition::from_filaments(3, {{0, 1}, {2}});
    const auto b = EdgePartition::from_filaments(3, {{0}, {1, 2}});
    // g = [[1, 1], [0, 1]], row sums (2, 1), column sums (1, 2), U = 3.
    const double sum = 1 * (std::log(1.0 / 1) + std::log(1.0 / 2)) + 1 * (std::log(1.0 / 2) + std::log(1.0 / 2)) +
                       1 * (std::log(1.0 / 2) + std::log(1.0 / 1));
    const double expected = 1.0 + sum / (3 * std::log(3.0));
    CHECK(std::abs(*variation_of_information(a, b) - expected) < 1e-12);
    CHECK(std::abs(expected - 0.15876033) < 1e-8);
}

TEST_CASE("adjacent pair table on a 4-edge path") {
    const auto g = oracle::path_graph({1, 1, 1, 1});
    const auto a = EdgePartition::from_filaments(4, {{0, 1}, {2, 3}});
    const auto b = EdgePartition::from_filaments(4, {{0, 1, 2}, {3}});
    // (e1,e2): same/same, (e2,e3): diff/same, (e3,e4): same/diff.
    const auto r = rand_jaccard(a, b, 1, &g);
    CHECK(r.counts.h_ee == 1);
    CHECK(r.counts.h_ne == 1);
    CHECK(r.counts.h_en == 1);
    CHECK(r.counts.h_nn == 0);
    CHECK(r.ji == doctest::Approx(1.0 / 3));
    CHECK(r.ri == doctest::Approx(1.0 / 3));
}

TEST_CASE("classical counts over all pairs") {
    const auto g = oracle::path_graph({1, 1, 1, 1});
    const auto a = EdgePartition::from_filaments(4, {{0, 1}, {2, 3}});
    const auto b = EdgePartition::from_filaments(4, {{0, 1, 2}, {3}});
    // Pairs: 01 ee, 02 ne, 03 nn, 12 ne, 13 nn, 23 en.
    const auto r = rand_jaccard(a, b, kUnboundedHops);
    CHECK(r.counts == ContingencyCounts{1, 1, 2, 2, kUnboundedHops});
    CHECK(r.ri == doctest::Approx(0.5));
    CHECK(r.ji == doctest::Approx(0.25));
    CHECK(rand_jaccard(a, b, 3, &g).ri == r.ri);
}

TEST_CASE("random overlapping tree covers") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto tree = random_geometric_tree(25, seed);
        const auto a = random_overlapping_tree_cover(tree, 10, seed * 2);
        const auto b = random_overlapping_tree_cover(tree, 10, seed * 2 + 1);
        const auto all = rand_jaccard(a, b, kUnboundedHops);
        const auto far = rand_jaccard(a, b, 1000, &tree);
        CHECK(all.ri == far.ri);
        CHECK(all.ji == far.ji);

        const auto swapped = rand_jaccard(b, a, 2, &tree);
        const auto direct = rand_jaccard(a, b, 2, &tree);
        CHECK(swapped.counts.h_en == direct.counts.h_ne);
        CHECK(swapped.ri == direct.ri);
        CHECK(swapped.ji == direct.ji);

        std::int64_t previous = 0;
        for (int d = 1; d <= 6; ++d) {
            const auto r = rand_jaccard(a, b, d, &tree);
            CHECK(r.counts.total() >= previous);
            previous = r.counts.total();
            CHECK(r.ri >= 0.0);
            CHECK(r.ri <= 1.0);
            CHECK(r.ji >= 0.0);
            CHECK(r.ji <= 1.0);
            CHECK(rand_jaccard(relabel(a, 3), b, d, &tree).counts == r.counts);
        }
    }
}

TEST_CASE("mismatched edge sets") {
    const auto a = EdgePartition::from_filaments(3, {{0, 1, 2}});
    const auto b = EdgePartition::from_filaments(4, {{0, 1, 2, 3}});
    CHECK_THROWS_AS(rand_jaccard(a, b, kUnboundedHops), GraphMismatchError);
    CHECK_THROWS_AS(variation_of_information(a, b), GraphMismatchError);
    CHECK_THROWS_AS(rand_jaccard(a, a, 1), ValidationError);
}

TEST_CASE("report collects every distance") {
    const auto g = oracle::path_graph({1, 1, 1, 1});
    const auto a = EdgePartition::from_filaments(4, {{0, 1}, {2, 3}});
    const auto b = EdgePartition::from_filaments(4, {{0, 1, 2}, {3}});
    const auto r = compare_partitions(a, b, g, {1, 2, kUnboundedHops});
    CHECK(r.ri_d.at(kUnboundedHops) == r.ri);
    CHECK(r.ji_d.at(kUnboundedHops) == r.ji);
    CHECK(r.ji_d.at(1) == doctest::Approx(1.0 / 3));
    CHECK(r.vi.has_value());
}

TEST_CASE("identity matching") {
    const auto p = EdgePartition::from_filaments(5, {{0, 1}, {2}, {3, 4}});
    const auto m = match_filament_identities(p, p);
    CHECK(m.shared_edges == 5);
    for (const auto& [x, y] : m.a_to_b) CHECK(x == y);
    CHECK(m.a_to_b.size() == 3);
}

TEST_CASE("two by two assignment") {
    // a: X = 0 -> {e1, e2}, Y = 1 -> {e3}; b: P = 0 -> {e3}, Q = 1 -> {e1, e2}.
    const EdgePartition a({{0}, {0}, {1}});
    const EdgePartition b({{1}, {1}, {0}});
    const auto m = match_filament_identities(a, b);
    CHECK(m.a_to_b.at(0) == 1);
    CHECK(m.a_to_b.at(1) == 0);
    CHECK(m.shared_edges == 3);
}

TEST_CASE("matching is optimal and invariant under renaming") {
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int edges = 8;
        std::vector<std::vector<Label>> la(edges), lb(edges);
        for (int e = 0; e < edges; ++e) {
            la[static_cast<std::size_t>(e)] = {static_cast<Label>(rng.below(4))};
            lb[static_cast<std::size_t>(e)] = {static_cast<Label>(rng.below(5))};
            if (rng.uniform() < 0.2) la[static_cast<std::size_t>(e)].push_back(static_cast<Label>(rng.below(4)));
        }
        const EdgePartition a(la), b(lb);
        const auto m = match_filament_identities(a, b);
        CHECK(m.shared_edges == best_matching(a, b));
        CHECK(match_filament_identities(relabel(a, 7), b).shared_edges == m.shared_edges);
        CHECK(match_filament_identities(b, a).shared_edges == m.shared_edges);
    }
}
