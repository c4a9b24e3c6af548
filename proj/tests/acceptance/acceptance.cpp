#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "filcover/cover_solver.hpp"
#include "filcover/error.hpp"
#include "filcover/generators.hpp"
#include "filcover/gml.hpp"
#include "filcover/line_graph.hpp"
#include "filcover/path_pool.hpp"
#include "filcover/pipeline.hpp"
#include "filcover/robustness.hpp"
#include "filcover/similarity.hpp"
#include "filcover/tree_solver.hpp"
#include "oracles.hpp"

using namespace filcover;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Pool {
    PathPool pool;
    std::vector<std::vector<int>> sets;
    std::vector<double> pair_costs;
    std::vector<double> all_costs;
};

Pool complete_pool(const WeightedGeometricGraph& g) {
    Pool p;
    p.pool = enumerate_all_paths(g);
    for (const auto& path : p.pool.paths) {
        auto s = path.edges;
        std::sort(s.begin(), s.end());
        p.sets.push_back(s);
        p.pair_costs.push_back(oracle::pair_roughness(g, path.edges));
        p.all_costs.push_back(oracle::all_roughness(g, path.edges));
    }
    return p;
}

SolverConfig solver(CoverMode mode, Objective objective, RoughnessKind kind) {
    SolverConfig c;
    c.cover_mode = mode;
    c.objective = objective;
    c.roughness_kind = kind;
    return c;
}

LabeledGraph bundled_fixture() {
    auto fx = load_labeled_graph_file(oracle::data_path("contrived.gml"));
    if (!fx.labels) throw std::runtime_error("bundled fixture has no truth labels");
    return fx;
}

double ji(const EdgePartition& a, const EdgePartition& b, int d, const WeightedGeometricGraph& g) {
    return rand_jaccard(a, b, d, &g).ji;
}

Outcome oracle_optimality() {
    Outcome out;
    const auto start = Clock::now();
    const auto corpus = enumerate_small_instances(7);
    if (corpus.size() < 200) out.fail("corpus has only " + std::to_string(corpus.size()) + " graphs");
    int checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const auto p = complete_pool(g);
        for (auto mode : {CoverMode::exact, CoverMode::over}) {
            for (auto kind : {RoughnessKind::pair, RoughnessKind::all}) {
                const bool exact = mode == CoverMode::exact;
                const auto& costs = kind == RoughnessKind::pair ? p.pair_costs : p.all_costs;
                const auto best = oracle::min_cover_cost(g.edge_count(), p.sets, costs, exact);
                const auto got = solve_total(p.pool, g, solver(mode, Objective::total, kind));
                if (!best || std::abs(got.objective_value - *best) > 1e-9) {
                    out.fail("graph " + std::to_string(i) + " " + to_string(mode) + "/" + to_string(kind));
                }
                ++checked;
            }
        }
    }
    const double t = seconds_since(start);
    if (t > 300.0) out.fail("took " + std::to_string(t) + " s");
    if (out.pass) out.detail = std::to_string(checked) + " programs, " + std::to_string(t) + " s";
    return out;
}

Outcome fractional_correctness() {
    Outcome out;
    const auto corpus = enumerate_small_instances(7);
    int used = 0;
    for (std::size_t i = 0; i < corpus.size() && used < 50; ++i) {
        const auto& g = corpus[i];
        const auto p = complete_pool(g);
        if (p.sets.size() > 16) continue;
        ++used;
        for (auto mode : {CoverMode::exact, CoverMode::over}) {
            const bool exact = mode == CoverMode::exact;
            const auto best = oracle::min_big_m_program(g.edge_count(), p.sets, p.pair_costs, exact, 2.0);
            auto config = solver(mode, Objective::avg, RoughnessKind::pair);
            config.big_m = 2.0;
            const auto got = solve_avg(p.pool, g, config);
            if (!best || std::abs(got.objective_value - *best) > 1e-9) {
                out.fail("graph " + std::to_string(i) + " " + to_string(mode));
            }
        }
    }
    if (used < 50) out.fail("only " + std::to_string(used) + " instances qualified");
    if (out.pass) out.detail = std::to_string(used) + " instances, exact and over";
    return out;
}

Outcome fixture_recovery() {
    Outcome out;
    const auto fx = bundled_fixture();
    const auto start = Clock::now();
    const auto cover = decompose(fx.graph, PipelineConfig{});
    const double t = seconds_since(start);
    const double ji1 = ji(cover.labels, *fx.labels, 1, fx.graph);
    const double jinf = ji(cover.labels, *fx.labels, kUnboundedHops, fx.graph);
    if (ji1 != 1.0) out.fail("JI1 = " + std::to_string(ji1));
    if (jinf != 1.0) out.fail("JI = " + std::to_string(jinf));
    if (t >= 10.0) out.fail("took " + std::to_string(t) + " s");
    if (out.pass) out.detail = "JI1 = JI = 1, " + std::to_string(t) + " s";
    return out;
}

Outcome rmst_loop() {
    Outcome out;
    const auto fx = bundled_fixture();
    std::vector<EdgeId> loop;
    for (const auto& [label, edges] : fx.labels->filaments()) {
        std::map<NodeIndex, int> degree;
        for (EdgeId e : edges) ++degree[fx.graph.edge(e).source], ++degree[fx.graph.edge(e).target];
        if (std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; })) loop = edges;
    }
    if (loop.empty()) {
        out.fail("fixture has no loop");
        return out;
    }
    PipelineConfig config;
    config.paths = PoolChoice::rmst;
    config.sampler.rng_seed = 1;
    const auto a = decompose(fx.graph, config);
    const auto b = decompose(fx.graph, config);
    std::set<Label> labels;
    for (EdgeId e : loop) labels.insert(a.labels.labels(e).begin(), a.labels.labels(e).end());
    if (labels.size() < 2) out.fail("loop carries " + std::to_string(labels.size()) + " label");
    if (!(a.labels == b.labels)) out.fail("two runs with seed 1 differ");
    if (out.pass) out.detail = "loop carries " + std::to_string(labels.size()) + " labels";
    return out;
}

Outcome tree_cross_validation() {
    Outcome out;
    TreeCoverConfig tree_config;
    for (int i = 0; i < 100; ++i) {
        const int n = 3 + i % 10;
        const auto g = random_geometric_tree(n, 1000 + static_cast<std::uint64_t>(i));
        const auto tree = solve_tree(g, tree_config);
        const auto cover = solve_total(enumerate_all_paths(g), g,
                                       solver(CoverMode::exact, Objective::total, RoughnessKind::pair));
        if (std::abs(tree.objective_value - cover.objective_value) > 1e-9) {
            out.fail("tree " + std::to_string(i) + ": " + std::to_string(tree.objective_value) + " vs " +
                     std::to_string(cover.objective_value));
        }
    }

    std::vector<double> xs, ys;
    for (int n : {10, 20, 40, 80, 120, 160, 200}) {
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            const auto g = random_geometric_tree(n, 77 + static_cast<std::uint64_t>(rep));
            const auto start = Clock::now();
            solve_tree(g, tree_config);
            best = std::min(best, seconds_since(start));
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(std::max(best, 1e-6)));
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double exponent = sxy / sxx;
    if (exponent > 5.0) out.fail("runtime exponent " + std::to_string(exponent));
    if (out.pass) out.detail = "100 trees agree, runtime exponent " + std::to_string(exponent);
    return out;
}

// Pair counts written out directly, for the classical indices.
std::pair<double, double> classical(const EdgePartition& a, const EdgePartition& b) {
    auto same = [](std::span<const Label> x, std::span<const Label> y) {
        for (Label l : x) {
            if (std::find(y.begin(), y.end(), l) != y.end()) return true;
        }
        return false;
    };
    double ee = 0, en = 0, ne = 0, nn = 0;
    for (EdgeId i = 0; i < a.edge_count(); ++i) {
        for (EdgeId j = i + 1; j < a.edge_count(); ++j) {
            const bool sa = same(a.labels(i), a.labels(j));
            const bool sb = same(b.labels(i), b.labels(j));
            (sa && sb ? ee : sa ? en : sb ? ne : nn) += 1;
        }
    }
    const double all = ee + en + ne + nn;
    return {all == 0 ? 1.0 : (ee + nn) / all, ee + en + ne == 0 ? 1.0 : ee / (ee + en + ne)};
}

Outcome similarity_identities() {
    Outcome out;
    for (int i = 0; i < 100; ++i) {
        const auto g = random_geometric_tree(8 + i % 25, 5000 + static_cast<std::uint64_t>(i));
        const auto a = random_overlapping_tree_cover(g, i % 6, 2 * static_cast<std::uint64_t>(i) + 1);
        const auto b = random_overlapping_tree_cover(g, (i + 3) % 6, 2 * static_cast<std::uint64_t>(i) + 2);
        const std::string tag = "pair " + std::to_string(i) + ": ";

        const auto inf = rand_jaccard(a, b, kUnboundedHops);
        const auto [ri, jac] = classical(a, b);
        const auto wide = rand_jaccard(a, b, {g.edge_count() + 1, kUnboundedHops}, g);
        if (inf.ri != ri || inf.ji != jac || wide[1].ri != ri || wide[1].ji != jac) out.fail(tag + "(a) classical");
        if (wide[0].ri != ri || wide[0].ji != jac) out.fail(tag + "(a) diameter-wide d");

        for (const auto& r : rand_jaccard(a, a, {1, 2, 3, 5, kUnboundedHops}, g)) {
            if (r.ri != 1.0 || r.ji != 1.0) out.fail(tag + "(b) d = " + std::to_string(r.counts.d));
        }

        std::vector<std::vector<Label>> first;
        for (EdgeId e = 0; e < a.edge_count(); ++e) first.push_back({a.labels(e).front()});
        const EdgePartition disjoint(first);
        const auto vi = variation_of_information(disjoint, disjoint);
        if (!vi || std::abs(*vi - 1.0) > 1e-12) out.fail(tag + "(c)");

        const auto vab = variation_of_information(a, b);
        if ((a.overlapping() || b.overlapping()) != !vab.has_value()) out.fail(tag + "(d)");
    }
    if (out.pass) out.detail = "100 pairs, identities (a) to (d) hold";
    return out;
}

Outcome robustness_trends() {
    Outcome out;
    const auto fx = bundled_fixture();
    PerturbationPlan plan;
    plan.kind = PerturbationKind::weight_noise;
    plan.levels = {50, 100, 200, 400};
    plan.trials_per_level = 50;
    plan.rng_seed = 1;
    const auto start = Clock::now();
    const auto scan = run_noise_scan(fx.graph, *fx.labels, plan, PipelineConfig{});
    const double t = seconds_since(start);
    double baseline = std::nan("");
    for (const auto& row : scan.rows) {
        if (row.baseline) baseline = row.ji1;
    }
    const double m200 = scan.mean_ji1(200);
    const double m400 = scan.mean_ji1(400);
    if (!(baseline >= m400)) out.fail("baseline " + std::to_string(baseline) + " < " + std::to_string(m400));
    if (!(std::abs(m200 - m400) <= 0.1)) out.fail("plateau gap " + std::to_string(std::abs(m200 - m400)));
    if (t >= 600.0) out.fail("took " + std::to_string(t) + " s");
    if (out.pass) {
        std::ostringstream s;
        s << "baseline " << baseline << ", f=200 " << m200 << ", f=400 " << m400 << ", " << t << " s";
        out.detail = s.str();
    }
    return out;
}

Outcome postprocess() {
    Outcome out;
    const auto fx = bundled_fixture();
    const auto start = Clock::now();
    const auto fragments = fragment_at_overlaps(fx.graph, *fx.labels);
    const auto pool = sample_bfs(fx.graph, SamplerConfig{});
    const auto merged = postprocess_merge(fx.graph, fragments, pool, SolverConfig{});
    const double t = seconds_since(start);
    const double ji1 = ji(merged.labels, *fx.labels, 1, fx.graph);
    if (ji1 != 1.0) out.fail("JI1 = " + std::to_string(ji1));
    if (fragments.distinct_labels().size() <= fx.labels->distinct_labels().size()) out.fail("nothing was fragmented");
    if (t >= 30.0) out.fail("took " + std::to_string(t) + " s");
    if (out.pass) {
        out.detail = std::to_string(fragments.distinct_labels().size()) + " fragments merged, " + std::to_string(t) +
                     " s";
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Every output file; manifests lose their wall time, which is a measurement.
std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string text = slurp(entry.path());
        if (entry.path().filename() == "manifest.json") {
            auto j = nlohmann::json::parse(text);
            j.erase("wall_time_s");
            text = j.dump();
        }
        out[fs::relative(entry.path(), dir).string()] = text;
    }
    return out;
}

int run_cli(const std::string& args, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const std::string cmd = std::string(FILCOVER_CLI) + " " + args + " -o " + out_dir.string() + " > " +
                            out_dir.string() + ".log 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
    Outcome out;
    const auto root = fs::temp_directory_path() / ("filcover_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const std::string fixture = oracle::data_path("contrived.gml");
    const std::string fragments = oracle::data_path("fragmented.gml");

    if (run_cli("generate --kind tree --n 30 --seed 2", root / "tree") != 0) {
        out.fail("could not generate a tree");
        return out;
    }
    const std::string tree = (root / "tree" / "tree.gml").string();

    const std::vector<std::string> commands = {
        "decompose " + fixture + " --reference " + fixture,
        "decompose " + fixture + " --paths rmst --seed 1",
        "sweep " + fixture + " --reference " + fixture,
        "compare " + fixture + " " + fragments + " --d 1,2,inf",
        "treesolve " + tree + " --k-overlap 2",
        "robustness " + fixture + " --mode noise --levels 0,200 --trials 5 --seed 3",
        "robustness " + fixture + " --mode delete --levels 1,3 --trials 5 --seed 3",
        "postprocess " + fragments + " --reference " + fixture,
        "generate --kind contrived",
        "generate --kind tree-cover --n 25 --seed 4",
    };
    int index = 0;
    for (const auto& c : commands) {
        const auto dir = root / ("run" + std::to_string(index++));
        if (const int code = run_cli(c, dir); code != 0) {
            out.fail("exit " + std::to_string(code) + ": " + c);
            continue;
        }
        const auto first = snapshot(dir);
        fs::remove_all(dir);
        if (const int code = run_cli(c, dir); code != 0) {
            out.fail("second run exit " + std::to_string(code) + ": " + c);
            continue;
        }
        if (snapshot(dir) != first) out.fail("outputs differ: " + c);
    }
    fs::remove_all(root);
    if (out.pass) out.detail = std::to_string(commands.size()) + " commands byte-identical";
    return out;
}

Outcome desk_scale() {
    Outcome out;
    const auto g = load_labeled_graph_file(oracle::data_path("lines20.gml")).graph;
    const auto start = Clock::now();
    const auto cover = decompose(g, PipelineConfig{});
    const double t = seconds_since(start);
    if (g.edge_count() < 150 || g.edge_count() > 250) out.fail("E = " + std::to_string(g.edge_count()));
    if (t >= 60.0) out.fail("took " + std::to_string(t) + " s");
    if (out.pass) {
        out.detail = "E = " + std::to_string(g.edge_count()) + ", " + std::to_string(cover.selected.size()) +
                     " filaments, " + std::to_string(t) + " s";
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle optimality", oracle_optimality},
        {"fractional correctness", fractional_correctness},
        {"fixture recovery", fixture_recovery},
        {"rmst loop over-segmentation", rmst_loop},
        {"tree cross-validation", tree_cross_validation},
        {"similarity identities", similarity_identities},
        {"robustness trends", robustness_trends},
        {"post-processing merge", postprocess},
        {"determinism", determinism},
        {"desk-scale performance", desk_scale},
    };
    int failures = 0;
    int number = 0;
    for (const auto& [name, check] : criteria) {
        ++number;
        Outcome result;
        try {
            result = check();
        } catch (const std::exception& e) {
            result.fail(std::string("threw: ") + e.what());
        }
        if (!result.pass) ++failures;
        std::printf("%s %d %s: %s\n", result.pass ? "PASS" : "FAIL", number, name.c_str(), result.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
