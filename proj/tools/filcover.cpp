#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "filcover/cover_solver.hpp"
#include "filcover/error.hpp"
#include "filcover/generators.hpp"
#include "filcover/gml.hpp"
#include "filcover/metrics.hpp"
#include "filcover/pipeline.hpp"
#include "filcover/random.hpp"
#include "filcover/robustness.hpp"
#include "filcover/similarity.hpp"
#include "filcover/tree_solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace filcover;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitResource = 3;

std::string version_string() { return std::string(FILCOVER_VERSION) + " (" + FILCOVER_GIT_HASH + ")"; }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string(), "cli");
    out << text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("not a number: '" + item + "'", "cli");
        }
    }
    return out;
}

std::vector<int> parse_distances(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        if (item == "inf") {
            out.push_back(kUnboundedHops);
            continue;
        }
        const auto v = parse_reals(item);
        if (v.size() != 1 || v[0] < 1 || v[0] != std::floor(v[0]) || v[0] > 1e9) {
            throw ValidationError("distances must be positive integers or 'inf'", "cli");
        }
        out.push_back(static_cast<int>(v[0]));
    }
    if (out.empty()) throw ValidationError("empty distance list", "cli");
    return out;
}

std::string distance_name(int d) { return d == kUnboundedHops ? "inf" : std::to_string(d); }

// Options shared by every subcommand that samples and solves.
struct PipelineArgs {
    std::string paths = "bfs";
    double angle_threshold = 60.0;
    int rmst_trees = 100;
    std::uint64_t seed = 1;
    std::int64_t max_paths = 5'000'000;
    std::string cover = "over";
    std::string objective = "total";
    std::string roughness = "pair";
    std::int64_t node_limit = 10'000'000;
    double tol = 1e-9;

    void attach(CLI::App* app) {
        app->add_option("--paths", paths, "path sampler: bfs, rmst or both")->capture_default_str();
        app->add_option("--angle-threshold", angle_threshold, "BFS deflection threshold in degrees")
            ->capture_default_str();
        app->add_option("--rmst-trees", rmst_trees, "number of random spanning trees")->capture_default_str();
        app->add_option("--seed", seed, "random seed")->capture_default_str();
        app->add_option("--max-paths", max_paths, "pool size limit")->capture_default_str();
        app->add_option("--cover", cover, "exact or over")->capture_default_str();
        app->add_option("--objective", objective, "total or avg")->capture_default_str();
        app->add_option("--roughness", roughness, "pair or all")->capture_default_str();
        app->add_option("--node-limit", node_limit, "branch-and-bound node limit")->capture_default_str();
        app->add_option("--tol", tol, "relative optimality tolerance")->capture_default_str();
    }

    PipelineConfig resolve() const {
        PipelineConfig c;
        c.paths = parse_pool_choice(paths);
        c.sampler.angle_threshold_deg = angle_threshold;
        c.sampler.rmst_trees = rmst_trees;
        c.sampler.rng_seed = seed;
        c.sampler.max_paths = max_paths;
        c.solver.cover_mode = parse_cover_mode(cover);
        c.solver.objective = parse_objective(objective);
        c.solver.roughness_kind = parse_roughness_kind(roughness);
        c.solver.node_limit = node_limit;
        c.solver.opt_tol = tol;
        c.solver.validate();
        return c;
    }
};

json pipeline_json(const PipelineConfig& c) {
    return json{{"paths", to_string(c.paths)},
                {"angle_threshold_deg", c.sampler.angle_threshold_deg},
                {"rmst_trees", c.sampler.rmst_trees},
                {"max_paths", c.sampler.max_paths},
                {"cover", to_string(c.solver.cover_mode)},
                {"objective", to_string(c.solver.objective)},
                {"roughness", to_string(c.solver.roughness_kind)},
                {"big_m", c.solver.big_m},
                {"node_limit", c.solver.node_limit},
                {"opt_tol", c.solver.opt_tol}};
}

json stats_json(const FilamentCover& cover) {
    const auto& s = cover.solver_stats;
    return json{{"filaments", cover.selected.size()},
                {"objective_value", cover.objective_value},
                {"pool_size", s.pool_size},
                {"pool_method", s.method},
                {"branch_nodes", s.branch_nodes},
                {"lower_bound", s.lower_bound},
                {"dinkelbach_iterations", s.dinkelbach_iterations}};
}

struct Run {
    std::string subcommand;
    std::vector<std::string> argv;
    fs::path output;
    json options = json::object();
    json inputs = json::array();
    json results = json::object();
    std::uint64_t seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write_manifest() const {
        json m;
        m["tool"] = "filcover";
        m["version"] = FILCOVER_VERSION;
        m["build"] = FILCOVER_GIT_HASH;
        m["subcommand"] = subcommand;
        m["argv"] = argv;
        m["inputs"] = inputs;
        m["output"] = output.string();
        m["seed"] = seed;
        m["rng"] = std::string(kRngName);
        m["options"] = options;
        m["results"] = results;
        m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_text(output / "manifest.json", m.dump(2) + "\n");
    }
};

LabeledGraph load_input(const std::string& path, Run& run, bool coordinates) {
    run.inputs.push_back(path);
    return load_labeled_graph_file(path, LoadOptions{coordinates});
}

EdgePartition require_labels(const LabeledGraph& g, const std::string& what) {
    if (!g.labels) throw ValidationError(what + " carries no filament labels", "cli");
    return *g.labels;
}

std::string compare_csv(const SimilarityReport& r, const std::vector<int>& ds) {
    std::ostringstream out;
    out << "vi,ri,ji";
    for (int d : ds) out << ",ri_" << distance_name(d) << ",ji_" << distance_name(d);
    out << '\n' << (r.vi ? format_real(*r.vi) : "undefined") << ',' << format_real(r.ri) << ',' << format_real(r.ji);
    for (int d : ds) out << ',' << format_real(r.ri_d.at(d)) << ',' << format_real(r.ji_d.at(d));
    out << '\n';
    return out.str();
}

std::vector<int> with_adjacent_first(std::vector<int> ds) {
    std::erase(ds, 1);
    ds.insert(ds.begin(), 1);
    return ds;
}

// Graph, filament table and, against a reference, the comparison and the
// filament matching.
json write_cover(const fs::path& dir, const WeightedGeometricGraph& graph, const FilamentCover& cover,
                 const std::optional<EdgePartition>& reference) {
    fs::create_directories(dir);
    save_graph_file(graph, &cover.labels, dir / "filaments.gml");
    std::ostringstream csv;
    write_metrics_csv(csv, compute_metrics(cover, graph));
    write_text(dir / "filaments.csv", csv.str());
    json results = stats_json(cover);
    if (!reference) return results;

    reference->validate_for(graph.edge_count(), "similarity");
    const std::vector<int> ds{1};
    const auto report = compare_partitions(cover.labels, *reference, graph, ds);
    write_text(dir / "comparison.csv", compare_csv(report, ds));
    const auto matching = match_filament_identities(cover.labels, *reference);
    std::ostringstream match;
    match << "filament_id,reference_label\n";
    for (std::size_t i = 0; i < cover.selected.size(); ++i) {
        const auto it = matching.a_to_b.find(static_cast<Label>(i));
        match << i << ',' << (it == matching.a_to_b.end() ? std::string() : std::to_string(it->second)) << '\n';
    }
    write_text(dir / "match.csv", match.str());
    results["ji1"] = report.ji_d.at(1);
    results["ri1"] = report.ri_d.at(1);
    results["ji"] = report.ji;
    results["ri"] = report.ri;
    return results;
}

void print_summary(const json& results) {
    std::cout << "filaments " << results["filaments"].get<std::size_t>() << " objective "
              << format_real(results["objective_value"].get<double>());
    if (results.contains("ji1")) {
        std::cout << " ji1 " << format_real(results["ji1"].get<double>()) << " ji "
                  << format_real(results["ji"].get<double>());
    }
    std::cout << '\n';
}

int sweep(const WeightedGeometricGraph& graph, const std::optional<EdgePartition>& reference,
          const PipelineConfig& base, Run& run) {
    std::ostringstream summary;
    summary << "paths,cover,roughness,objective,status,filaments,objective_value,ji1,ri1\n";
    json rows = json::array();
    for (auto paths : {PoolChoice::bfs, PoolChoice::rmst}) {
        for (auto mode : {CoverMode::exact, CoverMode::over}) {
            for (auto kind : {RoughnessKind::pair, RoughnessKind::all}) {
                for (auto objective : {Objective::total, Objective::avg}) {
                    PipelineConfig c = base;
                    c.paths = paths;
                    c.solver.cover_mode = mode;
                    c.solver.roughness_kind = kind;
                    c.solver.objective = objective;
                    const std::string name = to_string(paths) + "_" + to_string(mode) + "_" + to_string(kind) +
                                             "_" + to_string(objective);
                    summary << to_string(paths) << ',' << to_string(mode) << ',' << to_string(kind) << ','
                            << to_string(objective) << ',';
                    try {
                        const auto cover = decompose(graph, c);
                        const auto res = write_cover(run.output / name, graph, cover, reference);
                        summary << "ok," << cover.selected.size() << ',' << format_real(cover.objective_value)
                                << ',' << (res.contains("ji1") ? format_real(res["ji1"].get<double>()) : "") << ','
                                << (res.contains("ri1") ? format_real(res["ri1"].get<double>()) : "") << '\n';
                        rows.push_back(json{{"combination", name}, {"status", "ok"}, {"results", res}});
                    } catch (const InfeasibleCoverError& e) {
                        summary << "infeasible,,,,\n";
                        rows.push_back(json{{"combination", name}, {"status", "infeasible"}});
                    } catch (const Error& e) {
                        const bool limit = dynamic_cast<const PoolExplosionError*>(&e) != nullptr ||
                                           dynamic_cast<const NodeLimitError*>(&e) != nullptr;
                        if (!limit) throw;
                        summary << "resource-limit,,,,\n";
                        rows.push_back(json{{"combination", name}, {"status", "resource-limit"}});
                    }
                }
            }
        }
    }
    write_text(run.output / "summary.csv", summary.str());
    run.results["combinations"] = rows;
    std::cout << "sweep wrote " << rows.size() << " combinations\n";
    return 0;
}

struct Options {
    std::string input;
    std::string second;
    std::string output;
    std::string reference;
    PipelineArgs pipeline;
    bool sweep = false;
    std::string distances = "1";
    int k_overlap = 1;
    bool multiplicity_dp = false;
    std::string mode = "noise";
    std::string levels;
    int trials = 0;
    bool zero_variance = false;
    std::string kind = "contrived";
    int n = 50;
    int lines = 22;
    int max_overlap = 10;
    std::string manifest;
};

int cmd_decompose(Options& o, Run& run, bool force_sweep) {
    const auto input = load_input(o.input, run, false);
    std::optional<EdgePartition> reference;
    if (!o.reference.empty()) reference = require_labels(load_input(o.reference, run, false), o.reference);
    if (reference && reference->edge_count() != input.graph.edge_count()) {
        throw GraphMismatchError("reference does not match the input graph", "cli");
    }
    const auto config = o.pipeline.resolve();
    run.seed = config.sampler.rng_seed;
    run.options = pipeline_json(config);
    run.options["sweep"] = o.sweep || force_sweep;
    fs::create_directories(run.output);
    if (o.sweep || force_sweep) return sweep(input.graph, reference, config, run);

    const auto cover = decompose(input.graph, config);
    run.results = write_cover(run.output, input.graph, cover, reference);
    print_summary(run.results);
    return 0;
}

int cmd_compare(Options& o, Run& run) {
    const auto a = load_input(o.input, run, false);
    const auto b = load_input(o.second, run, false);
    if (a.graph.signature() != b.graph.signature()) {
        throw GraphMismatchError("the two files describe different graphs", "similarity");
    }
    const auto ds = with_adjacent_first(parse_distances(o.distances));
    const auto report = compare_partitions(require_labels(a, o.input), require_labels(b, o.second), a.graph, ds);
    json d = json::array();
    for (int x : ds) d.push_back(distance_name(x));
    run.options = json{{"d", d}};
    fs::create_directories(run.output);
    const auto csv = compare_csv(report, ds);
    write_text(run.output / "comparison.csv", csv);
    std::cout << csv;
    return 0;
}

int cmd_treesolve(Options& o, Run& run) {
    const auto input = load_input(o.input, run, false);
    TreeCoverConfig config;
    config.k_overlap = o.k_overlap;
    config.objective = parse_objective(o.pipeline.objective);
    config.roughness_kind = parse_roughness_kind(o.pipeline.roughness);
    config.multiplicity_dp = o.multiplicity_dp;
    run.options = json{{"k_overlap", config.k_overlap},
                       {"objective", to_string(config.objective)},
                       {"roughness", to_string(config.roughness_kind)},
                       {"multiplicity_dp", config.multiplicity_dp}};
    std::optional<EdgePartition> reference;
    if (!o.reference.empty()) reference = require_labels(load_input(o.reference, run, false), o.reference);
    const auto cover = solve_tree(input.graph, config);
    run.results = write_cover(run.output, input.graph, cover, reference);
    print_summary(run.results);
    return 0;
}

int cmd_robustness(Options& o, Run& run) {
    const auto input = load_input(o.input, run, true);
    const auto reference = o.reference.empty() ? require_labels(input, o.input)
                                               : require_labels(load_input(o.reference, run, false), o.reference);
    PerturbationPlan plan;
    if (o.mode == "delete") {
        plan.kind = PerturbationKind::delete_edges;
    } else if (o.mode != "noise") {
        throw ValidationError("mode must be delete or noise", "robustness");
    }
    const bool del = plan.kind == PerturbationKind::delete_edges;
    plan.levels = parse_reals(o.levels.empty() ? (del ? "1" : "0,50,100,200,400") : o.levels);
    plan.trials_per_level = o.trials > 0 ? o.trials : (del ? input.graph.edge_count() : 100);
    plan.rng_seed = o.pipeline.seed;
    plan.zero_variance = o.zero_variance;
    const auto config = o.pipeline.resolve();
    run.seed = plan.rng_seed;
    run.options = pipeline_json(config);
    run.options["mode"] = o.mode;
    run.options["levels"] = plan.levels;
    run.options["trials"] = plan.trials_per_level;
    run.options["zero_variance"] = plan.zero_variance;

    const auto result = run_scan(input.graph, reference, plan, config);
    fs::create_directories(run.output);
    std::ostringstream csv;
    write_scan_csv(csv, result);
    write_text(run.output / "robustness.csv", csv.str());
    int failed = 0;
    for (const auto& r : result.rows) failed += r.error.empty() ? 0 : 1;
    auto number = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
    run.results = json{{"rows", result.rows.size()},
                       {"failed_trials", failed},
                       {"ji1_slope", number(result.ji1_slope)},
                       {"ri1_slope", number(result.ri1_slope)}};
    std::cout << "rows " << result.rows.size() << " failed " << failed << " ji1_slope "
              << format_real(result.ji1_slope) << '\n';
    return 0;
}

int cmd_postprocess(Options& o, Run& run) {
    const auto input = load_input(o.input, run, false);
    const auto fragments = require_labels(input, o.input);
    std::optional<EdgePartition> reference;
    if (!o.reference.empty()) reference = require_labels(load_input(o.reference, run, false), o.reference);
    const auto config = o.pipeline.resolve();
    run.seed = config.sampler.rng_seed;
    run.options = pipeline_json(config);
    const auto pool = build_pool(input.graph, config.paths, config.sampler);
    const auto cover = postprocess_merge(input.graph, fragments, pool, config.solver);
    run.results = write_cover(run.output, input.graph, cover, reference);
    print_summary(run.results);
    return 0;
}

int cmd_generate(Options& o, Run& run) {
    run.seed = o.pipeline.seed;
    run.options = json{{"kind", o.kind}, {"n", o.n}, {"lines", o.lines}, {"max_overlap", o.max_overlap}};
    fs::create_directories(run.output);
    const fs::path file = run.output / (o.kind + ".gml");
    if (o.kind == "contrived" || o.kind == "fragmented") {
        const auto fx = fixture_contrived();
        const auto labels = o.kind == "contrived" ? fx.truth : fragment_at_overlaps(fx.graph, fx.truth);
        save_graph_file(fx.graph, &labels, file);
    } else if (o.kind == "tree") {
        save_graph_file(random_geometric_tree(o.n, o.pipeline.seed), nullptr, file);
    } else if (o.kind == "tree-cover") {
        const auto tree = random_geometric_tree(o.n, o.pipeline.seed);
        const auto labels = random_overlapping_tree_cover(tree, o.max_overlap, derive_seed(o.pipeline.seed, 1));
        save_graph_file(tree, &labels, file);
    } else if (o.kind == "lines") {
        save_graph_file(random_line_network(o.lines, o.pipeline.seed), nullptr, file);
    } else {
        throw ValidationError("unknown generator '" + o.kind + "'", "generators");
    }
    std::cout << file.string() << '\n';
    return 0;
}

int run_cli(std::vector<std::string> args);

int cmd_rerun(Options& o) {
    std::ifstream in(o.manifest);
    if (!in) throw ValidationError("cannot read manifest " + o.manifest, "cli");
    json m;
    try {
        m = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed manifest: ") + e.what(), "cli");
    }
    if (!m.contains("argv") || !m["argv"].is_array()) throw ValidationError("manifest has no argv", "cli");
    auto args = m["argv"].get<std::vector<std::string>>();
    if (!o.output.empty()) {
        for (std::size_t i = 0; i + 1 < args.size(); ++i) {
            if (args[i] == "--output" || args[i] == "-o") args[i + 1] = o.output;
        }
    }
    return run_cli(args);
}

int run_cli(std::vector<std::string> args) {
    CLI::App app{"Filament decomposition of weighted geometric networks", "filcover"};
    app.set_version_flag("--version", "filcover " + version_string());
    app.require_subcommand(1);
    Options o;

    auto* decompose_cmd = app.add_subcommand("decompose", "sample paths and solve the filament cover");
    auto* sweep_cmd = app.add_subcommand("sweep", "decompose with all 16 option combinations");
    for (auto* c : {decompose_cmd, sweep_cmd}) {
        c->add_option("input", o.input, "input graph (GML)")->required()->check(CLI::ExistingFile);
        c->add_option("-o,--output", o.output, "output directory")->required();
        c->add_option("--reference", o.reference, "labelled reference graph")->check(CLI::ExistingFile);
        o.pipeline.attach(c);
    }
    decompose_cmd->add_flag("--sweep", o.sweep, "run all 16 option combinations");

    auto* compare_cmd = app.add_subcommand("compare", "similarity of two labelled graphs");
    compare_cmd->add_option("first", o.input, "labelled graph")->required()->check(CLI::ExistingFile);
    compare_cmd->add_option("second", o.second, "labelled graph")->required()->check(CLI::ExistingFile);
    compare_cmd->add_option("-o,--output", o.output, "output directory")->required();
    compare_cmd->add_option("--d", o.distances, "comma-separated distances, 'inf' allowed")->capture_default_str();

    auto* tree_cmd = app.add_subcommand("treesolve", "exact cover of a tree by dynamic programming");
    tree_cmd->add_option("input", o.input, "input tree (GML)")->required()->check(CLI::ExistingFile);
    tree_cmd->add_option("-o,--output", o.output, "output directory")->required();
    tree_cmd->add_option("--reference", o.reference, "labelled reference graph")->check(CLI::ExistingFile);
    tree_cmd->add_option("--k-overlap", o.k_overlap, "paths allowed per edge (1 to 3)")->capture_default_str();
    tree_cmd->add_option("--objective", o.pipeline.objective, "total or avg")->capture_default_str();
    tree_cmd->add_option("--roughness", o.pipeline.roughness, "pair or all")->capture_default_str();
    tree_cmd->add_flag("--multiplicity-dp", o.multiplicity_dp, "use the multiplicity program for k = 1");

    auto* robust_cmd = app.add_subcommand("robustness", "edge deletion or weight noise scan");
    robust_cmd->add_option("input", o.input, "input graph (GML)")->required()->check(CLI::ExistingFile);
    robust_cmd->add_option("-o,--output", o.output, "output directory")->required();
    robust_cmd->add_option("--reference", o.reference, "labelled reference (default: input labels)")
        ->check(CLI::ExistingFile);
    robust_cmd->add_option("--mode", o.mode, "delete or noise")->capture_default_str();
    robust_cmd->add_option("--levels", o.levels, "edge counts or noise factors, comma-separated");
    robust_cmd->add_option("--trials", o.trials, "trials per level (default: E for delete, 100 for noise)");
    robust_cmd->add_flag("--zero-variance", o.zero_variance, "leave weights unchanged in noise scans");
    o.pipeline.attach(robust_cmd);

    auto* post_cmd = app.add_subcommand("postprocess", "merge fragments of a labelled decomposition");
    post_cmd->add_option("input", o.input, "graph labelled with fragments")->required()->check(CLI::ExistingFile);
    post_cmd->add_option("-o,--output", o.output, "output directory")->required();
    post_cmd->add_option("--reference", o.reference, "labelled reference graph")->check(CLI::ExistingFile);
    o.pipeline.attach(post_cmd);

    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic graph");
    gen_cmd->add_option("--kind", o.kind, "contrived, fragmented, tree, tree-cover or lines")->capture_default_str();
    gen_cmd->add_option("-o,--output", o.output, "output directory")->required();
    gen_cmd->add_option("--n", o.n, "tree size")->capture_default_str();
    gen_cmd->add_option("--lines", o.lines, "number of lines")->capture_default_str();
    gen_cmd->add_option("--max-overlap", o.max_overlap, "overlap budget for tree-cover")->capture_default_str();
    gen_cmd->add_option("--seed", o.pipeline.seed, "random seed")->capture_default_str();

    auto* rerun_cmd = app.add_subcommand("rerun", "repeat the run recorded in a manifest");
    rerun_cmd->add_option("manifest", o.manifest, "manifest.json")->required()->check(CLI::ExistingFile);
    rerun_cmd->add_option("-o,--output", o.output, "output directory (default: as recorded)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (rerun_cmd->parsed()) return cmd_rerun(o);

    Run run;
    run.argv = args;
    run.output = o.output;
    run.subcommand = app.get_subcommands().front()->get_name();
    int code = 0;
    if (decompose_cmd->parsed()) code = cmd_decompose(o, run, false);
    else if (sweep_cmd->parsed()) code = cmd_decompose(o, run, true);
    else if (compare_cmd->parsed()) code = cmd_compare(o, run);
    else if (tree_cmd->parsed()) code = cmd_treesolve(o, run);
    else if (robust_cmd->parsed()) code = cmd_robustness(o, run);
    else if (post_cmd->parsed()) code = cmd_postprocess(o, run);
    else if (gen_cmd->parsed()) code = cmd_generate(o, run);
    run.write_manifest();
    return code;
}

int report(const Error& e, int code) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const InfeasibleCoverError& e) {
        return report(e, kExitInfeasible);
    } catch (const PoolExplosionError& e) {
        return report(e, kExitResource);
    } catch (const NodeLimitError& e) {
        return report(e, kExitResource);
    } catch (const Error& e) {
        return report(e, kExitUsage);
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error [cli]: " << e.what() << '\n';
        return kExitUsage;
    }
}
