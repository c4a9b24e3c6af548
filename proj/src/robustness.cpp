#include "filcover/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "filcover/error.hpp"
#include "filcover/gml.hpp"
#include "filcover/random.hpp"
#include "filcover/similarity.hpp"

namespace filcover {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Scores a cover computed on a subgraph against the reference on the full
// edge set; `kept` maps subgraph edges to original edges.
RandJaccard score(const WeightedGeometricGraph& graph, const EdgePartition& reference, const FilamentCover& cover,
                  const std::vector<EdgeId>& kept) {
    std::vector<std::vector<Label>> labels(static_cast<std::size_t>(graph.edge_count()));
    const auto& sub = cover.labels.all_labels();
    for (std::size_t e = 0; e < kept.size(); ++e) labels[static_cast<std::size_t>(kept[e])] = sub[e];
    Label fresh = static_cast<Label>(cover.selected.size());
    for (auto& l : labels) {
        if (l.empty()) l = {fresh++};
    }
    return rand_jaccard(reference, EdgePartition(std::move(labels)), std::vector<int>{1}, graph).front();
}

ScanRow run_trial(const WeightedGeometricGraph& graph, const EdgePartition& reference, const PipelineConfig& config,
                  const WeightedGeometricGraph& perturbed, const std::vector<EdgeId>& kept, double level, int trial) {
    ScanRow row{level, trial, kNaN, kNaN, false, {}};
    try {
        const auto r = score(graph, reference, decompose(perturbed, config), kept);
        row.ji1 = r.ji;
        row.ri1 = r.ri;
    } catch (const Error& e) {
        row.error = e.module() + ": " + e.what();
    }
    return row;
}

double slope(const std::vector<ScanRow>& rows, double ScanRow::*field) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
        if (!r.baseline && !std::isnan(r.*field)) pts.emplace_back(r.level, r.*field);
    }
    if (pts.size() < 2) return kNaN;
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) mx += x, my += y;
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
    return sxx > 0.0 ? sxy / sxx : kNaN;
}

void finish(ScanResult& result) {
    result.ji1_slope = slope(result.rows, &ScanRow::ji1);
    result.ri1_slope = slope(result.rows, &ScanRow::ri1);
}

double mean_of(const std::vector<ScanRow>& rows, double level, double ScanRow::*field) {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : rows) {
        if (r.baseline || r.level != level || std::isnan(r.*field)) continue;
        sum += r.*field;
        ++n;
    }
    return n == 0 ? kNaN : sum / n;
}

}  // namespace

void PerturbationPlan::validate(int edge_count) const {
    if (trials_per_level < 1) throw ValidationError("trials must be positive", "robustness");
    for (double level : levels) {
        if (kind == PerturbationKind::delete_edges) {
            if (level < 0 || level >= edge_count || level != std::floor(level)) {
                throw ValidationError("deletion counts must be integers in [0, E)", "robustness");
            }
        } else if (!(level >= 0.0) || !std::isfinite(level)) {
            throw ValidationError("noise factors must be finite and non-negative", "robustness");
        }
    }
}

double ScanResult::mean_ji1(double level) const { return mean_of(rows, level, &ScanRow::ji1); }
double ScanResult::mean_ri1(double level) const { return mean_of(rows, level, &ScanRow::ri1); }

ScanResult run_deletion_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                             const PerturbationPlan& plan, const PipelineConfig& config) {
    plan.validate(graph.edge_count());
    reference.validate_for(graph.edge_count(), "robustness");
    ScanResult result;
    for (std::size_t li = 0; li < plan.levels.size(); ++li) {
        const auto k = static_cast<std::size_t>(plan.levels[li]);
        for (int t = 0; t < plan.trials_per_level; ++t) {
            Rng rng(derive_seed(plan.rng_seed, li, static_cast<std::uint64_t>(t)));
            std::vector<EdgeId> order(static_cast<std::size_t>(graph.edge_count()));
            std::iota(order.begin(), order.end(), 0);
            for (std::size_t i = 0; i < k; ++i) {
                std::swap(order[i], order[i + rng.below(order.size() - i)]);
            }
            const std::vector<EdgeId> removed(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<EdgeId> kept;
            const auto perturbed = graph.without_edges(removed, &kept);
            result.rows.push_back(run_trial(graph, reference, config, perturbed, kept, plan.levels[li], t));
        }
    }
    finish(result);
    return result;
}

ScanResult run_noise_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                          const PerturbationPlan& plan, const PipelineConfig& config) {
    plan.validate(graph.edge_count());
    reference.validate_for(graph.edge_count(), "robustness");
    std::vector<EdgeId> all(static_cast<std::size_t>(graph.edge_count()));
    std::iota(all.begin(), all.end(), 0);

    ScanResult result;
    auto base = run_trial(graph, reference, config, graph, all, 0.0, 0);
    base.baseline = true;
    result.rows.push_back(base);
    for (std::size_t li = 0; li < plan.levels.size(); ++li) {
        const double f = plan.levels[li];
        for (int t = 0; t < plan.trials_per_level; ++t) {
            Rng rng(derive_seed(plan.rng_seed, li, static_cast<std::uint64_t>(t)));
            std::vector<double> weights;
            for (const auto& e : graph.edges()) {
                const double w = e.weight;
                const double noisy = plan.zero_variance ? w : w + (1.0 + f / 100.0) * w * rng.normal();
                weights.push_back(std::max(noisy, 1e-6 * w));
            }
            const auto perturbed = graph.with_weights(weights);
            result.rows.push_back(run_trial(graph, reference, config, perturbed, all, f, t));
        }
    }
    finish(result);
    return result;
}

ScanResult run_scan(const WeightedGeometricGraph& graph, const EdgePartition& reference,
                    const PerturbationPlan& plan, const PipelineConfig& config) {
    return plan.kind == PerturbationKind::delete_edges ? run_deletion_scan(graph, reference, plan, config)
                                                      : run_noise_scan(graph, reference, plan, config);
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
    out << "level,trial,ji1,ri1\n";
    for (const auto& r : result.rows) {
        out << (r.baseline ? std::string("baseline") : format_real(r.level)) << ',' << r.trial << ','
            << format_real(r.ji1) << ',' << format_real(r.ri1) << '\n';
    }
}

}  // namespace filcover
