#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "filcover/graph.hpp"

namespace filcover {

struct LoadOptions {
    /// Fail with MissingCoordinatesError when nodes carry no positions.
    bool require_coordinates = false;
};

struct LabeledGraph {
    WeightedGeometricGraph graph;
    /// Present when at least one edge carries a `filament` attribute.
    std::optional<EdgePartition> labels;
};

/// Reads the GML-style exchange format. Node positions are taken from flat
/// x/y/z keys or from a nested `graphics [ x .. y .. z .. ]` block. Every
/// edge needs a numeric `weight`.
WeightedGeometricGraph load_graph(std::istream& in, const LoadOptions& options = {});
LabeledGraph load_labeled_graph(std::istream& in, const LoadOptions& options = {});
LabeledGraph load_labeled_graph_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes ASCII GML with flat coordinate keys and 9 significant digits.
/// With labels, each edge gets `filament "a;b"` plus a color derived from
/// its lowest label.
void save_graph(const WeightedGeometricGraph& graph, const EdgePartition* labels, std::ostream& out);
void save_graph_file(const WeightedGeometricGraph& graph, const EdgePartition* labels,
                     const std::filesystem::path& path);

/// "%.9g" rendering used by every text output.
std::string format_real(double value);

/// Hex color "#rrggbb" for a filament label.
std::string filament_color(Label label);

}  // namespace filcover
