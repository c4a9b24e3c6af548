#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace filcover {

// Every library error names the module that raised it so the CLI can
// report "error [module]: message" and map the category to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("graph-core", what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::string module = "graph-core")
        : Error(std::move(module), what) {}
};

class MissingCoordinatesError : public Error {
public:
    explicit MissingCoordinatesError(const std::string& what, std::string module = "graph-core")
        : Error(std::move(module), what) {}
};

class DegenerateGeometryError : public Error {
public:
    explicit DegenerateGeometryError(const std::string& what, std::string module = "roughness")
        : Error(std::move(module), what) {}
};

class PoolExplosionError : public Error {
public:
    explicit PoolExplosionError(const std::string& what) : Error("path-pool", what) {}
};

class GraphMismatchError : public Error {
public:
    explicit GraphMismatchError(const std::string& what, std::string module = "path-pool")
        : Error(std::move(module), what) {}
};

class InfeasibleCoverError : public Error {
public:
    InfeasibleCoverError(const std::string& what, std::vector<int> edges)
        : Error("cover-solver", what), edges_(std::move(edges)) {}

    /// Edges that no admissible path selection can cover.
    const std::vector<int>& edges() const noexcept { return edges_; }

private:
    std::vector<int> edges_;
};

class NodeLimitError : public Error {
public:
    NodeLimitError(const std::string& what, double incumbent, double lower_bound)
        : Error("cover-solver", what), incumbent_(incumbent), lower_bound_(lower_bound) {}

    double incumbent() const noexcept { return incumbent_; }
    double lower_bound() const noexcept { return lower_bound_; }
    double gap() const noexcept { return incumbent_ - lower_bound_; }

private:
    double incumbent_;
    double lower_bound_;
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, std::string module = "cover-solver")
        : Error(std::move(module), what) {}
};

class NotATreeError : public Error {
public:
    explicit NotATreeError(const std::string& what) : Error("tree-solver", what) {}
};

}  // namespace filcover
