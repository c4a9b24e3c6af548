#include "filcover/gml.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "filcover/error.hpp"

namespace filcover {

namespace {

struct Token {
    enum class Kind { Key, Number, String, Open, Close, End } kind;
    std::string text;
    int line;
};

class Tokenizer {
public:
    explicit Tokenizer(std::string text) : text_(std::move(text)) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line_};
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            return {Token::Kind::Open, "[", line_};
        }
        if (c == ']') {
            ++pos_;
            return {Token::Kind::Close, "]", line_};
        }
        if (c == '"') {
            const int start_line = line_;
            std::string s;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') ++line_;
                s.push_back(text_[pos_++]);
            }
            if (pos_ >= text_.size()) throw ParseError("unterminated string", start_line);
            ++pos_;
            return {Token::Kind::String, decode_entities(s), start_line};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s.push_back(text_[pos_++]);
            }
            return {Token::Kind::Key, s, line_};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            std::string s;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '-' || d == '+' || d == '.' || d == 'e' ||
                    d == 'E') {
                    s.push_back(d);
                    ++pos_;
                } else {
                    break;
                }
            }
            return {Token::Kind::Number, s, line_};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_);
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    static std::string decode_entities(const std::string& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s.compare(i, 6, "&quot;") == 0) {
                out.push_back('"');
                i += 5;
            } else if (s.compare(i, 5, "&amp;") == 0) {
                out.push_back('&');
                i += 4;
            } else {
                out.push_back(s[i]);
            }
        }
        return out;
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

struct Value {
    enum class Kind { Number, String, List } kind = Kind::Number;
    std::string key;  // lower-cased
    std::string text;
    std::vector<Value> children;
    int line = 0;
};

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<Value> parse_list(Tokenizer& tok, bool top_level) {
    std::vector<Value> out;
    for (;;) {
        Token key = tok.next();
        if (key.kind == Token::Kind::End) {
            if (!top_level) throw ParseError("missing ']'", key.line);
            return out;
        }
        if (key.kind == Token::Kind::Close) {
            if (top_level) throw ParseError("unbalanced ']'", key.line);
            return out;
        }
        if (key.kind != Token::Kind::Key) throw ParseError("expected a key, got '" + key.text + "'", key.line);
        Token val = tok.next();
        Value v;
        v.key = lower(key.text);
        v.line = key.line;
        switch (val.kind) {
            case Token::Kind::Number:
                v.kind = Value::Kind::Number;
                v.text = val.text;
                break;
            case Token::Kind::String:
                v.kind = Value::Kind::String;
                v.text = val.text;
                break;
            case Token::Kind::Open:
                v.kind = Value::Kind::List;
                v.children = parse_list(tok, false);
                break;
            default:
                throw ParseError("missing value for key '" + key.text + "'", key.line);
        }
        out.push_back(std::move(v));
    }
}

double to_real(const Value& v) {
    if (v.kind != Value::Kind::Number) {
        throw ParseError("key '" + v.key + "' must be numeric", v.line);
    }
    double out = 0.0;
    const char* first = v.text.data();
    const char* last = first + v.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) throw ParseError("malformed number '" + v.text + "'", v.line);
    return out;
}

NodeId to_id(const Value& v) {
    const double d = to_real(v);
    if (d != std::floor(d) || std::abs(d) > 9.0e15) throw ParseError("id must be an integer", v.line);
    return static_cast<NodeId>(d);
}

const Value* find(const std::vector<Value>& list, std::string_view key) {
    for (const auto& v : list) {
        if (v.key == key) return &v;
    }
    return nullptr;
}

std::vector<Label> parse_labels(const Value& v) {
    std::vector<Label> out;
    if (v.kind == Value::Kind::Number) {
        out.push_back(static_cast<Label>(to_id(v)));
        return out;
    }
    if (v.kind != Value::Kind::String) throw ParseError("filament attribute must be a string or integer", v.line);
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        Label l = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), l);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("filament label '" + token + "' is not an integer", v.line);
        }
        out.push_back(l);
        token.clear();
    };
    for (char c : v.text) {
        if (c == ';' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

LabeledGraph build(const std::vector<Value>& top, const LoadOptions& options) {
    const Value* graph = find(top, "graph");
    if (!graph || graph->kind != Value::Kind::List) throw ParseError("no 'graph [ ... ]' block", 1);

    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    std::vector<std::optional<std::vector<Label>>> edge_labels;
    bool any_labels = false;

    for (const auto& item : graph->children) {
        if (item.key == "node") {
            if (item.kind != Value::Kind::List) throw ParseError("node must be a list", item.line);
            const Value* id = find(item.children, "id");
            if (!id) throw ValidationError("node at line " + std::to_string(item.line) + " has no id");
            NodeSpec spec;
            spec.id = to_id(*id);
            const auto* coords_src = &item.children;
            if (!find(item.children, "x")) {
                if (const Value* gfx = find(item.children, "graphics"); gfx && gfx->kind == Value::Kind::List) {
                    coords_src = &gfx->children;
                }
            }
            const Value* x = find(*coords_src, "x");
            const Value* y = find(*coords_src, "y");
            const Value* z = find(*coords_src, "z");
            if (x && y) {
                spec.coords = {to_real(*x), to_real(*y)};
                if (z) spec.coords.push_back(to_real(*z));
            } else if (x || y) {
                throw ValidationError("node " + std::to_string(spec.id) + " has an incomplete position");
            }
            nodes.push_back(std::move(spec));
        } else if (item.key == "edge") {
            if (item.kind != Value::Kind::List) throw ParseError("edge must be a list", item.line);
            const Value* s = find(item.children, "source");
            const Value* t = find(item.children, "target");
            if (!s || !t) {
                throw ValidationError("edge at line " + std::to_string(item.line) + " lacks source or target");
            }
            EdgeSpec spec;
            spec.source = to_id(*s);
            spec.target = to_id(*t);
            const Value* w = find(item.children, "weight");
            if (!w) {
                throw ValidationError("edge (" + std::to_string(spec.source) + ", " + std::to_string(spec.target) +
                                      ") at line " + std::to_string(item.line) + " has no weight attribute");
            }
            spec.weight = to_real(*w);
            edges.push_back(spec);
            if (const Value* f = find(item.children, "filament")) {
                edge_labels.emplace_back(parse_labels(*f));
                any_labels = true;
            } else {
                edge_labels.emplace_back(std::nullopt);
            }
        }
    }

    const bool has_coords = !nodes.empty() && !nodes.front().coords.empty();
    if (options.require_coordinates && !has_coords) {
        throw MissingCoordinatesError("input graph has no node coordinates");
    }

    LabeledGraph out;
    out.graph = make_graph(nodes, edges);

    if (any_labels) {
        std::vector<std::vector<Label>> labels(static_cast<std::size_t>(out.graph.edge_count()));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edge_labels[i]) continue;
            const auto a = *out.graph.index_of(edges[i].source);
            const auto b = *out.graph.index_of(edges[i].target);
            const auto e = *out.graph.find_edge(a, b);
            labels[static_cast<std::size_t>(e)] = *edge_labels[i];
        }
        out.labels = EdgePartition(std::move(labels));
    }
    return out;
}

}  // namespace

std::string format_real(double value) {
    if (value == 0.0) return "0";  // avoids "-0"
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.9g", value);
    return buf.data();
}

std::string filament_color(Label label) {
    static constexpr std::array<const char*, 20> palette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
        "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a", "#ff9896",
        "#c5b0d5", "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5"};
    const auto idx = static_cast<std::size_t>(((label % 20) + 20) % 20);
    return palette[idx];
}

LabeledGraph load_labeled_graph(std::istream& in, const LoadOptions& options) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    Tokenizer tok(std::move(text));
    auto top = parse_list(tok, true);
    return build(top, options);
}

WeightedGeometricGraph load_graph(std::istream& in, const LoadOptions& options) {
    return load_labeled_graph(in, options).graph;
}

LabeledGraph load_labeled_graph_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("graph-core", "cannot open " + path.string());
    return load_labeled_graph(in, options);
}

void save_graph(const WeightedGeometricGraph& graph, const EdgePartition* labels, std::ostream& out) {
    if (labels) labels->validate_for(graph.edge_count(), "graph-core");
    out << "graph [\n  directed 0\n";
    for (const auto& n : graph.nodes()) {
        out << "  node [\n    id " << n.id << '\n';
        if (graph.geometric()) {
            out << "    x " << format_real(n.position.x()) << '\n';
            out << "    y " << format_real(n.position.y()) << '\n';
            if (graph.dimension() == 3) out << "    z " << format_real(n.position.z()) << '\n';
        }
        out << "  ]\n";
    }
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const auto& rec = graph.edge(e);
        out << "  edge [\n    source " << graph.node(rec.source).id << "\n    target " << graph.node(rec.target).id
            << "\n    weight " << format_real(rec.weight) << '\n';
        if (labels) {
            const auto l = labels->labels(e);
            out << "    filament \"";
            for (std::size_t i = 0; i < l.size(); ++i) out << (i ? ";" : "") << l[i];
            out << "\"\n    color \"" << filament_color(l.front()) << "\"\n";
        }
        out << "  ]\n";
    }
    out << "]\n";
    if (!out) throw Error("graph-core", "write failed");
}

void save_graph_file(const WeightedGeometricGraph& graph, const EdgePartition* labels,
                     const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("graph-core", "cannot write " + path.string());
    save_graph(graph, labels, out);
}

}  // namespace filcover
