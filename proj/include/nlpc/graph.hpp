#pragma once

#include "nlpc/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nlpc {

struct Node {
    std::string id;
    std::string label;
    int cluster_id = 0;
    std::optional<Point2> fixed_position; // layout units
};

/// Undirected edge; (a,b) and (b,a) denote the same edge.
struct Edge {
    std::string source;
    std::string target;
};

/// Per-node attribute vectors. `values[i]` belongs to `graph.nodes[i]`.
struct AttributeTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;

    bool empty() const { return names.empty(); }
    std::size_t attribute_count() const { return names.size(); }
    /// Index of `name` in `names`; throws std::invalid_argument when absent.
    std::size_t index_of(std::string_view name) const;
    std::vector<double> column(std::size_t attribute) const;
};

struct MultivariateGraph {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    AttributeTable attributes;
    int cluster_count = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    /// Index of node `id`; throws std::out_of_range when absent.
    std::size_t node_index(std::string_view id) const;
};

/// Synthetic attribute patterns for the parallel-coordinates view.
struct PatternKind {
    enum class Kind { NegativeCorrelation, PositiveCorrelation, Outliers, UniformRandom };

    Kind kind = Kind::NegativeCorrelation;
    std::size_t outlier_count = 0; // only meaningful for Outliers

    static PatternKind negative_correlation() { return {Kind::NegativeCorrelation, 0}; }
    static PatternKind positive_correlation() { return {Kind::PositiveCorrelation, 0}; }
    static PatternKind outliers(std::size_t k) { return {Kind::Outliers, k}; }
    static PatternKind uniform_random() { return {Kind::UniformRandom, 0}; }

    /// Parses "negative", "positive", "uniform" or "outliers:K".
    static PatternKind parse(std::string_view text);
    std::string to_string() const;
};

/// Parses the graph JSON format (schemaVersion "1").
/// Throws ParseError on schema violations and ValidationError on invariant violations.
MultivariateGraph load_graph(std::string_view document);

/// Inverse of load_graph: `load_graph(serialize_graph(g))` reproduces g field-for-field.
std::string serialize_graph(const MultivariateGraph& graph);

/// Human-readable list of invariant violations; empty iff the graph is valid.
std::vector<std::string> validate(const MultivariateGraph& graph);

/// Seeded synthetic attribute table with values in [0, 100].
/// Attribute names are "attr_1" .. "attr_n". Throws std::invalid_argument for n < 2,
/// an empty graph, or an outlier count outside [1, N/4].
AttributeTable generate_attributes(const MultivariateGraph& graph, std::size_t attribute_count,
                                   PatternKind pattern, std::uint64_t seed);

inline constexpr double kAttributeMin = 0.0;
inline constexpr double kAttributeMax = 100.0;

} // namespace nlpc
