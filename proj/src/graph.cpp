#include "nlpc/graph.hpp"

#include "nlpc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace nlpc {

using Json = nlohmann::ordered_json;

std::size_t AttributeTable::index_of(std::string_view name) const
{
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown attribute '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<double> AttributeTable::column(std::size_t attribute) const
{
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& row : values) out.push_back(row.at(attribute));
    return out;
}

std::size_t MultivariateGraph::node_index(std::string_view id) const
{
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == id) return i;
    }
    throw std::out_of_range("unknown node id '" + std::string(id) + "'");
}

PatternKind PatternKind::parse(std::string_view text)
{
    if (text == "negative") return negative_correlation();
    if (text == "positive") return positive_correlation();
    if (text == "uniform") return uniform_random();
    constexpr std::string_view prefix = "outliers:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string count(text.substr(prefix.size()));
        std::size_t used = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(count, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != count.size()) {
            throw std::invalid_argument("bad outlier count in pattern '" + std::string(text) + "'");
        }
        return outliers(k);
    }
    throw std::invalid_argument("unknown pattern '" + std::string(text) +
                                "' (expected negative, positive, uniform or outliers:K)");
}

std::string PatternKind::to_string() const
{
    switch (kind) {
    case Kind::NegativeCorrelation: return "negative";
    case Kind::PositiveCorrelation: return "positive";
    case Kind::UniformRandom: return "uniform";
    case Kind::Outliers: return "outliers:" + std::to_string(outlier_count);
    }
    return "unknown";
}

namespace {

std::string pointer(const std::string& base, std::string_view key)
{
    return base + "/" + std::string(key);
}

std::string pointer(const std::string& base, std::size_t index)
{
    return base + "/" + std::to_string(index);
}

const Json& require(const Json& object, std::string_view key, const std::string& path)
{
    const auto it = object.find(std::string(key));
    if (it == object.end()) throw ParseError(pointer(path, key), "missing required field");
    return *it;
}

std::string require_string(const Json& object, std::string_view key, const std::string& path)
{
    const Json& v = require(object, key, path);
    if (!v.is_string()) throw ParseError(pointer(path, key), "expected a string");
    return v.get<std::string>();
}

double require_number(const Json& v, const std::string& path)
{
    if (!v.is_number()) throw ParseError(path, "expected a number");
    return v.get<double>();
}

long long require_integer(const Json& object, std::string_view key, const std::string& path)
{
    const Json& v = require(object, key, path);
    if (!v.is_number_integer()) throw ParseError(pointer(path, key), "expected an integer");
    return v.get<long long>();
}

std::string edge_key(const std::string& a, const std::string& b)
{
    return a < b ? a + '\x1f' + b : b + '\x1f' + a;
}

} // namespace

MultivariateGraph load_graph(std::string_view document)
{
    Json root;
    try {
        root = Json::parse(document.begin(), document.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("", "top-level value must be an object");

    const std::string version = require_string(root, "schemaVersion", "");
    if (version != "1") throw ParseError("/schemaVersion", "unsupported schema version '" + version + "'");

    MultivariateGraph graph;
    graph.cluster_count = static_cast<int>(require_integer(root, "clusterCount", ""));

    const Json& nodes = require(root, "nodes", "");
    if (!nodes.is_array()) throw ParseError("/nodes", "expected an array");
    bool any_attrs = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string path = pointer("/nodes", i);
        const Json& n = nodes[i];
        if (!n.is_object()) throw ParseError(path, "expected an object");
        Node node;
        node.id = require_string(n, "id", path);
        node.label = require_string(n, "label", path);
        node.cluster_id = static_cast<int>(require_integer(n, "cluster", path));
        const bool has_x = n.contains("x");
        const bool has_y = n.contains("y");
        if (has_x != has_y) throw ParseError(pointer(path, has_x ? "y" : "x"), "x and y must be given together");
        if (has_x) {
            node.fixed_position = Point2{require_number(n["x"], pointer(path, "x")),
                                         require_number(n["y"], pointer(path, "y"))};
        }
        if (n.contains("attrs")) {
            const Json& attrs = n["attrs"];
            const std::string apath = pointer(path, "attrs");
            if (!attrs.is_object()) throw ParseError(apath, "expected an object");
            if (i == 0) {
                any_attrs = true;
                for (const auto& [name, value] : attrs.items()) graph.attributes.names.push_back(name);
            } else if (!any_attrs) {
                throw ParseError(apath, "attrs must be given for every node or for none");
            }
            if (attrs.size() != graph.attributes.names.size()) {
                throw ParseError(apath, "attribute names differ from the first node");
            }
            std::vector<double> row;
            row.reserve(graph.attributes.names.size());
            for (const auto& name : graph.attributes.names) {
                const auto it = attrs.find(name);
                if (it == attrs.end()) throw ParseError(pointer(apath, name), "missing attribute");
                row.push_back(require_number(*it, pointer(apath, name)));
            }
            graph.attributes.values.push_back(std::move(row));
        } else if (any_attrs) {
            throw ParseError(pointer(path, "attrs"), "attrs must be given for every node or for none");
        }
        graph.nodes.push_back(std::move(node));
    }

    const Json& edges = require(root, "edges", "");
    if (!edges.is_array()) throw ParseError("/edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = pointer("/edges", i);
        if (!edges[i].is_object()) throw ParseError(path, "expected an object");
        graph.edges.push_back({require_string(edges[i], "source", path), require_string(edges[i], "target", path)});
    }

    if (const auto violations = validate(graph); !violations.empty()) {
        std::string message = violations.front();
        for (std::size_t i = 1; i < violations.size(); ++i) message += "; " + violations[i];
        throw ValidationError(message);
    }
    return graph;
}

std::string serialize_graph(const MultivariateGraph& graph)
{
    Json root = Json::object();
    root["schemaVersion"] = "1";
    root["clusterCount"] = graph.cluster_count;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const Node& node = graph.nodes[i];
        Json n = Json::object();
        n["id"] = node.id;
        n["label"] = node.label;
        n["cluster"] = node.cluster_id;
        if (node.fixed_position) {
            n["x"] = node.fixed_position->x;
            n["y"] = node.fixed_position->y;
        }
        if (!graph.attributes.empty()) {
            Json attrs = Json::object();
            for (std::size_t a = 0; a < graph.attributes.names.size(); ++a) {
                attrs[graph.attributes.names[a]] = graph.attributes.values.at(i).at(a);
            }
            n["attrs"] = std::move(attrs);
        }
        nodes.push_back(std::move(n));
    }
    root["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const Edge& e : graph.edges) edges.push_back(Json{{"source", e.source}, {"target", e.target}});
    root["edges"] = std::move(edges);
    return root.dump(1) + "\n";
}

std::vector<std::string> validate(const MultivariateGraph& graph)
{
    std::vector<std::string> out;
    if (graph.cluster_count < 0) out.push_back("clusterCount must be non-negative");

    std::unordered_set<std::string> ids;
    for (const Node& n : graph.nodes) {
        if (!ids.insert(n.id).second) out.push_back("duplicate node id '" + n.id + "'");
        if (n.cluster_id < 0 || n.cluster_id >= graph.cluster_count) {
            out.push_back("node '" + n.id + "' has cluster " + std::to_string(n.cluster_id) + " outside [0, " +
                          std::to_string(graph.cluster_count) + ")");
        }
        if (n.fixed_position && !is_finite(*n.fixed_position)) {
            out.push_back("node '" + n.id + "' has a non-finite position");
        }
    }

    std::set<std::string> seen;
    for (const Edge& e : graph.edges) {
        for (const std::string* end : {&e.source, &e.target}) {
            if (!ids.contains(*end)) out.push_back("edge references unknown node id '" + *end + "'");
        }
        if (e.source == e.target) out.push_back("self-loop on node '" + e.source + "'");
        else if (!seen.insert(edge_key(e.source, e.target)).second) {
            out.push_back("duplicate edge '" + e.source + "'-'" + e.target + "'");
        }
    }

    const AttributeTable& attrs = graph.attributes;
    if (!attrs.empty()) {
        if (attrs.names.size() < 2) out.push_back("attribute table needs at least 2 attributes");
        std::set<std::string> names(attrs.names.begin(), attrs.names.end());
        if (names.size() != attrs.names.size()) out.push_back("duplicate attribute name");
        if (attrs.values.size() != graph.nodes.size()) {
            out.push_back("attribute table has " + std::to_string(attrs.values.size()) + " rows for " +
                          std::to_string(graph.nodes.size()) + " nodes");
        }
        for (std::size_t i = 0; i < attrs.values.size(); ++i) {
            const auto& row = attrs.values[i];
            if (row.size() != attrs.names.size()) {
                out.push_back("attribute row " + std::to_string(i) + " has the wrong length");
                continue;
            }
            if (!std::all_of(row.begin(), row.end(), [](double v) { return std::isfinite(v); })) {
                out.push_back("attribute row " + std::to_string(i) + " has a non-finite value");
            }
        }
    }
    return out;
}

} // namespace nlpc
