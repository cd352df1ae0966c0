#include "nlpc/layout.hpp"

#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlpc {

std::string_view palette_color(int color_index)
{
    const auto n = static_cast<int>(kClusterPalette.size());
    return kClusterPalette[static_cast<std::size_t>(((color_index % n) + n) % n)];
}

const DotGlyph& NlScene::dot(std::string_view node_id) const
{
    for (const DotGlyph& d : dots) {
        if (d.node_id == node_id) return d;
    }
    throw std::out_of_range("no dot for node '" + std::string(node_id) + "'");
}

namespace {

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point2 p)
    {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
};

// Aspect-preserving affine map of `box` onto the rectangle [x0,x1] x [y0,y1], centred.
struct Fit {
    double scale = 0.0;
    Point2 source_center;
    Point2 target_center;

    Fit(const Box& box, double x0, double y0, double x1, double y1)
    {
        const double sx = box.width() > 0.0 ? (x1 - x0) / box.width() : std::numeric_limits<double>::infinity();
        const double sy = box.height() > 0.0 ? (y1 - y0) / box.height() : std::numeric_limits<double>::infinity();
        scale = std::min(sx, sy);
        if (!std::isfinite(scale)) scale = 0.0;
        source_center = {0.5 * (box.min_x + box.max_x), 0.5 * (box.min_y + box.max_y)};
        target_center = {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
    }

    Point2 operator()(Point2 p) const
    {
        return {target_center.x + scale * (p.x - source_center.x), target_center.y + scale * (p.y - source_center.y)};
    }
};

std::vector<Point2> force_directed(const MultivariateGraph& graph, const NlLayoutOptions& options)
{
    const std::size_t n = graph.node_count();
    std::vector<Point2> pos(n);
    std::vector<bool> pinned(n, false);

    // Pinned positions are normalised into the unit square the free nodes live in.
    Box fixed_box;
    for (const Node& node : graph.nodes) {
        if (node.fixed_position) fixed_box.add(*node.fixed_position);
    }
    const Fit to_unit(fixed_box, 0.0, 0.0, 1.0, 1.0);

    detail::Rng rng(options.seed);
    for (std::size_t i = 0; i < n; ++i) {
        if (graph.nodes[i].fixed_position) {
            pos[i] = to_unit(*graph.nodes[i].fixed_position);
            pinned[i] = true;
        } else {
            pos[i] = {rng.uniform01(), rng.uniform01()};
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(graph.edge_count());
    for (const Edge& e : graph.edges) edges.emplace_back(graph.node_index(e.source), graph.node_index(e.target));

    const double k = std::sqrt(1.0 / static_cast<double>(std::max<std::size_t>(n, 1)));
    const double k2 = k * k;
    constexpr double kStartTemperature = 0.1;
    std::vector<Point2> disp(n);
    for (int it = 0; it < options.iterations; ++it) {
        std::fill(disp.begin(), disp.end(), Point2{});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Point2 delta = pos[i] - pos[j];
                double d = length(delta);
                if (d < 1e-9) {
                    // Coincident nodes: separate along a direction fixed by their indices.
                    const double angle = static_cast<double>(i * 31 + j * 17);
                    delta = {1e-9 * std::cos(angle), 1e-9 * std::sin(angle)};
                    d = 1e-9;
                }
                const Point2 f = (k2 / (d * d)) * delta;
                disp[i] = disp[i] + f;
                disp[j] = disp[j] - f;
            }
        }
        for (const auto& [s, t] : edges) {
            const Point2 delta = pos[s] - pos[t];
            const double d = length(delta);
            const Point2 f = (d / k) * delta;
            disp[s] = disp[s] - f;
            disp[t] = disp[t] + f;
        }
        const double temperature =
            kStartTemperature * (1.0 - static_cast<double>(it) / static_cast<double>(options.iterations));
        for (std::size_t i = 0; i < n; ++i) {
            if (pinned[i]) continue;
            const double d = length(disp[i]);
            if (d > 0.0) pos[i] = pos[i] + (std::min(d, temperature) / d) * disp[i];
            pos[i].x = std::clamp(pos[i].x, 0.0, 1.0);
            pos[i].y = std::clamp(pos[i].y, 0.0, 1.0);
        }
    }
    return pos;
}

} // namespace

NlScene compute_nl_layout(const MultivariateGraph& graph, const Viewport& viewport, const NlLayoutOptions& options)
{
    if (!viewport.valid()) throw std::invalid_argument("viewport must be larger than twice its margin");
    const bool all_fixed = std::all_of(graph.nodes.begin(), graph.nodes.end(),
                                       [](const Node& node) { return node.fixed_position.has_value(); });
    std::vector<Point2> pos;
    if (all_fixed) {
        for (const Node& node : graph.nodes) pos.push_back(*node.fixed_position);
    } else {
        pos = force_directed(graph, options);
    }

    Box box;
    for (Point2 p : pos) box.add(p);
    const Fit fit(box, viewport.margin, viewport.margin, viewport.width - viewport.margin,
                  viewport.height - viewport.margin);

    std::vector<std::size_t> degree(graph.node_count(), 0);
    for (const Edge& e : graph.edges) {
        ++degree[graph.node_index(e.source)];
        ++degree[graph.node_index(e.target)];
    }
    const std::size_t max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

    NlScene scene;
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        DotGlyph dot;
        dot.node_id = graph.nodes[i].id;
        dot.center = fit(pos[i]);
        dot.color_index = graph.nodes[i].cluster_id;
        dot.radius = options.dot_radius;
        if (options.sizing == DotSizing::DegreeProportional && max_degree > 0) {
            dot.radius = options.dot_radius *
                         (0.5 + static_cast<double>(degree[i]) / static_cast<double>(max_degree));
        }
        scene.dots.push_back(std::move(dot));
    }
    for (const Edge& e : graph.edges) scene.links.push_back({e.source, e.target, kDefaultLinkWidth});
    return scene;
}

double attribute_to_axis_y(double value, const Axis& axis)
{
    if (!std::isfinite(value)) throw std::invalid_argument("attribute value must be finite");
    if (axis.domain_max == axis.domain_min) return 0.5 * (axis.y_top + axis.y_bottom);
    const double y = axis.y_bottom - (value - axis.domain_min) / (axis.domain_max - axis.domain_min) *
                                         (axis.y_bottom - axis.y_top);
    return std::clamp(y, axis.y_top, axis.y_bottom);
}

std::vector<std::string> default_axis_order(const MultivariateGraph& graph, std::size_t count)
{
    if (graph.attributes.attribute_count() < count) {
        throw std::invalid_argument("graph has " + std::to_string(graph.attributes.attribute_count()) +
                                    " attributes, " + std::to_string(count) + " requested");
    }
    return {graph.attributes.names.begin(), graph.attributes.names.begin() + static_cast<std::ptrdiff_t>(count)};
}

PcScene compute_pc_scene(const MultivariateGraph& graph, const std::vector<std::string>& axis_order,
                         const Viewport& viewport, AxisPlacement placement)
{
    if (axis_order.empty()) throw std::invalid_argument("axis order must not be empty");
    if (!viewport.valid()) throw std::invalid_argument("viewport must be larger than twice its margin");
    const std::size_t n = axis_order.size();
    const double w = viewport.width;

    auto x_of = [&](std::size_t i) {
        if (n == 1) return 0.5 * w;
        if (n == 2) return i == 0 ? 0.30 * w : 0.70 * w;
        if (placement == AxisPlacement::AnchoredPair) {
            if (i < 2) return i == 0 ? 0.30 * w : 0.70 * w;
            return 0.70 * w + static_cast<double>(i - 1) * 0.15 * w / static_cast<double>(n - 2);
        }
        return 0.15 * w + static_cast<double>(i) * 0.70 * w / static_cast<double>(n - 1);
    };

    PcScene scene;
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t col = graph.attributes.index_of(axis_order[i]);
        columns.push_back(col);
        Axis axis;
        axis.attribute_name = axis_order[i];
        axis.x_position = x_of(i);
        axis.y_top = viewport.margin;
        axis.y_bottom = viewport.height - viewport.margin;
        const auto values = graph.attributes.column(col);
        if (!values.empty()) {
            const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
            axis.domain_min = *lo;
            axis.domain_max = *hi;
        }
        scene.axes.push_back(std::move(axis));
    }

    for (std::size_t node = 0; node < graph.node_count(); ++node) {
        PolylineGlyph line;
        line.node_id = graph.nodes[node].id;
        line.color_index = graph.nodes[node].cluster_id;
        for (std::size_t i = 0; i < n; ++i) {
            const Axis& axis = scene.axes[i];
            line.vertices.push_back({axis.x_position, attribute_to_axis_y(graph.attributes.values.at(node)[columns[i]], axis)});
        }
        scene.polylines.push_back(std::move(line));
    }
    return scene;
}

} // namespace nlpc
