#pragma once

#include "nlpc/geometry.hpp"
#include "nlpc/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nlpc {

struct Viewport {
    double width = 1600.0;
    double height = 900.0;
    double margin = 50.0;

    bool valid() const { return width > 2.0 * margin && height > 2.0 * margin && margin >= 0.0; }
};

/// Categorical cluster palette, indexed by cluster id modulo its size.
inline constexpr std::array<std::string_view, 12> kClusterPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
};

std::string_view palette_color(int color_index);

inline constexpr double kDefaultDotRadius = 6.0;
inline constexpr double kDefaultLinkWidth = 1.0;
inline constexpr double kDefaultLineWidth = 1.5;

struct DotGlyph {
    std::string node_id;
    Point2 center;
    double radius = kDefaultDotRadius;
    int color_index = 0;
};

struct LinkGlyph {
    std::string source;
    std::string target;
    double stroke_width = kDefaultLinkWidth;

    /// Stable element id, "source--target".
    std::string id() const { return source + "--" + target; }
};

/// Node-link endpoint view. `dots` follows graph node order, `links` graph edge order.
struct NlScene {
    std::vector<DotGlyph> dots;
    std::vector<LinkGlyph> links;

    const DotGlyph& dot(std::string_view node_id) const;
};

struct Axis {
    std::string attribute_name;
    double x_position = 0.0;
    double y_top = 0.0;
    double y_bottom = 0.0;
    double domain_min = 0.0;
    double domain_max = 0.0;
    double opacity = 1.0;
};

struct PolylineGlyph {
    std::string node_id;
    std::vector<Point2> vertices; // one per axis
    double stroke_width = kDefaultLineWidth;
    int color_index = 0;
};

/// Parallel-coordinates endpoint view. `polylines` follows graph node order.
struct PcScene {
    std::vector<Axis> axes;
    std::vector<PolylineGlyph> polylines;
};

enum class DotSizing { Constant, DegreeProportional };

struct NlLayoutOptions {
    std::uint64_t seed = 42;
    int iterations = 300;
    DotSizing sizing = DotSizing::Constant;
    double dot_radius = kDefaultDotRadius;
};

/// Seeded force-directed layout (fixed iteration count), or an aspect-preserving
/// rescale of the given positions when every node has one. Pinned nodes keep
/// their position in mixed graphs.
NlScene compute_nl_layout(const MultivariateGraph& graph, const Viewport& viewport, const NlLayoutOptions& options = {});

/// Where the axes of a parallel-coordinates scene go.
///  - Standard: 2 axes at 0.30/0.70 of the width, otherwise equally spaced over [0.15, 0.85].
///  - AnchoredPair: axes 1-2 at 0.30/0.70 and axes 3..n equally spaced in (0.70, 0.85]
///    so that a 2-axis scene is a prefix of the n-axis scene (accordion target).
enum class AxisPlacement { Standard, AnchoredPair };

/// Throws std::invalid_argument for an empty order or an unknown attribute.
PcScene compute_pc_scene(const MultivariateGraph& graph, const std::vector<std::string>& axis_order,
                         const Viewport& viewport, AxisPlacement placement = AxisPlacement::Standard);

/// Linear value-to-pixel map, min at the bottom, clamped to the axis.
/// Throws std::invalid_argument for a non-finite value.
double attribute_to_axis_y(double value, const Axis& axis);

/// The first `count` attribute names of the graph (the default axis order).
std::vector<std::string> default_axis_order(const MultivariateGraph& graph, std::size_t count = 2);

} // namespace nlpc
