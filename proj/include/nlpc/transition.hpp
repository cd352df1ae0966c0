#pragma once

#include "nlpc/geometry.hpp"
#include "nlpc/layout.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlpc {

/// The three perceivable changes while a dot becomes a line.
enum class ChangeKind { Shape, Size, Pos };

std::string_view to_string(ChangeKind kind);

struct ShapeStyle {
    enum class Kind { Geometric, OrientedLine, BentLine };

    Kind kind = Kind::Geometric;
    double arm_fraction = 0.15; // BentLine only, in (0, 0.5]

    static ShapeStyle geometric() { return {Kind::Geometric, 0.15}; }
    static ShapeStyle oriented_line() { return {Kind::OrientedLine, 0.15}; }
    static ShapeStyle bent_line(double arm_fraction = 0.15) { return {Kind::BentLine, arm_fraction}; }

    friend bool operator==(const ShapeStyle&, const ShapeStyle&) = default;
};

enum class PathStrategy { VerticalOnly, ShortestPath };

/// (a) successive/unconnected, (b) simultaneous/unconnected, (c) simultaneous/connected.
enum class Strategy { SuccessiveUnconnected, SimultaneousUnconnected, SimultaneousConnected };

/// Length of the oriented short segment relative to the final line length.
inline constexpr double kShortSegmentFraction = 0.15;
/// A bent glyph drops its middle vertex when it is closer than this to the chord segment.
inline constexpr double kBentCollapseDistance = 0.25;

/// Intermediate primitive. Two vertices for lines and dots (a dot has coincident
/// vertices and stroke width 2r), three while a bent line is visibly bent.
struct TransGlyph {
    std::vector<Point2> vertices;
    double stroke_width = 0.0;
    double opacity = 1.0;
    int color_index = 0;

    bool is_dot() const;
    /// Midpoint of the first and last vertex.
    Point2 centroid() const;
};

/// One node's endpoints: its NL dot and its 2-axis PC line.
struct ElementPair {
    std::string node_id;
    DotGlyph dot;
    Point2 line_start; // on axis 1
    Point2 line_end;   // on axis 2
    double line_width = kDefaultLineWidth;
    int color_index = 0;

    Point2 line_midpoint() const { return midpoint(line_start, line_end); }
};

/// dots -> lines, links -> nothing, nothing -> axes.
struct ElementMapping {
    std::vector<ElementPair> pairs;          // NL dot order
    std::vector<std::string> fading_links;   // link ids
    std::vector<std::string> appearing_axes; // attribute names of axes 1-2

    const ElementPair& pair(std::string_view node_id) const;
};

/// Normalized progress of each change kind for one element, each in [0, 1].
struct StageTimes {
    double shape = 0.0;
    double pos = 0.0;
    double size = 0.0;

    static StageTimes uniform(double s) { return {s, s, s}; }
    friend bool operator==(const StageTimes&, const StageTimes&) = default;
};

/// Output of a strategy. `guide` is strategy (b)'s line emanating from axis 1;
/// once every stage is complete the dot has merged into it (`merged`).
struct StrategyGlyphs {
    TransGlyph glyph;
    std::optional<TransGlyph> guide;
    bool merged = false;
};

/// Uses axes 1-2 of `pc`. Throws ConsistencyError when the node sets differ or pc has fewer than 2 axes.
ElementMapping map_elements(const NlScene& nl, const PcScene& pc);

TransGlyph dot_glyph(const ElementPair& pair);
TransGlyph line_glyph(const ElementPair& pair);

/// Plain dot-to-line interpolation: both endpoints and the width move linearly in t.
TransGlyph interpolate_geometric(const ElementPair& pair, double t);

/// A short segment already oriented like the final line, moved along `path`,
/// then grown symmetrically to full length.
TransGlyph interpolate_oriented(const ElementPair& pair, StageTimes times, PathStrategy path);

/// Uncollapsed bent-line geometry: {tip on axis-1 side, middle vertex, tip on axis-2 side}.
/// Each tip lies on the segment from the middle vertex to its final endpoint.
struct BentArms {
    Point2 first_tip;
    Point2 middle;
    Point2 second_tip;
};

BentArms bent_arms(const ElementPair& pair, StageTimes times, PathStrategy path, double arm_fraction);

/// Bent line whose arms always point at the final endpoints.
TransGlyph interpolate_bent(const ElementPair& pair, StageTimes times, PathStrategy path, double arm_fraction);

/// ShortestPath moves on the straight segment; VerticalOnly keeps start.x.
Point2 position_path(Point2 start, Point2 target, PathStrategy strategy, double s);

/// Evaluates one element under a transformation strategy. Shape styles apply to
/// strategy (c); (a) and (b) have their own fixed glyph shapes.
StrategyGlyphs evaluate_strategy(Strategy strategy, const ElementPair& pair, StageTimes times, ShapeStyle style,
                                 PathStrategy path);

/// Accordion expansion of a 2-axis scene into `pc_n` (whose axes 1-2 must coincide
/// with pc2's). Emerging axes slide out from axis 2 and fade in with s.
/// Throws ConsistencyError on mismatched axes or polylines.
PcScene accordion_expand(const PcScene& pc2, const PcScene& pc_n, double s);

} // namespace nlpc
