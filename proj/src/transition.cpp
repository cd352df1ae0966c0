#include "nlpc/transition.hpp"

#include "nlpc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nlpc {

std::string_view to_string(ChangeKind kind)
{
    switch (kind) {
    case ChangeKind::Shape: return "shape";
    case ChangeKind::Size: return "size";
    case ChangeKind::Pos: return "pos";
    }
    return "unknown";
}

bool TransGlyph::is_dot() const
{
    return std::all_of(vertices.begin(), vertices.end(), [&](Point2 v) { return v == vertices.front(); });
}

Point2 TransGlyph::centroid() const
{
    return midpoint(vertices.front(), vertices.back());
}

const ElementPair& ElementMapping::pair(std::string_view node_id) const
{
    for (const ElementPair& p : pairs) {
        if (p.node_id == node_id) return p;
    }
    throw std::out_of_range("no element for node '" + std::string(node_id) + "'");
}

ElementMapping map_elements(const NlScene& nl, const PcScene& pc)
{
    if (pc.axes.size() < 2) throw ConsistencyError("parallel-coordinates scene needs at least 2 axes");
    if (nl.dots.size() != pc.polylines.size()) {
        throw ConsistencyError("node-link scene has " + std::to_string(nl.dots.size()) +
                               " dots but parallel-coordinates scene has " + std::to_string(pc.polylines.size()) +
                               " polylines");
    }
    std::unordered_map<std::string, const PolylineGlyph*> lines;
    for (const PolylineGlyph& line : pc.polylines) {
        if (line.vertices.size() < 2) throw ConsistencyError("polyline '" + line.node_id + "' has fewer than 2 vertices");
        if (!lines.emplace(line.node_id, &line).second) throw ConsistencyError("duplicate polyline '" + line.node_id + "'");
    }

    ElementMapping mapping;
    for (const DotGlyph& dot : nl.dots) {
        const auto it = lines.find(dot.node_id);
        if (it == lines.end()) throw ConsistencyError("node '" + dot.node_id + "' has no polyline");
        const PolylineGlyph& line = *it->second;
        mapping.pairs.push_back({dot.node_id, dot, line.vertices[0], line.vertices[1], line.stroke_width, dot.color_index});
        lines.erase(it);
    }
    for (const LinkGlyph& link : nl.links) mapping.fading_links.push_back(link.id());
    mapping.appearing_axes = {pc.axes[0].attribute_name, pc.axes[1].attribute_name};
    return mapping;
}

TransGlyph dot_glyph(const ElementPair& pair)
{
    return {{pair.dot.center, pair.dot.center}, 2.0 * pair.dot.radius, 1.0, pair.color_index};
}

TransGlyph line_glyph(const ElementPair& pair)
{
    return {{pair.line_start, pair.line_end}, pair.line_width, 1.0, pair.color_index};
}

Point2 position_path(Point2 start, Point2 target, PathStrategy strategy, double s)
{
    switch (strategy) {
    case PathStrategy::ShortestPath: return lerp(start, target, s);
    case PathStrategy::VerticalOnly: return {start.x, lerp(start.y, target.y, s)};
    }
    throw std::invalid_argument("unknown path strategy");
}

namespace {

// Glyph anchor during the transformation. Under VerticalOnly the position stage
// moves vertically only; the horizontal offset is closed while the glyph grows.
Point2 moving_anchor(Point2 start, Point2 target, PathStrategy path, StageTimes times)
{
    Point2 p = position_path(start, target, path, times.pos);
    if (path == PathStrategy::VerticalOnly) p.x = lerp(start.x, target.x, times.size);
    return p;
}

bool all_equal(StageTimes t, double v)
{
    return t.shape == v && t.pos == v && t.size == v;
}

// Centre-relative growth shared by the geometric and oriented styles: the
// glyph spans anchor + growth * (endpoint - midpoint).
TransGlyph centred_line(const ElementPair& pair, StageTimes times, PathStrategy path, double growth)
{
    const Point2 anchor = moving_anchor(pair.dot.center, pair.line_midpoint(), path, times);
    const Point2 mid = pair.line_midpoint();
    TransGlyph g;
    g.vertices = {anchor + growth * (pair.line_start - mid), anchor + growth * (pair.line_end - mid)};
    g.stroke_width = lerp(2.0 * pair.dot.radius, pair.line_width, times.shape);
    g.color_index = pair.color_index;
    return g;
}

TransGlyph geometric_staged(const ElementPair& pair, StageTimes times, PathStrategy path)
{
    if (path == PathStrategy::ShortestPath && times.shape == times.pos && times.pos == times.size) {
        return interpolate_geometric(pair, times.shape);
    }
    return centred_line(pair, times, path, times.size);
}

StrategyGlyphs successive_unconnected(const ElementPair& pair, StageTimes times, PathStrategy path)
{
    // Move to the axis-1 endpoint while shrinking, then elongate toward axis 2.
    const Point2 anchor = moving_anchor(pair.dot.center, pair.line_start, path, times);
    TransGlyph g;
    g.vertices = {anchor, lerp(anchor, pair.line_end, times.size)};
    g.stroke_width = lerp(2.0 * pair.dot.radius, pair.line_width, std::max(times.shape, times.pos));
    g.color_index = pair.color_index;
    return {std::move(g), std::nullopt, false};
}

StrategyGlyphs simultaneous_unconnected(const ElementPair& pair, StageTimes times, PathStrategy path)
{
    const double growth = std::max(kShortSegmentFraction * times.shape, times.size);
    TransGlyph guide;
    guide.vertices = {pair.line_start, lerp(pair.line_start, pair.line_end, growth)};
    guide.stroke_width = pair.line_width;
    guide.color_index = pair.color_index;

    // The dot heads for the line midpoint, which the grown line passes through.
    const Point2 center = moving_anchor(pair.dot.center, pair.line_midpoint(), path, times);
    TransGlyph dot;
    dot.vertices = {center, center};
    dot.stroke_width = 2.0 * lerp(pair.dot.radius, 0.0, times.size);
    dot.color_index = pair.color_index;
    return {std::move(dot), std::move(guide), false};
}

} // namespace

TransGlyph interpolate_geometric(const ElementPair& pair, double t)
{
    TransGlyph g;
    g.vertices = {lerp(pair.dot.center, pair.line_start, t), lerp(pair.dot.center, pair.line_end, t)};
    g.stroke_width = lerp(2.0 * pair.dot.radius, pair.line_width, t);
    g.color_index = pair.color_index;
    return g;
}

TransGlyph interpolate_oriented(const ElementPair& pair, StageTimes times, PathStrategy path)
{
    // Shape grows a segment to kShortSegmentFraction of the final length; size
    // takes over once it exceeds that.
    const double growth = std::max(kShortSegmentFraction * times.shape, times.size);
    return centred_line(pair, times, path, growth);
}

BentArms bent_arms(const ElementPair& pair, StageTimes times, PathStrategy path, double arm_fraction)
{
    const Point2 anchor = moving_anchor(pair.dot.center, pair.line_midpoint(), path, times);
    // The middle vertex settles onto the final segment as the arms reach their targets.
    const Point2 middle = lerp(anchor, project_onto_segment(anchor, pair.line_start, pair.line_end), times.size);
    const double reach = std::max(arm_fraction * times.shape, times.size);
    return {lerp(middle, pair.line_start, reach), middle, lerp(middle, pair.line_end, reach)};
}

TransGlyph interpolate_bent(const ElementPair& pair, StageTimes times, PathStrategy path, double arm_fraction)
{
    if (!(arm_fraction > 0.0 && arm_fraction <= 0.5)) throw std::invalid_argument("arm fraction must lie in (0, 0.5]");
    const BentArms arms = bent_arms(pair, times, path, arm_fraction);
    TransGlyph g;
    // segment, not line: a folded glyph stays bent while collinear with its tips
    if (distance(arms.middle, project_onto_segment(arms.middle, arms.first_tip, arms.second_tip)) <
        kBentCollapseDistance) {
        g.vertices = {arms.first_tip, arms.second_tip};
    } else {
        g.vertices = {arms.first_tip, arms.middle, arms.second_tip};
    }
    g.stroke_width = lerp(2.0 * pair.dot.radius, pair.line_width, times.shape);
    g.color_index = pair.color_index;
    return g;
}

StrategyGlyphs evaluate_strategy(Strategy strategy, const ElementPair& pair, StageTimes times, ShapeStyle style,
                                 PathStrategy path)
{
    if (strategy != Strategy::SuccessiveUnconnected && strategy != Strategy::SimultaneousUnconnected &&
        strategy != Strategy::SimultaneousConnected) {
        throw std::invalid_argument("unknown transformation strategy");
    }
    // Both endpoints are reproduced exactly, independent of rounding in the formulas.
    if (all_equal(times, 0.0)) return {dot_glyph(pair), std::nullopt, false};
    if (all_equal(times, 1.0)) {
        if (strategy == Strategy::SimultaneousUnconnected) return {line_glyph(pair), line_glyph(pair), true};
        return {line_glyph(pair), std::nullopt, false};
    }

    switch (strategy) {
    case Strategy::SuccessiveUnconnected: return successive_unconnected(pair, times, path);
    case Strategy::SimultaneousUnconnected: return simultaneous_unconnected(pair, times, path);
    case Strategy::SimultaneousConnected:
        switch (style.kind) {
        case ShapeStyle::Kind::Geometric: return {geometric_staged(pair, times, path), std::nullopt, false};
        case ShapeStyle::Kind::OrientedLine: return {interpolate_oriented(pair, times, path), std::nullopt, false};
        case ShapeStyle::Kind::BentLine:
            return {interpolate_bent(pair, times, path, style.arm_fraction), std::nullopt, false};
        }
        throw std::invalid_argument("unknown shape style");
    }
    throw std::invalid_argument("unknown transformation strategy");
}

PcScene accordion_expand(const PcScene& pc2, const PcScene& pc_n, double s)
{
    if (pc2.axes.size() != 2) throw ConsistencyError("accordion source must have exactly 2 axes");
    if (pc_n.axes.size() < 2) throw ConsistencyError("accordion target must have at least 2 axes");
    for (std::size_t i = 0; i < 2; ++i) {
        const Axis& a = pc2.axes[i];
        const Axis& b = pc_n.axes[i];
        if (a.attribute_name != b.attribute_name) {
            throw ConsistencyError("axis " + std::to_string(i + 1) + " differs: '" + a.attribute_name + "' vs '" +
                                   b.attribute_name + "'");
        }
        if (a.x_position != b.x_position || a.y_top != b.y_top || a.y_bottom != b.y_bottom) {
            throw ConsistencyError("axis '" + a.attribute_name + "' is placed differently in the two scenes");
        }
    }
    if (pc2.polylines.size() != pc_n.polylines.size()) throw ConsistencyError("polyline counts differ");
    for (std::size_t i = 0; i < pc2.polylines.size(); ++i) {
        const PolylineGlyph& a = pc2.polylines[i];
        const PolylineGlyph& b = pc_n.polylines[i];
        if (a.node_id != b.node_id || a.vertices.size() != 2 || b.vertices.size() != pc_n.axes.size() ||
            a.vertices[0] != b.vertices[0] || a.vertices[1] != b.vertices[1]) {
            throw ConsistencyError("polyline '" + a.node_id + "' does not extend its 2-axis counterpart");
        }
    }

    PcScene out = pc_n;
    const double hinge = pc2.axes[1].x_position;
    for (std::size_t i = 2; i < out.axes.size(); ++i) {
        out.axes[i].x_position = lerp(hinge, pc_n.axes[i].x_position, s);
        out.axes[i].opacity = s;
    }
    for (std::size_t p = 0; p < out.polylines.size(); ++p) {
        auto& vertices = out.polylines[p].vertices;
        const double hinge_y = pc_n.polylines[p].vertices[1].y;
        for (std::size_t i = 2; i < vertices.size(); ++i) {
            vertices[i] = {out.axes[i].x_position, lerp(hinge_y, pc_n.polylines[p].vertices[i].y, s)};
        }
    }
    return out;
}

} // namespace nlpc
