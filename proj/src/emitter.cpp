#include "nlpc/emitter.hpp"

#include "json_detail.hpp"
#include "nlpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace nlpc {

std::string_view to_string(PrimitiveKind kind)
{
    switch (kind) {
    case PrimitiveKind::Link: return "link";
    case PrimitiveKind::Axis: return "axis";
    case PrimitiveKind::Dot: return "dot";
    case PrimitiveKind::Polyline: return "polyline";
    case PrimitiveKind::Segment: return "segment";
    case PrimitiveKind::Label: return "label";
    }
    return "unknown";
}

int layer_of(PrimitiveKind kind)
{
    switch (kind) {
    case PrimitiveKind::Link: return 0;
    case PrimitiveKind::Axis: return 1;
    case PrimitiveKind::Dot:
    case PrimitiveKind::Polyline:
    case PrimitiveKind::Segment: return 2;
    case PrimitiveKind::Label: return 3;
    }
    return 4;
}

std::string format_fixed3(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string out(buf);
    if (out == "-0.000") out = "0.000";
    return out;
}

namespace {

constexpr std::string_view kLinkColor = "#999999";
constexpr std::string_view kAxisColor = "#333333";
constexpr std::string_view kLabelColor = "#222222";
constexpr double kAxisWidth = 1.5;

void sort_primitives(std::vector<Primitive>& prims)
{
    std::stable_sort(prims.begin(), prims.end(), [](const Primitive& a, const Primitive& b) {
        const int la = layer_of(a.kind);
        const int lb = layer_of(b.kind);
        if (la != lb) return la < lb;
        if (a.element_id != b.element_id) return a.element_id < b.element_id;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
}

Primitive axis_primitive(const Axis& axis, double opacity)
{
    Primitive p;
    p.kind = PrimitiveKind::Axis;
    p.element_id = axis.attribute_name;
    p.points = {{axis.x_position, axis.y_top}, {axis.x_position, axis.y_bottom}};
    p.stroke_width = kAxisWidth;
    p.opacity = opacity;
    return p;
}

std::string short_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    std::string out(buf);
    if (out == "-0.0") out = "0.0";
    return out;
}

void append_labels(std::vector<Primitive>& out, const Axis& axis, double opacity)
{
    auto label = [&](std::string suffix, Point2 at, std::string text) {
        Primitive p;
        p.kind = PrimitiveKind::Label;
        p.element_id = axis.attribute_name + "#" + suffix;
        p.points = {at};
        p.opacity = opacity;
        p.text = std::move(text);
        out.push_back(std::move(p));
    };
    label("name", {axis.x_position, axis.y_top - 24.0}, axis.attribute_name);
    label("max", {axis.x_position, axis.y_top - 8.0}, short_number(axis.domain_max));
    label("min", {axis.x_position, axis.y_bottom + 18.0}, short_number(axis.domain_min));
}

std::vector<Primitive> link_primitives(const NlScene& nl, double opacity)
{
    std::unordered_map<std::string_view, Point2> centers;
    for (const DotGlyph& d : nl.dots) centers.emplace(d.node_id, d.center);
    std::vector<Primitive> out;
    out.reserve(nl.links.size());
    for (const LinkGlyph& link : nl.links) {
        const auto a = centers.find(link.source);
        const auto b = centers.find(link.target);
        if (a == centers.end() || b == centers.end()) throw ConsistencyError("link '" + link.id() + "' has no dot");
        Primitive p;
        p.kind = PrimitiveKind::Link;
        p.element_id = link.id();
        p.points = {a->second, b->second};
        p.stroke_width = link.stroke_width;
        p.opacity = opacity;
        out.push_back(std::move(p));
    }
    return out;
}

Primitive glyph_primitive(const TransGlyph& g, const std::string& id)
{
    Primitive p;
    p.element_id = id;
    p.opacity = g.opacity;
    p.color_index = g.color_index;
    if (g.is_dot()) {
        p.kind = PrimitiveKind::Dot;
        p.points = {g.vertices.front()};
        p.radius = 0.5 * g.stroke_width;
    } else {
        p.kind = PrimitiveKind::Polyline;
        p.points = g.vertices;
        p.stroke_width = g.stroke_width;
    }
    return p;
}

} // namespace

Frame render_nl_scene(const NlScene& nl)
{
    Frame f;
    f.primitives = link_primitives(nl, 1.0);
    for (const DotGlyph& d : nl.dots) {
        Primitive p;
        p.kind = PrimitiveKind::Dot;
        p.element_id = d.node_id;
        p.points = {d.center};
        p.radius = d.radius;
        p.color_index = d.color_index;
        f.primitives.push_back(std::move(p));
    }
    sort_primitives(f.primitives);
    return f;
}

Frame render_pc_scene(const PcScene& pc)
{
    Frame f;
    for (const Axis& axis : pc.axes) {
        if (axis.opacity <= 0.0) continue;
        f.primitives.push_back(axis_primitive(axis, axis.opacity));
        append_labels(f.primitives, axis, axis.opacity);
    }
    for (const PolylineGlyph& line : pc.polylines) {
        Primitive p;
        p.kind = PrimitiveKind::Polyline;
        p.element_id = line.node_id;
        p.points = line.vertices;
        p.stroke_width = line.stroke_width;
        p.color_index = line.color_index;
        f.primitives.push_back(std::move(p));
    }
    sort_primitives(f.primitives);
    return f;
}

Frame render_frame(const TransitionInputs& in, double t)
{
    if (in.mapping.pairs.size() != in.timeline.tracks.size()) {
        throw ConsistencyError("timeline has " + std::to_string(in.timeline.tracks.size()) + " tracks for " +
                               std::to_string(in.mapping.pairs.size()) + " elements");
    }
    if (in.pc.axes.size() < 2) throw ConsistencyError("parallel-coordinates scene needs at least 2 axes");
    const TimelineSample s = sample(in.timeline, t);

    Frame f;
    f.timestamp = s.time;
    if (s.link_opacity > 0.0) f.primitives = link_primitives(in.nl, s.link_opacity);
    for (std::size_t i = 0; i < 2; ++i) {
        const Axis& axis = in.pc.axes[i];
        if (s.axis_opacity > 0.0) f.primitives.push_back(axis_primitive(axis, s.axis_opacity));
        if (s.label_opacity > 0.0) append_labels(f.primitives, axis, s.label_opacity);
    }
    for (std::size_t i = 0; i < in.mapping.pairs.size(); ++i) {
        const ElementPair& pair = in.mapping.pairs[i];
        if (in.timeline.tracks[i].node_id != pair.node_id) {
            throw ConsistencyError("timeline track " + std::to_string(i) + " is not element '" + pair.node_id + "'");
        }
        const StageTimes progress = geometry_progress(in.timeline, s.stage_times[i]);
        const StrategyGlyphs g = evaluate_strategy(in.spec.strategy, pair, progress, in.spec.shape_style,
                                                   in.spec.path_strategy);
        f.primitives.push_back(glyph_primitive(g.glyph, pair.node_id));
        if (g.guide && !g.merged && !g.guide->is_dot()) {
            Primitive guide = glyph_primitive(*g.guide, pair.node_id);
            guide.kind = PrimitiveKind::Segment;
            f.primitives.push_back(std::move(guide));
        }
    }
    sort_primitives(f.primitives);
    return f;
}

KeyframeDocument emit_keyframes(const TransitionInputs& inputs, const Viewport& viewport, double fps)
{
    if (!(fps > 0.0) || !std::isfinite(fps)) throw std::invalid_argument("fps must be a positive number");
    KeyframeDocument doc;
    doc.spec = inputs.spec;
    doc.viewport = viewport;
    doc.fps = fps;
    doc.total_duration = inputs.timeline.total_duration;
    const auto intervals = static_cast<std::size_t>(std::llround(doc.total_duration * fps));
    doc.frames.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = i == intervals ? doc.total_duration : static_cast<double>(i) / fps;
        doc.frames.push_back(render_frame(inputs, t));
        doc.frames.back().timestamp = t;
    }
    return doc;
}

namespace {

void append_json_string(std::string& out, const std::string& s)
{
    out += nlohmann::json(s).dump();
}

void append_point(std::string& out, Point2 p)
{
    out += '[';
    out += format_fixed3(p.x);
    out += ',';
    out += format_fixed3(p.y);
    out += ']';
}

void append_primitive(std::string& out, const Primitive& p)
{
    out += "{\"kind\":\"";
    out += to_string(p.kind);
    out += "\",\"id\":";
    append_json_string(out, p.element_id);
    out += ",\"points\":[";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        if (i) out += ',';
        append_point(out, p.points[i]);
    }
    out += "],\"strokeWidth\":" + format_fixed3(p.stroke_width);
    out += ",\"radius\":" + format_fixed3(p.radius);
    out += ",\"opacity\":" + format_fixed3(p.opacity);
    out += ",\"color\":" + std::to_string(p.color_index);
    if (p.kind == PrimitiveKind::Label) {
        out += ",\"text\":";
        append_json_string(out, p.text);
    }
    out += '}';
}

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string color_of(const Primitive& p)
{
    if (p.color_index >= 0) return std::string(palette_color(p.color_index));
    switch (p.kind) {
    case PrimitiveKind::Link: return std::string(kLinkColor);
    case PrimitiveKind::Axis: return std::string(kAxisColor);
    default: return std::string(kLabelColor);
    }
}

} // namespace

std::string serialize_keyframes(const KeyframeDocument& doc)
{
    std::string out;
    out += "{\"schemaVersion\":\"1\",\n\"spec\":";
    out += detail::spec_json(doc.spec).dump();
    out += ",\n\"viewport\":{\"width\":" + format_fixed3(doc.viewport.width) +
           ",\"height\":" + format_fixed3(doc.viewport.height) + ",\"margin\":" + format_fixed3(doc.viewport.margin) +
           "},\n\"palette\":[";
    for (std::size_t i = 0; i < kClusterPalette.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += kClusterPalette[i];
        out += '"';
    }
    out += "],\n\"fps\":" + format_fixed3(doc.fps);
    out += ",\n\"totalDuration\":" + format_fixed3(doc.total_duration);
    out += ",\n\"frames\":[\n";
    for (std::size_t f = 0; f < doc.frames.size(); ++f) {
        const Frame& frame = doc.frames[f];
        out += "{\"t\":" + format_fixed3(frame.timestamp) + ",\"primitives\":[";
        for (std::size_t i = 0; i < frame.primitives.size(); ++i) {
            if (i) out += ',';
            append_primitive(out, frame.primitives[i]);
        }
        out += "]}";
        out += f + 1 < doc.frames.size() ? ",\n" : "\n";
    }
    out += "]}\n";
    return out;
}

std::string emit_svg(const Frame& frame, const Viewport& viewport)
{
    const std::string w = format_fixed3(viewport.width);
    const std::string h = format_fixed3(viewport.height);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
    for (const Primitive& p : frame.primitives) {
        const std::string color = color_of(p);
        const std::string opacity = format_fixed3(p.opacity);
        switch (p.kind) {
        case PrimitiveKind::Dot:
            out += "<circle cx=\"" + format_fixed3(p.points[0].x) + "\" cy=\"" + format_fixed3(p.points[0].y) +
                   "\" r=\"" + format_fixed3(p.radius) + "\" fill=\"" + color + "\" fill-opacity=\"" + opacity +
                   "\"/>\n";
            break;
        case PrimitiveKind::Link:
        case PrimitiveKind::Axis:
            out += "<line x1=\"" + format_fixed3(p.points[0].x) + "\" y1=\"" + format_fixed3(p.points[0].y) +
                   "\" x2=\"" + format_fixed3(p.points[1].x) + "\" y2=\"" + format_fixed3(p.points[1].y) +
                   "\" stroke=\"" + color + "\" stroke-width=\"" + format_fixed3(p.stroke_width) +
                   "\" stroke-opacity=\"" + opacity + "\"/>\n";
            break;
        case PrimitiveKind::Polyline:
        case PrimitiveKind::Segment: {
            std::string pts;
            for (std::size_t i = 0; i < p.points.size(); ++i) {
                if (i) pts += ' ';
                pts += format_fixed3(p.points[i].x) + "," + format_fixed3(p.points[i].y);
            }
            out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                   format_fixed3(p.stroke_width) + "\" stroke-opacity=\"" + opacity +
                   "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
            break;
        }
        case PrimitiveKind::Label:
            out += "<text x=\"" + format_fixed3(p.points[0].x) + "\" y=\"" + format_fixed3(p.points[0].y) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" fill=\"" + color +
                   "\" fill-opacity=\"" + opacity + "\">" + xml_escape(p.text) + "</text>\n";
            break;
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace nlpc
