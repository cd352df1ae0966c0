#pragma once

#include "nlpc/layout.hpp"
#include "nlpc/timeline.hpp"
#include "nlpc/transition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nlpc {

/// Kinds in bottom-to-top layer order: links, axes, glyphs (dot/polyline/segment), labels.
enum class PrimitiveKind { Link, Axis, Dot, Polyline, Segment, Label };

std::string_view to_string(PrimitiveKind kind);
int layer_of(PrimitiveKind kind);

/// Dots use points[0] and radius; every other kind uses points and stroke_width.
/// Segment marks strategy (b)'s guide line. color_index < 0 means a neutral colour.
struct Primitive {
    PrimitiveKind kind = PrimitiveKind::Dot;
    std::string element_id;
    std::vector<Point2> points;
    double stroke_width = 0.0;
    double radius = 0.0;
    double opacity = 1.0;
    int color_index = -1;
    std::string text; // labels only
};

struct Frame {
    double timestamp = 0.0;
    std::vector<Primitive> primitives; // sorted by (layer, element id, kind)
};

/// Everything needed to evaluate a compiled transition. `pc` is the 2-axis scene.
struct TransitionInputs {
    const MultivariateGraph& graph;
    const NlScene& nl;
    const PcScene& pc;
    const ElementMapping& mapping;
    const Timeline& timeline;
    const TransitionSpec& spec;
};

/// Standalone renders of the endpoint views.
Frame render_nl_scene(const NlScene& nl);
Frame render_pc_scene(const PcScene& pc);

/// Frame of the transition at time t (clamped into the timeline).
/// Throws ConsistencyError when the mapping and timeline do not match.
Frame render_frame(const TransitionInputs& inputs, double t);

struct KeyframeDocument {
    TransitionSpec spec;
    Viewport viewport;
    double fps = 50.0;
    double total_duration = 0.0;
    std::vector<Frame> frames;
};

/// round(total * fps) + 1 uniformly spaced frames; the last one sits exactly at
/// the total duration. Throws std::invalid_argument unless fps > 0.
KeyframeDocument emit_keyframes(const TransitionInputs& inputs, const Viewport& viewport, double fps);

/// Byte-stable JSON: fixed field order, 3 fractional digits, one frame per line.
std::string serialize_keyframes(const KeyframeDocument& doc);

/// SVG 1.1 document with one element per primitive.
std::string emit_svg(const Frame& frame, const Viewport& viewport);

/// "%.3f" without negative zero.
std::string format_fixed3(double value);

} // namespace nlpc
