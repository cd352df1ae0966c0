#include "nlpc/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nlpc {

std::vector<double> sample_times(double total_duration, double dt)
{
    if (!(dt > 0.0)) throw std::invalid_argument("sampling step must be positive");
    std::vector<double> out;
    for (std::size_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * dt;
        if (t >= total_duration - 1e-12) break;
        out.push_back(t);
    }
    out.push_back(total_duration);
    return out;
}

TravelResult total_travel(const TransitionInputs& in, double dt)
{
    const auto times = sample_times(in.timeline.total_duration, dt);
    const std::size_t n = in.mapping.pairs.size();
    std::vector<Point2> previous(n);
    std::vector<double> travel(n, 0.0);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const TimelineSample s = sample(in.timeline, times[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const StageTimes progress = geometry_progress(in.timeline, s.stage_times[i]);
            const Point2 c = evaluate_strategy(in.spec.strategy, in.mapping.pairs[i], progress, in.spec.shape_style,
                                               in.spec.path_strategy)
                                 .glyph.centroid();
            if (k > 0) travel[i] += distance(previous[i], c);
            previous[i] = c;
        }
    }
    TravelResult out;
    for (std::size_t i = 0; i < n; ++i) {
        out.per_element[in.mapping.pairs[i].node_id] = travel[i];
        out.total += travel[i];
    }
    return out;
}

namespace {

struct Bounds {
    double x0, y0, x1, y1;
};

Bounds bounds_of(const Primitive& p)
{
    if (p.kind == PrimitiveKind::Dot) {
        const Point2 c = p.points.front();
        return {c.x - p.radius, c.y - p.radius, c.x + p.radius, c.y + p.radius};
    }
    Bounds b{p.points[0].x, p.points[0].y, p.points[0].x, p.points[0].y};
    for (Point2 v : p.points) {
        b.x0 = std::min(b.x0, v.x);
        b.y0 = std::min(b.y0, v.y);
        b.x1 = std::max(b.x1, v.x);
        b.y1 = std::max(b.y1, v.y);
    }
    const double pad = 0.5 * p.stroke_width;
    return {b.x0 - pad, b.y0 - pad, b.x1 + pad, b.y1 + pad};
}

bool is_element_glyph(const Primitive& p)
{
    return p.kind == PrimitiveKind::Dot || p.kind == PrimitiveKind::Polyline;
}

int orientation(Point2 a, Point2 b, Point2 c)
{
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool properly_intersect(Point2 a, Point2 b, Point2 c, Point2 d)
{
    return orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0;
}

} // namespace

std::size_t occlusion_events(const Frame& frame, double threshold)
{
    if (!(threshold > 0.0)) throw std::invalid_argument("occlusion threshold must be positive");
    std::vector<Bounds> boxes;
    for (const Primitive& p : frame.primitives) {
        if (is_element_glyph(p)) boxes.push_back(bounds_of(p));
    }
    const double min_area = threshold * threshold;
    std::size_t count = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < boxes.size(); ++j) {
            const double w = std::min(boxes[i].x1, boxes[j].x1) - std::max(boxes[i].x0, boxes[j].x0);
            const double h = std::min(boxes[i].y1, boxes[j].y1) - std::max(boxes[i].y0, boxes[j].y0);
            if (w > 0.0 && h > 0.0 && w * h > min_area) ++count;
        }
    }
    return count;
}

std::size_t occlusion_events(const std::vector<Frame>& frames, double threshold)
{
    std::size_t count = 0;
    for (const Frame& f : frames) count += occlusion_events(f, threshold);
    return count;
}

std::size_t crossings(const Frame& frame)
{
    struct Seg {
        std::size_t owner;
        Point2 a, b;
    };
    std::vector<Seg> segs;
    for (std::size_t i = 0; i < frame.primitives.size(); ++i) {
        const Primitive& p = frame.primitives[i];
        if (p.kind != PrimitiveKind::Polyline && p.kind != PrimitiveKind::Segment) continue;
        for (std::size_t k = 0; k + 1 < p.points.size(); ++k) segs.push_back({i, p.points[k], p.points[k + 1]});
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].owner == segs[j].owner) continue;
            if (properly_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) ++count;
        }
    }
    return count;
}

std::size_t max_simultaneous_moving(const Timeline& timeline, double dt)
{
    std::size_t best = 0;
    for (double t : sample_times(timeline.total_duration, dt)) {
        const TimelineSample s = sample(timeline, t);
        const auto moving = std::count_if(s.stage_times.begin(), s.stage_times.end(), [](const StageTimes& st) {
            auto active = [](double v) { return v > 0.0 && v < 1.0; };
            return active(st.shape) || active(st.pos) || active(st.size);
        });
        best = std::max(best, static_cast<std::size_t>(moving));
    }
    return best;
}

TransitionReport compute_report(const TransitionInputs& in, double dt, double occlusion_threshold)
{
    TransitionReport r;
    r.variant_name = in.spec.variant_name;
    r.total_duration = in.timeline.total_duration;
    r.step = dt;
    r.occlusion_threshold = occlusion_threshold;
    TravelResult travel = total_travel(in, dt);
    r.total_travel = travel.total;
    r.per_element_travel = std::move(travel.per_element);
    r.max_simultaneous_moving = max_simultaneous_moving(in.timeline, dt);
    for (double t : sample_times(in.timeline.total_duration, dt)) {
        const Frame f = render_frame(in, t);
        r.occlusion_events += occlusion_events(f, occlusion_threshold);
        r.max_crossings = std::max(r.max_crossings, crossings(f));
    }
    return r;
}

std::string report_to_json(const TransitionReport& r)
{
    nlohmann::ordered_json j;
    j["schemaVersion"] = "1";
    j["note"] = "engineering proxies: totalDuration for swiftness; occlusionEvents, maxSimultaneousMoving and "
                "totalTravel for traceability";
    j["variantName"] = r.variant_name;
    j["totalDuration"] = r.total_duration;
    j["totalTravel"] = r.total_travel;
    j["maxSimultaneousMoving"] = r.max_simultaneous_moving;
    j["occlusionEvents"] = r.occlusion_events;
    j["maxCrossings"] = r.max_crossings;
    j["sampleStep"] = r.step;
    j["occlusionThreshold"] = r.occlusion_threshold;
    j["perElementTravel"] = nlohmann::ordered_json::object();
    for (const auto& [id, v] : r.per_element_travel) j["perElementTravel"][id] = v;
    return j.dump(1) + "\n";
}

std::string report_to_text(const TransitionReport& r)
{
    auto row = [](const char* name, const std::string& value, const char* proxy) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-24s %14s   %s\n", name, value.c_str(), proxy);
        return std::string(buf);
    };
    std::string out = "transition report: " + r.variant_name + "\n";
    out += row("metric", "value", "proxy for");
    out += row("total duration [s]", format_fixed3(r.total_duration), "swiftness");
    out += row("total travel [px]", format_fixed3(r.total_travel), "traceability");
    out += row("max simultaneous moving", std::to_string(r.max_simultaneous_moving), "traceability");
    out += row("occlusion events", std::to_string(r.occlusion_events), "traceability");
    out += row("max crossings", std::to_string(r.max_crossings), "traceability");
    return out;
}

} // namespace nlpc
