#include "nlpc/timeline.hpp"

#include "nlpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace nlpc {

double ease(double s, EasingKind kind)
{
    s = std::clamp(s, 0.0, 1.0);
    switch (kind) {
    case EasingKind::Linear: return s;
    case EasingKind::CubicInOut: {
        if (s < 0.5) return 4.0 * s * s * s;
        const double u = -2.0 * s + 2.0;
        return 1.0 - u * u * u / 2.0;
    }
    }
    throw std::invalid_argument("unknown easing");
}

StaggerConfig default_stagger()
{
    return {0.02, 0.4, StaggerSortKey::cluster_then_id(), StaggerConfig::Scope::WholeTransformation};
}

bool is_preset(std::string_view name)
{
    return name == "v_basic" || name == "v_adv";
}

TransitionSpec preset(std::string_view name, bool with_stagger)
{
    TransitionSpec spec;
    spec.variant_name = std::string(name);
    spec.alignment_duration = 1.0;
    spec.stage_duration = 2.0;
    spec.enrichment_duration = 0.0;
    spec.strategy = Strategy::SimultaneousConnected;
    spec.path_strategy = PathStrategy::ShortestPath;
    if (name == "v_basic") {
        spec.shape_style = ShapeStyle::geometric();
        spec.staging_order.reset();
    } else if (name == "v_adv") {
        spec.shape_style = ShapeStyle::oriented_line();
        spec.staging_order = StagingOrder{ChangeKind::Shape, ChangeKind::Pos, ChangeKind::Size};
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected v_basic or v_adv)");
    }
    if (with_stagger) spec.stagger = default_stagger();
    return spec;
}

namespace {

StagingOrder reverse_order(StagingOrder order)
{
    return {order[2], order[1], order[0]};
}

bool accepted_order(const StagingOrder& order, Direction direction)
{
    return std::any_of(kStagingOrders.begin(), kStagingOrders.end(), [&](const StagingOrder& o) {
        return (direction == Direction::NlToPc ? o : reverse_order(o)) == order;
    });
}

void check_duration(double value, const char* field)
{
    if (!std::isfinite(value) || value < 0.0) throw ParseError(std::string("/") + field, "must be a finite number >= 0");
}

} // namespace

TransitionSpec reversed(const TransitionSpec& spec)
{
    TransitionSpec out = spec;
    out.direction = spec.direction == Direction::NlToPc ? Direction::PcToNl : Direction::NlToPc;
    if (spec.staging_order) out.staging_order = reverse_order(*spec.staging_order);
    return out;
}

void validate_spec(const TransitionSpec& spec)
{
    check_duration(spec.alignment_duration, "alignmentDuration");
    check_duration(spec.stage_duration, "stageDuration");
    check_duration(spec.enrichment_duration, "enrichmentDuration");
    if (spec.staging_order && !accepted_order(*spec.staging_order, spec.direction)) {
        throw ParseError("/stagingOrder", spec.direction == Direction::NlToPc
                                              ? "must be pos-shape-size, shape-size-pos, shape-pos-size or simultaneous"
                                              : "must be the reverse of an accepted NL->PC order or simultaneous");
    }
    if (spec.shape_style.kind == ShapeStyle::Kind::BentLine &&
        !(spec.shape_style.arm_fraction > 0.0 && spec.shape_style.arm_fraction <= 0.5)) {
        throw ParseError("/shapeStyle/armFraction", "must lie in (0, 0.5]");
    }
    if (spec.stagger) {
        const auto& s = *spec.stagger;
        if (!std::isfinite(s.per_node_delay) || s.per_node_delay < 0.0) {
            throw ParseError("/stagger/perNodeDelay", "must be a finite number >= 0");
        }
        if (!std::isfinite(s.per_cluster_delay) || s.per_cluster_delay < 0.0) {
            throw ParseError("/stagger/perClusterDelay", "must be a finite number >= 0");
        }
        if (s.sort_key.kind == StaggerSortKey::Kind::AttributeValue && s.sort_key.attribute_name.empty()) {
            throw ParseError("/stagger/sortKey/axisName", "attribute sort key needs an axis name");
        }
    }
}

const Window& ElementTrack::window(ChangeKind kind) const
{
    switch (kind) {
    case ChangeKind::Shape: return shape;
    case ChangeKind::Pos: return pos;
    case ChangeKind::Size: return size;
    }
    throw std::invalid_argument("unknown change kind");
}

double stagger_delay(std::size_t element_rank, std::size_t cluster_rank, const StaggerConfig& cfg)
{
    return static_cast<double>(element_rank) * cfg.per_node_delay +
           static_cast<double>(cluster_rank) * cfg.per_cluster_delay;
}

std::vector<std::string> stagger_order(const MultivariateGraph& graph, const StaggerSortKey& key,
                                       const ElementMapping& mapping)
{
    struct Entry {
        std::string id;
        int cluster = 0;
        double value = 0.0;
    };
    std::vector<Entry> entries;
    entries.reserve(mapping.pairs.size());

    std::size_t column = 0;
    if (key.kind == StaggerSortKey::Kind::AttributeValue) column = graph.attributes.index_of(key.attribute_name);

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) index.emplace(graph.nodes[i].id, i);

    for (const ElementPair& p : mapping.pairs) {
        const auto it = index.find(p.node_id);
        if (it == index.end()) throw ConsistencyError("mapping node '" + p.node_id + "' is not in the graph");
        Entry e{p.node_id, graph.nodes[it->second].cluster_id, 0.0};
        switch (key.kind) {
        case StaggerSortKey::Kind::AttributeValue: e.value = graph.attributes.values.at(it->second).at(column); break;
        case StaggerSortKey::Kind::SpatialDistance: e.value = distance(p.dot.center, p.line_midpoint()); break;
        case StaggerSortKey::Kind::ClusterThenId: break;
        }
        entries.push_back(std::move(e));
    }

    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
        switch (key.kind) {
        case StaggerSortKey::Kind::AttributeValue:
            if (a.value != b.value) return key.descending ? a.value > b.value : a.value < b.value;
            break;
        case StaggerSortKey::Kind::SpatialDistance:
            if (a.value != b.value) return a.value < b.value;
            break;
        case StaggerSortKey::Kind::ClusterThenId:
            if (a.cluster != b.cluster) return a.cluster < b.cluster;
            break;
        }
        return a.id < b.id;
    });

    std::vector<std::string> out;
    out.reserve(entries.size());
    for (auto& e : entries) out.push_back(std::move(e.id));
    return out;
}

Timeline build_timeline(const TransitionSpec& spec, const ElementMapping& mapping, const MultivariateGraph& graph)
{
    validate_spec(spec);
    const double a = spec.alignment_duration;
    const double stage = spec.stage_duration;

    std::optional<StagingOrder> order = spec.staging_order;
    if (order && spec.direction == Direction::PcToNl) order = reverse_order(*order);

    // Stagger offsets, keyed by mapping position.
    std::vector<double> delay(mapping.pairs.size(), 0.0);
    if (spec.stagger) {
        const auto sorted = stagger_order(graph, spec.stagger->sort_key, mapping);
        std::unordered_map<std::string, std::size_t> position;
        for (std::size_t i = 0; i < mapping.pairs.size(); ++i) position.emplace(mapping.pairs[i].node_id, i);
        std::unordered_map<int, std::size_t> cluster_rank;
        for (std::size_t rank = 0; rank < sorted.size(); ++rank) {
            const int cluster = graph.nodes[graph.node_index(sorted[rank])].cluster_id;
            const auto [it, inserted] = cluster_rank.emplace(cluster, cluster_rank.size());
            delay[position.at(sorted[rank])] = stagger_delay(rank, it->second, *spec.stagger);
        }
    }
    const double max_delay = delay.empty() ? 0.0 : *std::max_element(delay.begin(), delay.end());
    const bool per_stage = spec.stagger && spec.stagger->scope == StaggerConfig::Scope::PerStage;

    Timeline tl;
    tl.variant_name = spec.variant_name;
    tl.direction = spec.direction;
    tl.easing_motion = spec.easing_motion;
    tl.easing_opacity = spec.easing_opacity;

    double transform_end = a + (order ? 3.0 : 1.0) * stage;
    for (std::size_t i = 0; i < mapping.pairs.size(); ++i) {
        ElementTrack track;
        track.node_id = mapping.pairs[i].node_id;
        track.offset = delay[i];
        if (!order) {
            const Window w{a + delay[i], a + delay[i] + stage};
            track.shape = track.pos = track.size = w;
        } else {
            for (std::size_t k = 0; k < 3; ++k) {
                // PerStage: stage k opens once every element could have finished stage k-1.
                const double begin = per_stage ? a + static_cast<double>(k) * (stage + max_delay) + delay[i]
                                               : a + delay[i] + static_cast<double>(k) * stage;
                const Window w{begin, begin + stage};
                switch ((*order)[k]) {
                case ChangeKind::Shape: track.shape = w; break;
                case ChangeKind::Pos: track.pos = w; break;
                case ChangeKind::Size: track.size = w; break;
                }
            }
        }
        transform_end = std::max({transform_end, track.shape.end, track.pos.end, track.size.end});
        tl.tracks.push_back(std::move(track));
    }

    tl.phases.alignment = {0.0, a};
    tl.phases.transformation = {a, transform_end};
    tl.phases.enrichment = {transform_end, transform_end + spec.enrichment_duration};
    tl.total_duration = tl.phases.enrichment.end;
    tl.link_fade = tl.phases.alignment;
    tl.axis_fade = tl.phases.alignment;
    tl.label_fade = tl.phases.enrichment;

    if (spec.direction == Direction::PcToNl) {
        const double total = tl.total_duration;
        auto mirror = [total](Window& w) { w = {total - w.end, total - w.start}; };
        Phases p = tl.phases;
        mirror(p.alignment);
        mirror(p.transformation);
        mirror(p.enrichment);
        tl.phases = p;
        for (auto& t : tl.tracks) {
            mirror(t.shape);
            mirror(t.pos);
            mirror(t.size);
        }
        mirror(tl.link_fade);
        mirror(tl.axis_fade);
        mirror(tl.label_fade);
    }
    return tl;
}

namespace {

double window_progress(const Window& w, double t)
{
    if (w.length() <= 0.0) return t >= w.start ? 1.0 : 0.0;
    return std::clamp((t - w.start) / w.length(), 0.0, 1.0);
}

} // namespace

TimelineSample sample(const Timeline& timeline, double t)
{
    TimelineSample out;
    const double total = timeline.total_duration;
    out.clamped = !(t >= 0.0 && t <= total);
    out.time = std::clamp(std::isnan(t) ? 0.0 : t, 0.0, total);

    // A PC->NL timeline is the NL->PC one played backwards: evaluate the forward
    // schedule at the mirrored time and complement the progress.
    const bool backward = timeline.direction == Direction::PcToNl;
    const double tf = backward ? total - out.time : out.time;
    auto forward = [&](const Window& w) { return backward ? Window{total - w.end, total - w.start} : w; };
    auto motion = [&](const Window& w) {
        const double s = ease(window_progress(forward(w), tf), timeline.easing_motion);
        return backward ? 1.0 - s : s;
    };

    out.stage_times.reserve(timeline.tracks.size());
    for (const ElementTrack& track : timeline.tracks) {
        out.stage_times.push_back({motion(track.shape), motion(track.pos), motion(track.size)});
    }
    out.link_opacity = 1.0 - ease(window_progress(forward(timeline.link_fade), tf), timeline.easing_opacity);
    out.axis_opacity = ease(window_progress(forward(timeline.axis_fade), tf), timeline.easing_opacity);
    out.label_opacity = ease(window_progress(forward(timeline.label_fade), tf), timeline.easing_opacity);
    return out;
}

StageTimes geometry_progress(const Timeline& timeline, StageTimes times)
{
    if (timeline.direction == Direction::NlToPc) return times;
    return {1.0 - times.shape, 1.0 - times.pos, 1.0 - times.size};
}

} // namespace nlpc
