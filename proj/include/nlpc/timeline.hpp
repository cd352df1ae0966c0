#pragma once

#include "nlpc/graph.hpp"
#include "nlpc/transition.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlpc {

enum class EasingKind { Linear, CubicInOut };

/// Linear: s. CubicInOut: 4s^3 below 0.5, 1 - (2 - 2s)^3 / 2 above.
double ease(double s, EasingKind kind);

enum class Direction { NlToPc, PcToNl };

struct StaggerSortKey {
    enum class Kind { AttributeValue, SpatialDistance, ClusterThenId };

    Kind kind = Kind::ClusterThenId;
    std::string attribute_name; // AttributeValue only
    bool descending = true;     // AttributeValue only

    static StaggerSortKey attribute_value(std::string name, bool descending = true)
    {
        return {Kind::AttributeValue, std::move(name), descending};
    }
    static StaggerSortKey spatial_distance() { return {Kind::SpatialDistance, {}, true}; }
    static StaggerSortKey cluster_then_id() { return {Kind::ClusterThenId, {}, true}; }
};

struct StaggerConfig {
    enum class Scope { WholeTransformation, PerStage };

    double per_node_delay = 0.02;
    double per_cluster_delay = 0.4;
    StaggerSortKey sort_key;
    Scope scope = Scope::WholeTransformation;
};

using StagingOrder = std::array<ChangeKind, 3>;

/// One point of the transition design space.
struct TransitionSpec {
    std::string variant_name = "custom";
    Direction direction = Direction::NlToPc;
    Strategy strategy = Strategy::SimultaneousConnected;
    ShapeStyle shape_style = ShapeStyle::geometric();
    PathStrategy path_strategy = PathStrategy::ShortestPath;
    std::optional<StagingOrder> staging_order; // nullopt: all changes simultaneous
    double alignment_duration = 1.0;
    double stage_duration = 2.0;
    double enrichment_duration = 0.0;
    std::optional<StaggerConfig> stagger;
    EasingKind easing_motion = EasingKind::CubicInOut;
    EasingKind easing_opacity = EasingKind::Linear;
};

/// The three accepted NL->PC staging orders.
inline constexpr std::array<StagingOrder, 3> kStagingOrders = {{
    {ChangeKind::Pos, ChangeKind::Shape, ChangeKind::Size},
    {ChangeKind::Shape, ChangeKind::Size, ChangeKind::Pos},
    {ChangeKind::Shape, ChangeKind::Pos, ChangeKind::Size},
}};

/// The staggering used in the advanced variant: 0.02 s per node, 0.4 s per cluster.
StaggerConfig default_stagger();

/// "v_basic" or "v_adv"; throws std::invalid_argument for other names.
/// v_adv comes without staggering; pass `with_stagger` to add default_stagger().
TransitionSpec preset(std::string_view name, bool with_stagger = false);
bool is_preset(std::string_view name);

/// The PC->NL spec that plays `spec` backwards (direction flipped, staging order reversed).
TransitionSpec reversed(const TransitionSpec& spec);

/// Throws ParseError whose path names the offending field.
void validate_spec(const TransitionSpec& spec);

/// TransitionSpec JSON (schemaVersion "1"). A preset variantName supplies defaults
/// for every omitted field. Throws ParseError with a JSON pointer.
TransitionSpec parse_spec(std::string_view document);
std::string serialize_spec(const TransitionSpec& spec);

/// Half-open interval in seconds.
struct Window {
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    friend bool operator==(const Window&, const Window&) = default;
};

struct ElementTrack {
    std::string node_id;
    double offset = 0.0; // stagger delay
    Window shape;
    Window pos;
    Window size;

    const Window& window(ChangeKind kind) const;
};

struct Phases {
    Window alignment;
    Window transformation;
    Window enrichment;
};

/// Absolute schedule of a transition, expressed in the spec's own direction.
struct Timeline {
    std::string variant_name;
    Direction direction = Direction::NlToPc;
    Phases phases;
    std::vector<ElementTrack> tracks; // mapping pair order
    Window link_fade;
    Window axis_fade;
    Window label_fade;
    double total_duration = 0.0;
    EasingKind easing_motion = EasingKind::CubicInOut;
    EasingKind easing_opacity = EasingKind::Linear;
};

std::string serialize_timeline(const Timeline& timeline);

double stagger_delay(std::size_t element_rank, std::size_t cluster_rank, const StaggerConfig& cfg);

/// Node ids in stagger order; ties break on ascending node id.
/// Throws std::invalid_argument for an unknown attribute.
std::vector<std::string> stagger_order(const MultivariateGraph& graph, const StaggerSortKey& key,
                                       const ElementMapping& mapping);

Timeline build_timeline(const TransitionSpec& spec, const ElementMapping& mapping, const MultivariateGraph& graph);

struct TimelineSample {
    double time = 0.0;
    bool clamped = false;
    std::vector<StageTimes> stage_times; // timeline track order, in the timeline's direction
    double link_opacity = 1.0;
    double axis_opacity = 0.0;
    double label_opacity = 0.0;
};

/// Evaluates every track at t (clamped into [0, total_duration]).
/// Zero-length windows step from 0 to 1 at their start.
TimelineSample sample(const Timeline& timeline, double t);

/// Stage times as NL->PC geometry progress (complemented for PC->NL timelines).
StageTimes geometry_progress(const Timeline& timeline, StageTimes times);

} // namespace nlpc
