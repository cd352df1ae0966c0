#include "fixtures.hpp"

#include "nlpc/metrics.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>

using namespace nlpc;

namespace {

Primitive segment(Point2 a, Point2 b, std::string id)
{
    Primitive p;
    p.kind = PrimitiveKind::Polyline;
    p.element_id = std::move(id);
    p.points = {a, b};
    p.stroke_width = 1.0;
    return p;
}

Primitive dot(Point2 c, double r, std::string id)
{
    Primitive p;
    p.kind = PrimitiveKind::Dot;
    p.element_id = std::move(id);
    p.points = {c};
    p.radius = r;
    return p;
}

/// One element whose dot sits at `center`; final line from (300, 400) to (700, 600).
std::unique_ptr<fixtures::Bundle> single(Point2 center, TransitionSpec spec)
{
    auto b = std::make_unique<fixtures::Bundle>();
    b->graph = fixtures::make_graph({{"e", 0}}, {}, 1);
    b->nl.dots = {{"e", center, 6.0, 0}};
    b->pc.axes = {{"attr_1", 300, 100, 800, 0, 1, 1}, {"attr_2", 700, 100, 800, 0, 1, 1}};
    b->pc.polylines = {{"e", {{300, 400}, {700, 600}}, 1.5, 0}};
    b->mapping = map_elements(b->nl, b->pc);
    b->recompile(spec);
    return b;
}

} // namespace

TEST(Crossings, Cases)
{
    Frame parallel;
    parallel.primitives = {segment({0, 0}, {10, 0}, "a"), segment({0, 5}, {10, 5}, "b")};
    EXPECT_EQ(crossings(parallel), 0u);

    Frame x;
    x.primitives = {segment({0, 0}, {10, 10}, "a"), segment({0, 10}, {10, 0}, "b")};
    EXPECT_EQ(crossings(x), 1u);

    Frame three;
    three.primitives = {segment({0, 0}, {10, 10}, "a"), segment({0, 10}, {10, 0}, "b"), segment({0, 3}, {10, 4}, "c")};
    EXPECT_EQ(crossings(three), 3u);

    Frame touching;
    touching.primitives = {segment({0, 0}, {10, 10}, "a"), segment({10, 10}, {20, 0}, "b")};
    EXPECT_EQ(crossings(touching), 0u);

    Frame bent;
    Primitive p = segment({0, 0}, {10, 10}, "a");
    p.points.push_back({0, 10});
    bent.primitives = {p};
    EXPECT_EQ(crossings(bent), 0u) << "segments of one glyph never count";
}

TEST(Occlusion, Cases)
{
    Frame apart;
    apart.primitives = {dot({0, 0}, 6, "a"), dot({150, 0}, 6, "b"), segment({0, 200}, {100, 200}, "c")};
    EXPECT_EQ(occlusion_events(apart, 4.0), 0u);

    Frame same;
    same.primitives = {dot({50, 50}, 6, "a"), dot({50, 50}, 6, "b")};
    EXPECT_EQ(occlusion_events(same, 4.0), 1u);
    EXPECT_EQ(occlusion_events(std::vector<Frame>{same, apart, same}, 4.0), 2u);

    Frame grazing;
    grazing.primitives = {dot({0, 0}, 6, "a"), dot({11, 0}, 6, "b")};
    EXPECT_EQ(occlusion_events(grazing, 4.0), 0u) << "1 x 12 px overlap is below 16 px^2";
    EXPECT_THROW(occlusion_events(same, 0.0), std::invalid_argument);
}

TEST(Travel, StraightPathMatchesDistance)
{
    const TransitionSpec spec = preset("v_adv");
    auto b = single({100, 200}, spec);
    const double expected = std::hypot(500.0 - 100.0, 500.0 - 200.0);
    EXPECT_NEAR(total_travel(b->inputs()).total, expected, 0.005 * expected);

    auto still = single({500, 500}, spec);
    EXPECT_NEAR(total_travel(still->inputs()).per_element.at("e"), 0.0, 1e-9);
    EXPECT_THROW(total_travel(b->inputs(), 0.0), std::invalid_argument);
}

TEST(Travel, ShortestPathNotLongerThanVerticalOnly)
{
    auto b = fixtures::make_bundle(fixtures::les_miserables(), preset("v_adv"));
    const double shortest = total_travel(b->inputs()).total;
    TransitionSpec v = preset("v_adv");
    v.path_strategy = PathStrategy::VerticalOnly;
    b->recompile(v);
    EXPECT_LE(shortest, total_travel(b->inputs()).total);
}

TEST(Travel, DiscretisationErrorShrinksAtLeastLinearly)
{
    TransitionSpec spec = preset("v_basic");
    spec.shape_style = ShapeStyle::bent_line(0.3);
    spec.easing_motion = EasingKind::Linear;
    // the dot projects inside the final segment, so the centroid path is a smooth cubic
    auto b = single({600, 150}, spec);
    const double reference = total_travel(b->inputs(), 1.0 / 20000.0).total;
    double previous_error = 0.0;
    for (double dt : {0.2, 0.1, 0.05, 0.025}) {
        const double error = std::fabs(reference - total_travel(b->inputs(), dt).total);
        ASSERT_GT(error, 0.0) << "fixture path must be curved";
        if (previous_error > 0.0) EXPECT_LE(error / previous_error, 0.5 + 0.05) << "dt " << dt;
        previous_error = error;
    }
}

TEST(MaxMoving, StaggerReducesConcurrency)
{
    auto b = fixtures::make_bundle(fixtures::les_miserables(), preset("v_basic"));
    EXPECT_EQ(max_simultaneous_moving(b->timeline), 77u);
    b->recompile(preset("v_basic", true));
    const std::size_t staggered = max_simultaneous_moving(b->timeline);
    EXPECT_LT(staggered, 77u);
    EXPECT_GT(staggered, 0u);
}

TEST(Report, FieldsAndDeterminism)
{
    auto b = fixtures::make_bundle(fixtures::random_graph(12, 9), preset("v_basic"));
    const TransitionReport r = compute_report(b->inputs());
    EXPECT_EQ(r.total_duration, b->timeline.total_duration);
    EXPECT_EQ(r.per_element_travel.size(), 12u);
    const std::string json = report_to_json(r);
    EXPECT_EQ(json, report_to_json(compute_report(b->inputs())));
    const auto j = nlohmann::json::parse(json);
    for (const char* key : {"totalDuration", "totalTravel", "maxSimultaneousMoving", "occlusionEvents",
                            "maxCrossings", "perElementTravel", "note"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_NE(report_to_text(r).find("swiftness"), std::string::npos);
}

TEST(SampleTimes, EndIsForced)
{
    const auto t = sample_times(1.0, 0.3);
    ASSERT_EQ(t.size(), 5u);
    EXPECT_EQ(t.back(), 1.0);
    EXPECT_EQ(sample_times(1.0, 0.25).size(), 5u);
}
