#include "fixtures.hpp"
#include "oracles.hpp"

#include "nlpc/errors.hpp"
#include "nlpc/transition.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nlpc;

namespace {

ElementPair make_pair(Point2 center, double radius, Point2 start, Point2 end, double width = 1.0)
{
    ElementPair p;
    p.node_id = "e";
    p.dot = {"e", center, radius, 3};
    p.line_start = start;
    p.line_end = end;
    p.line_width = width;
    p.color_index = 3;
    return p;
}

void expect_point(Point2 actual, double x, double y, double tol = 1e-12)
{
    EXPECT_NEAR(actual.x, x, tol);
    EXPECT_NEAR(actual.y, y, tol);
}

const Strategy kStrategies[] = {Strategy::SuccessiveUnconnected, Strategy::SimultaneousUnconnected,
                                Strategy::SimultaneousConnected};
const ShapeStyle kStyles[] = {ShapeStyle::geometric(), ShapeStyle::oriented_line(), ShapeStyle::bent_line()};
const PathStrategy kPaths[] = {PathStrategy::VerticalOnly, PathStrategy::ShortestPath};

} // namespace

TEST(MapElements, Counting)
{
    auto b = fixtures::make_bundle(fixtures::make_graph({{"a", 0}, {"b", 0}}, {{"a", "b"}}, 1), preset("v_basic"));
    EXPECT_EQ(b->mapping.pairs.size(), 2u);
    EXPECT_EQ(b->mapping.fading_links.size(), 1u);
    EXPECT_EQ(b->mapping.appearing_axes.size(), 2u);

    auto lm = fixtures::make_bundle(fixtures::les_miserables(), preset("v_basic"));
    EXPECT_EQ(lm->mapping.pairs.size(), 77u);
    EXPECT_EQ(lm->mapping.fading_links.size(), 254u);

    auto none = fixtures::make_bundle(fixtures::make_graph({{"a", 0}, {"b", 0}, {"c", 0}}, {}, 1), preset("v_basic"));
    EXPECT_EQ(none->mapping.pairs.size(), 3u);
    EXPECT_TRUE(none->mapping.fading_links.empty());
}

TEST(MapElements, NodeSetMismatchIsConsistencyError)
{
    auto b = fixtures::make_bundle(fixtures::random_graph(6, 1), preset("v_basic"));
    PcScene pc = b->pc;
    pc.polylines[2].node_id = "stranger";
    EXPECT_THROW(map_elements(b->nl, pc), ConsistencyError);
    pc = b->pc;
    pc.polylines.pop_back();
    EXPECT_THROW(map_elements(b->nl, pc), ConsistencyError);
}

TEST(Geometric, HandLerpOracle)
{
    const ElementPair p = make_pair({10, 10}, 4, {0, 5}, {20, 15}, 1);
    const TransGlyph g = interpolate_geometric(p, 0.5);
    expect_point(g.vertices[0], 5, 7.5);
    expect_point(g.vertices[1], 15, 12.5);
    EXPECT_DOUBLE_EQ(g.stroke_width, 4.5);

    const TransGlyph g0 = interpolate_geometric(p, 0.0);
    EXPECT_TRUE(g0.is_dot());
    EXPECT_EQ(g0.vertices[0], p.dot.center);
    EXPECT_EQ(g0.stroke_width, 8.0);
    const TransGlyph g1 = interpolate_geometric(p, 1.0);
    EXPECT_EQ(g1.vertices[0], p.line_start);
    EXPECT_EQ(g1.vertices[1], p.line_end);
    EXPECT_EQ(g1.stroke_width, 1.0);
}

TEST(Geometric, Linearity)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0), c(-500.0, 1500.0);
    for (int k = 0; k < 200; ++k) {
        const ElementPair p = make_pair({c(rng), c(rng)}, 6, {c(rng), c(rng)}, {c(rng), c(rng)}, 1.5);
        const double t1 = u(rng), t2 = u(rng);
        const TransGlyph a = interpolate_geometric(p, t1);
        const TransGlyph b = interpolate_geometric(p, t2);
        const TransGlyph m = interpolate_geometric(p, 0.5 * (t1 + t2));
        for (int i = 0; i < 2; ++i) {
            EXPECT_NEAR(a.vertices[i].x + b.vertices[i].x, 2.0 * m.vertices[i].x, 1e-9);
            EXPECT_NEAR(a.vertices[i].y + b.vertices[i].y, 2.0 * m.vertices[i].y, 1e-9);
            const oracle::Vec lo = oracle::lerp({p.dot.center.x, p.dot.center.y},
                                                i ? oracle::Vec{p.line_end.x, p.line_end.y}
                                                  : oracle::Vec{p.line_start.x, p.line_start.y},
                                                t1);
            EXPECT_NEAR(a.vertices[i].x, lo.x, 1e-9);
            EXPECT_NEAR(a.vertices[i].y, lo.y, 1e-9);
        }
    }
}

TEST(Oriented, StageContract)
{
    const ElementPair p = make_pair({10, 40}, 6, {0, 5}, {20, 15}, 1.5);
    const TransGlyph shaped = interpolate_oriented(p, {1, 0, 0}, PathStrategy::ShortestPath);
    expect_point(shaped.centroid(), 10, 40);
    const Point2 d = shaped.vertices[1] - shaped.vertices[0];
    EXPECT_NEAR(oracle::cross(oracle::unit({d.x, d.y}), oracle::unit({20, 10})), 0.0, 1e-12);
    EXPECT_NEAR(length(d), kShortSegmentFraction * length(Point2{20, 10}), 1e-12);

    const TransGlyph half = interpolate_oriented(p, {1, 1, 0.5}, PathStrategy::ShortestPath);
    expect_point(half.vertices[0], 5, 7.5);
    expect_point(half.vertices[1], 15, 12.5);

    const TransGlyph done = interpolate_oriented(p, {1, 1, 1}, PathStrategy::ShortestPath);
    expect_point(done.vertices[0], 0, 5);
    expect_point(done.vertices[1], 20, 15);
}

TEST(Bent, ArmTipsOracle)
{
    const ElementPair p = make_pair({10, 40}, 6, {0, 5}, {20, 15}, 1.5);
    const BentArms arms = bent_arms(p, {1, 0, 0}, PathStrategy::ShortestPath, 0.15);
    expect_point(arms.first_tip, 8.5, 34.75);
    expect_point(arms.second_tip, 11.5, 36.25);
    expect_point(arms.middle, 10, 40);

    const TransGlyph g = interpolate_bent(p, {1, 0, 0}, PathStrategy::ShortestPath, 0.15);
    EXPECT_EQ(g.vertices.size(), 3u);
    const TransGlyph dot = interpolate_bent(p, {0, 0, 0}, PathStrategy::ShortestPath, 0.15);
    EXPECT_TRUE(dot.is_dot());
    const TransGlyph line = interpolate_bent(p, {1, 1, 1}, PathStrategy::VerticalOnly, 0.15);
    ASSERT_EQ(line.vertices.size(), 2u);
    expect_point(line.vertices[0], 0, 5);
    expect_point(line.vertices[1], 20, 15);
    EXPECT_THROW(interpolate_bent(p, {1, 0, 0}, PathStrategy::ShortestPath, 0.0), std::invalid_argument);
    EXPECT_THROW(interpolate_bent(p, {1, 0, 0}, PathStrategy::ShortestPath, 0.6), std::invalid_argument);
}

TEST(PositionPath, Examples)
{
    expect_point(position_path({10, 40}, {50, 70}, PathStrategy::ShortestPath, 0.5), 30, 55);
    expect_point(position_path({10, 40}, {50, 70}, PathStrategy::VerticalOnly, 1.0), 10, 70);
    for (PathStrategy path : kPaths) {
        EXPECT_EQ(position_path({10, 40}, {50, 70}, path, 0.0), (Point2{10, 40}));
        EXPECT_EQ(position_path({10, 40}, {50, 70}, path, 1.0).y, 70.0);
    }
    EXPECT_EQ(position_path({10, 40}, {50, 70}, PathStrategy::ShortestPath, 1.0).x, 50.0);
}

TEST(EvaluateStrategy, EndStatesForEveryCombination)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(0.0, 1000.0);
    for (int k = 0; k < 20; ++k) {
        const ElementPair p = make_pair({c(rng), c(rng)}, 6, {300, c(rng)}, {700, c(rng)}, 1.5);
        for (Strategy s : kStrategies) {
            for (const ShapeStyle& style : kStyles) {
                for (PathStrategy path : kPaths) {
                    const StrategyGlyphs start = evaluate_strategy(s, p, StageTimes::uniform(0), style, path);
                    EXPECT_TRUE(start.glyph.is_dot());
                    EXPECT_EQ(start.glyph.vertices[0], p.dot.center);
                    EXPECT_EQ(start.glyph.stroke_width, 2.0 * p.dot.radius);
                    const StrategyGlyphs end = evaluate_strategy(s, p, StageTimes::uniform(1), style, path);
                    ASSERT_EQ(end.glyph.vertices.size(), 2u);
                    EXPECT_NEAR(end.glyph.vertices[0].x, p.line_start.x, 1e-6);
                    EXPECT_NEAR(end.glyph.vertices[0].y, p.line_start.y, 1e-6);
                    EXPECT_NEAR(end.glyph.vertices[1].x, p.line_end.x, 1e-6);
                    EXPECT_NEAR(end.glyph.vertices[1].y, p.line_end.y, 1e-6);
                    EXPECT_EQ(end.glyph.stroke_width, p.line_width);
                }
            }
        }
    }
}

TEST(EvaluateStrategy, UnconnectedGrowsFromAxisOne)
{
    const ElementPair p = make_pair({500, 100}, 6, {300, 600}, {700, 200}, 1.5);
    const StrategyGlyphs end = evaluate_strategy(Strategy::SimultaneousUnconnected, p, StageTimes::uniform(1),
                                                 ShapeStyle::geometric(), PathStrategy::ShortestPath);
    ASSERT_TRUE(end.guide.has_value());
    EXPECT_TRUE(end.merged);
    EXPECT_EQ(end.guide->vertices[0], p.line_start);
    EXPECT_EQ(end.guide->vertices[1], p.line_end);

    const StrategyGlyphs mid = evaluate_strategy(Strategy::SimultaneousUnconnected, p, StageTimes::uniform(0.5),
                                                 ShapeStyle::geometric(), PathStrategy::ShortestPath);
    ASSERT_TRUE(mid.guide.has_value());
    EXPECT_FALSE(mid.merged);
    EXPECT_EQ(mid.guide->vertices[0], p.line_start);
    expect_point(mid.guide->vertices[1], 500, 400);
    EXPECT_DOUBLE_EQ(mid.glyph.stroke_width, 6.0);

    const StrategyGlyphs near_end = evaluate_strategy(Strategy::SimultaneousUnconnected, p, {1, 1, 0.999999},
                                                      ShapeStyle::geometric(), PathStrategy::ShortestPath);
    EXPECT_LT(near_end.glyph.stroke_width, 1e-4);
    // the line passes through the dot
    EXPECT_NEAR(distance_to_line(near_end.glyph.vertices[0], p.line_start, p.line_end), 0.0, 1e-9);
}

TEST(EvaluateStrategy, SuccessiveMidPosIsAShrunkPointOnTheWay)
{
    const ElementPair p = make_pair({500, 100}, 6, {300, 600}, {700, 200}, 1.5);
    const StrategyGlyphs g = evaluate_strategy(Strategy::SuccessiveUnconnected, p, {0, 0.5, 0},
                                               ShapeStyle::geometric(), PathStrategy::ShortestPath);
    EXPECT_TRUE(g.glyph.is_dot());
    EXPECT_LT(g.glyph.stroke_width, 2.0 * p.dot.radius);
    EXPECT_GT(g.glyph.stroke_width, p.line_width);
    const Point2 c = g.glyph.vertices[0];
    const Point2 a = p.dot.center, b = p.line_start;
    EXPECT_NEAR(cross(b - a, c - a), 0.0, 1e-9);
    const double along = dot(c - a, b - a) / dot(b - a, b - a);
    EXPECT_GT(along, 0.0);
    EXPECT_LT(along, 1.0);
}

TEST(EvaluateStrategy, UnknownStrategyIsArgumentError)
{
    const ElementPair p = make_pair({0, 0}, 6, {1, 1}, {2, 2});
    EXPECT_THROW(evaluate_strategy(static_cast<Strategy>(99), p, StageTimes::uniform(0.5), ShapeStyle::geometric(),
                                   PathStrategy::ShortestPath),
                 std::invalid_argument);
}

TEST(Accordion, SlideArithmeticAndEndpoints)
{
    auto g = fixtures::random_graph(12, 4);
    g.attributes = generate_attributes(g, 5, PatternKind::uniform_random(), 4);
    const Viewport v{1000, 600, 50};
    const PcScene p2 = compute_pc_scene(g, default_axis_order(g, 2), v);
    const PcScene p3 = compute_pc_scene(g, default_axis_order(g, 3), v, AxisPlacement::AnchoredPair);
    ASSERT_DOUBLE_EQ(p3.axes[2].x_position, 850.0);
    const PcScene half = accordion_expand(p2, p3, 0.5);
    EXPECT_DOUBLE_EQ(half.axes[2].x_position, 775.0);
    EXPECT_DOUBLE_EQ(half.axes[2].opacity, 0.5);

    const PcScene start = accordion_expand(p2, p3, 0.0);
    EXPECT_EQ(start.axes[2].opacity, 0.0);
    EXPECT_EQ(render_pc_scene(start).primitives.size() - render_pc_scene(p2).primitives.size(), 0u)
        << "hidden axes are not rendered, and polylines only gain collapsed vertices";
    for (std::size_t i = 0; i < start.polylines.size(); ++i) {
        EXPECT_EQ(start.polylines[i].vertices[2], p2.polylines[i].vertices[1]);
    }

    const PcScene p5 = compute_pc_scene(g, default_axis_order(g, 5), v);
    EXPECT_THROW(accordion_expand(p2, p5, 0.5), ConsistencyError);
    const PcScene swapped = compute_pc_scene(g, {"attr_2", "attr_1", "attr_3"}, v, AxisPlacement::AnchoredPair);
    EXPECT_THROW(accordion_expand(p2, swapped, 0.5), ConsistencyError);
}
