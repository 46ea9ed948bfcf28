#include "linarr/error.hpp"
#include "linarr/io.hpp"
#include "linarr/sweep.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace linarr;
using linarr::testing::axes;
using linarr::testing::generic_triangle;
using linarr::testing::pt;
using linarr::testing::raw;
using linarr::testing::vec;

namespace {

std::size_t count_kind(const SpaceGraph& x, GraphEdge::Kind kind) {
    return static_cast<std::size_t>(
        std::count_if(x.edges.begin(), x.edges.end(), [&](const GraphEdge& e) { return e.kind == kind; }));
}

SpaceGraph square_graph() {
    SpaceGraphBuilder b(3);
    auto v0 = b.vertex(pt({0, 0, 0}));
    auto v1 = b.vertex(pt({1, 0, 0}));
    auto v2 = b.vertex(pt({1, 1, 0}));
    auto v3 = b.vertex(pt({0, 1, 0}));
    b.segment(v0, v1).segment(v1, v2).segment(v2, v3).segment(v3, v0);
    return b.build();
}

}  // namespace

TEST(BuildSpaceGraph, TwoCrossingLines) {
    auto x = build_space_graph(axes(3, 2));
    EXPECT_EQ(x.vertices.size(), 1u);
    EXPECT_EQ(x.edges.size(), 4u);
    EXPECT_EQ(count_kind(x, GraphEdge::Kind::Ray), 4u);
}

TEST(BuildSpaceGraph, SingleLineIsOneFullEdge) {
    auto x = build_space_graph(build_arrangement(3, {raw({1, 2, 3}, {0, 1, 1})}));
    EXPECT_TRUE(x.vertices.empty());
    ASSERT_EQ(x.edges.size(), 1u);
    EXPECT_EQ(x.edges[0].kind, GraphEdge::Kind::FullLine);
}

TEST(BuildSpaceGraph, CutLineGetsSegmentAndTwoRays) {
    auto a = build_arrangement(2, {raw({0, 0}, {1, 0}), raw({-2, 0}, {0, 1}), raw({3, 0}, {1, 1})});
    auto x = build_space_graph(a);
    std::size_t segments = 0, rays = 0;
    for (const auto& e : x.edges) {
        if (e.carrier != a.line(0)) continue;
        segments += e.kind == GraphEdge::Kind::Segment;
        rays += e.kind == GraphEdge::Kind::Ray;
    }
    EXPECT_EQ(segments, 1u);
    EXPECT_EQ(rays, 2u);
    EXPECT_NO_THROW(validate_space_graph(x));
}

TEST(SpaceGraphBuilder, RejectsBadGraphs) {
    SpaceGraphBuilder dup(2);
    dup.vertex(pt({0, 0}));
    dup.vertex(pt({0, 0}));
    EXPECT_THROW(dup.build(), Error);

    SpaceGraphBuilder inside(2);
    auto a = inside.vertex(pt({0, 0}));
    auto b = inside.vertex(pt({2, 0}));
    inside.vertex(pt({1, 0}));
    inside.segment(a, b);
    EXPECT_THROW(inside.build(), Error);

    SpaceGraphBuilder crossing(2);
    auto c0 = crossing.vertex(pt({-1, 0}));
    auto c1 = crossing.vertex(pt({1, 0}));
    auto c2 = crossing.vertex(pt({0, -1}));
    auto c3 = crossing.vertex(pt({0, 1}));
    crossing.segment(c0, c1).segment(c2, c3);
    EXPECT_THROW(crossing.build(), Error);

    EXPECT_NO_THROW(square_graph());
}

TEST(CheckDirection, PerpendicularEdge) {
    SpaceGraphBuilder b(3);
    b.line(pt({0, 0, 0}), vec({1, 0, 0}));
    auto x = b.build();
    auto bad = check_direction(x, vec({0, 0, 1}));
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->kind, Violation::Kind::PerpendicularEdge);
    EXPECT_EQ(bad->edge, 0u);
    EXPECT_FALSE(check_direction(x, vec({1, 2, 4})));
}

TEST(CheckDirection, SharedLevel) {
    SpaceGraphBuilder b(3);
    b.vertex(pt({0, 0, 0}));
    b.vertex(pt({5, 0, 0}));
    auto x = b.build();
    auto bad = check_direction(x, vec({0, 0, 1}));
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->kind, Violation::Kind::SharedLevel);
    EXPECT_EQ(bad->vertex_a, 0u);
    EXPECT_EQ(bad->vertex_b, 1u);
    EXPECT_EQ(bad->level, Rat(0));
}

TEST(CheckDirection, ZeroDirectionIsAnError) {
    auto x = build_space_graph(axes(3, 2));
    EXPECT_THROW(check_direction(x, vec({0, 0, 0})), Error);
}

TEST(FindGenericDirection, Examples) {
    SpaceGraphBuilder b(3);
    b.line(pt({0, 0, 0}), vec({1, 0, 0}));
    EXPECT_EQ(find_generic_direction(b.build()), vec({1, 1, 1}));

    SpaceGraphBuilder c(3);
    c.line(pt({0, 0, 0}), vec({1, -1, 0}));
    std::int64_t k = 0;
    EXPECT_EQ(find_generic_direction(c.build(), 1, &k), vec({1, 2, 4}));
    EXPECT_EQ(k, 2);

    EXPECT_EQ(find_generic_direction(SpaceGraphBuilder(4).build()), vec({1, 1, 1, 1}));
}

TEST(SweepEvents, TwoCrossingLines) {
    auto x = build_space_graph(axes(3, 2));
    auto plan = sweep_events(x, find_generic_direction(x));
    ASSERT_EQ(plan.events.size(), 1u);
    EXPECT_EQ(plan.events[0].up, 2);
    EXPECT_EQ(plan.events[0].down, 2);
    EXPECT_EQ(plan.initial_rays_down, 2);
}

TEST(SweepEvents, PencilOfThree) {
    auto x = build_space_graph(axes(3, 3));
    auto plan = sweep_events(x, vec({3, -1, 7}));
    ASSERT_EQ(plan.events.size(), 1u);
    EXPECT_EQ(plan.events[0].up, 3);
    EXPECT_EQ(plan.events[0].down, 3);
}

TEST(SweepEvents, GenericPlanarTriangleHasOrderedLevels) {
    auto x = build_space_graph(generic_triangle(2));
    auto plan = sweep_events(x, find_generic_direction(x));
    ASSERT_EQ(plan.events.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(plan.events[i].up, 2);
        EXPECT_EQ(plan.events[i].down, 2);
        if (i) EXPECT_LT(plan.events[i - 1].level, plan.events[i].level);
    }
}

TEST(SweepEvents, RejectsNonGenericDirection) {
    auto x = build_space_graph(build_arrangement(3, {raw({0, 0, 0}, {1, 0, 0})}));
    try {
        sweep_events(x, vec({0, 0, 1}));
        FAIL();
    } catch (const DirectionError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonGenericDirection);
        EXPECT_EQ(e.violation().kind, Violation::Kind::PerpendicularEdge);
    }
}

TEST(HandleTrace, TwoCrossingLines) {
    auto x = build_space_graph(axes(3, 2));
    auto trace = handle_trace(sweep_events(x, find_generic_direction(x)), 3);
    EXPECT_EQ(trace.initial_g, 2);
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_EQ(trace.steps[0].handles_added, 1);
    EXPECT_EQ(trace.steps[0].handle_index, 1);
    EXPECT_EQ(trace.final_g, 3);
    EXPECT_TRUE(trace.all_trivial);
    EXPECT_EQ(trace_betti(trace), (BettiVector{1, 3, 0, 0}));
}

TEST(HandleTrace, PencilGivesTwoIMinusOne) {
    for (int i = 2; i <= 6; ++i) {
        std::vector<RawLine> lines;
        for (int k = 0; k < i; ++k) lines.push_back(raw({0, 0, 0}, {1, k, k * k}));
        auto a = build_arrangement(3, lines);
        auto x = build_space_graph(a);
        auto trace = handle_trace(sweep_events(x, find_generic_direction(x)), 3);
        EXPECT_EQ(trace.initial_g, i);
        EXPECT_EQ(trace.final_g, 2 * i - 1);
    }
}

TEST(HandleTrace, CompactSquareHasLocalMaximum) {
    auto x = square_graph();
    auto plan = sweep_events(x, find_generic_direction(x));
    auto trace = handle_trace(plan, 3);
    EXPECT_EQ(plan.initial_rays_down, 0);
    int maxima = 0;
    for (const auto& s : trace.steps) {
        if (s.event.up == 0) {
            ++maxima;
            EXPECT_FALSE(s.trivial);
            EXPECT_EQ(s.handle_index, 2);
        }
    }
    EXPECT_EQ(maxima, 1);
    EXPECT_FALSE(trace.all_trivial);
    EXPECT_FALSE(trace_betti(trace).has_value());
    EXPECT_EQ(trace.steps.back().event.up, 0);
}

TEST(HandleTrace, RaysWithoutMaximumStayTrivial) {
    // A "V" of two rays from a vertex, opening upward: no local maximum.
    SpaceGraphBuilder b(3);
    auto v = b.vertex(pt({0, 0, 0}));
    b.ray(v, vec({1, 0, 1})).ray(v, vec({-1, 0, 1}));
    auto x = b.build();
    auto trace = handle_trace(sweep_events(x, vec({0, 0, 1})), 3);
    EXPECT_TRUE(trace.all_trivial);
    EXPECT_EQ(trace.initial_g, 0);
    EXPECT_EQ(trace.final_g, 1);
}

// Sweep against the genus formula on seeded arrangements.

class SweepProperties : public ::testing::TestWithParam<int> {};

TEST_P(SweepProperties, FinalGenusMatchesFormula) {
    const int n = GetParam();
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const char* profile = seed % 2 ? "mixed" : "generic";
        auto a = generate_random(n, 1 + seed % 10, parse_profile(profile), seed * 7 + 3);
        auto points = multiple_points(a);
        auto x = build_space_graph(a, points);
        std::int64_t k1 = 0;
        auto v1 = find_generic_direction(x, 1, &k1);
        EXPECT_FALSE(check_direction(x, v1));
        auto plan = sweep_events(x, v1);
        auto trace = handle_trace(plan, n);
        EXPECT_TRUE(trace.all_trivial);
        EXPECT_EQ(trace.final_g, genus(a));
        EXPECT_EQ(plan.initial_rays_down, static_cast<std::int64_t>(a.size()));

        std::int64_t excess = 0;
        for (const auto& ev : plan.events) {
            EXPECT_EQ(ev.up, static_cast<std::int64_t>(points[ev.vertex].multiplicity()));
            EXPECT_EQ(ev.down, ev.up);
            excess += ev.up - 1;
        }
        std::int64_t expected_excess = 0;
        for (const auto& [i, count] : multiplicity_vector(points)) expected_excess += (static_cast<std::int64_t>(i) - 1) * count;
        EXPECT_EQ(excess, expected_excess);

        auto v2 = find_generic_direction(x, k1 + 1);
        EXPECT_NE(v1, v2);
        EXPECT_EQ(handle_trace(sweep_events(x, v2), n).final_g, trace.final_g);
    }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, SweepProperties, ::testing::Values(2, 3, 4));
