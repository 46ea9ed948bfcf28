#include "linarr/error.hpp"
#include "linarr/geometry.hpp"
#include "linarr/io.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace linarr;
using linarr::testing::pt;
using linarr::testing::vec;

namespace {

IntVec ints(std::initializer_list<long> c) {
    IntVec v;
    for (long x : c) v.emplace_back(x);
    return v;
}

Line line_of(std::initializer_list<long> p, std::initializer_list<long> u) {
    return canonicalize_line(pt(p), vec(u));
}

RatVec random_rats(SplitMix64& rng, std::size_t n) {
    RatVec v(n);
    for (auto& x : v) x = Rat(rng.uniform(-20, 20), rng.uniform(1, 7));
    return v;
}

}  // namespace

TEST(Rational, ParsesAndFormats) {
    EXPECT_EQ(parse_rat("3"), Rat(3));
    EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
    EXPECT_EQ(format_rat(parse_rat("10/4")), "5/2");
    EXPECT_EQ(format_rat(Rat(-7)), "-7");
    EXPECT_EQ(parse_rat("123456789012345678901234567890/3"),
              Rat(Int("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformedInput) {
    for (const char* bad : {"1/0", "", "/2", "1/", "1.5", "abc", "--1", "1/-2"}) {
        try {
            parse_rat(bad);
            FAIL() << "accepted " << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(CanonicalizeLine, ScalesDirectionToPrimitive) {
    Line l = line_of({0, 0, 5}, {2, 0, 0});
    EXPECT_EQ(l.base, pt({0, 0, 5}));
    EXPECT_EQ(l.dir, ints({1, 0, 0}));
}

TEST(CanonicalizeLine, FlipsSignOfDirection) {
    Line l = line_of({1, 1}, {0, -3});
    EXPECT_EQ(l.base, pt({1, 0}));
    EXPECT_EQ(l.dir, ints({0, 1}));
}

TEST(CanonicalizeLine, ProjectsBaseOntoOrigin) {
    Line l = line_of({3, 0, 0}, {1, 0, 0});
    EXPECT_EQ(l.base, pt({0, 0, 0}));
    EXPECT_EQ(l.dir, ints({1, 0, 0}));
}

TEST(CanonicalizeLine, ClearsRationalDenominators) {
    Line l = canonicalize_line(pt({0, 0}), RatVec{Rat(-1, 2), Rat(1, 3)});
    EXPECT_EQ(l.dir, ints({3, -2}));
}

TEST(CanonicalizeLine, Errors) {
    try {
        canonicalize_line(pt({0, 0}), vec({0, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroDirection);
    }
    try {
        canonicalize_line(pt({0, 0, 0}), vec({1, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    try {
        canonicalize_line(pt({0}), vec({1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(IntersectLines, AxesMeetAtOrigin) {
    auto hit = intersect_lines(line_of({0, 0}, {1, 0}), line_of({0, 0}, {0, 1}));
    ASSERT_TRUE(std::holds_alternative<PointN>(hit));
    EXPECT_EQ(std::get<PointN>(hit), pt({0, 0}));
}

TEST(IntersectLines, ParallelDistinctIsEmpty) {
    auto hit = intersect_lines(line_of({0, 0}, {1, 0}), line_of({0, 1}, {1, 0}));
    EXPECT_TRUE(std::holds_alternative<Empty>(hit));
}

TEST(IntersectLines, SkewIsEmpty) {
    auto hit = intersect_lines(line_of({0, 0, 0}, {1, 0, 0}), line_of({0, 1, 0}, {0, 0, 1}));
    EXPECT_TRUE(std::holds_alternative<Empty>(hit));
}

TEST(IntersectLines, SameLineIsCoincident) {
    auto hit = intersect_lines(line_of({0, 0, 0}, {1, 1, 0}), line_of({4, 4, 0}, {-2, -2, 0}));
    EXPECT_TRUE(std::holds_alternative<Coincident>(hit));
}

TEST(IntersectLines, RationalCrossing) {
    // y = x/3 and y = 1 - x meet at (3/4, 1/4).
    auto hit = intersect_lines(line_of({0, 0}, {3, 1}), line_of({0, 1}, {1, -1}));
    ASSERT_TRUE(std::holds_alternative<PointN>(hit));
    EXPECT_EQ(std::get<PointN>(hit), (PointN{{Rat(3, 4), Rat(1, 4)}}));
}

TEST(IntersectLines, DimensionMismatch) {
    EXPECT_THROW(intersect_lines(line_of({0, 0}, {1, 0}), line_of({0, 0, 0}, {1, 0, 0})), Error);
}

TEST(PointOnLine, Incidence) {
    Line x_axis = line_of({0, 0, 0}, {1, 0, 0});
    EXPECT_TRUE(point_on_line(pt({2, 0, 0}), x_axis));
    EXPECT_FALSE(point_on_line(pt({0, 1, 0}), x_axis));
    Line l = line_of({1, 2, 3}, {4, -1, 2});
    EXPECT_TRUE(point_on_line(l.base, l));
}

TEST(Distance, PointAndLineDistances) {
    EXPECT_EQ(distance_squared(pt({0, 3, 4}), line_of({0, 0, 0}, {1, 0, 0})), Rat(25));
    EXPECT_EQ(distance_squared(line_of({0, 0, 0}, {1, 0, 0}), line_of({0, 0, 2}, {0, 1, 0})), Rat(4));
    EXPECT_EQ(distance_squared(line_of({0, 0}, {1, 0}), line_of({0, 3}, {1, 0})), Rat(9));
    EXPECT_EQ(distance_squared(line_of({0, 0}, {1, 0}), line_of({0, 0}, {1, 1})), Rat(0));
}

// Properties over seeded random rational input.

TEST(GeometryProperties, CanonicalizeIsIdempotent) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        PointN p{random_rats(rng, n)};
        RatVec u = random_rats(rng, n);
        if (std::all_of(u.begin(), u.end(), [](const Rat& x) { return x == 0; })) continue;
        Line l = canonicalize_line(p, u);
        EXPECT_EQ(canonicalize_line(l.base, to_rat(l.dir)), l);
        EXPECT_EQ(dot(l.base.coords, std::span<const Int>(l.dir)), Rat(0));
    }
}

TEST(GeometryProperties, PointsAlongTheLineAreIncident) {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        PointN p{random_rats(rng, n)};
        RatVec u = random_rats(rng, n);
        if (std::all_of(u.begin(), u.end(), [](const Rat& x) { return x == 0; })) continue;
        Line l = canonicalize_line(p, u);
        Rat t(rng.uniform(-50, 50), rng.uniform(1, 9));
        PointN q = p;
        for (std::size_t k = 0; k < n; ++k) q[k] += t * u[k];
        EXPECT_TRUE(point_on_line(q, l));
    }
}

TEST(GeometryProperties, IntersectionIsSymmetricAndIncident) {
    SplitMix64 rng(13);
    int points_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        // Force frequent crossings by sharing an anchor point half the time.
        PointN anchor{random_rats(rng, n)};
        PointN other = trial % 2 ? anchor : PointN{random_rats(rng, n)};
        RatVec u = random_rats(rng, n), w = random_rats(rng, n);
        auto nonzero = [](const RatVec& v) { return std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; }); };
        if (!nonzero(u) || !nonzero(w)) continue;
        Line a = canonicalize_line(anchor, u);
        Line b = canonicalize_line(other, w);
        auto ab = intersect_lines(a, b);
        auto ba = intersect_lines(b, a);
        EXPECT_EQ(ab, ba);
        if (const auto* x = std::get_if<PointN>(&ab)) {
            ++points_seen;
            EXPECT_TRUE(point_on_line(*x, a));
            EXPECT_TRUE(point_on_line(*x, b));
        }
    }
    EXPECT_GT(points_seen, 100);
}
