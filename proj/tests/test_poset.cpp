#include "linarr/io.hpp"
#include "linarr/poset.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

using namespace linarr;
using linarr::testing::axes;
using linarr::testing::generic_triangle;
using linarr::testing::raw;

namespace {

using Edge = std::pair<std::string, std::string>;

std::vector<Edge> named_hasse(const IntersectionPoset& p) {
    std::vector<Edge> out;
    for (const auto& [x, y] : hasse_edges(p)) out.emplace_back(p.elements[x].id(), p.elements[y].id());
    return out;
}

Arrangement two_skew() {
    return build_arrangement(3, {raw({0, 0, 0}, {1, 0, 0}), raw({0, 0, 1}, {0, 1, 0})});
}

Arrangement planar_pencil(int k) {
    std::vector<RawLine> lines;
    for (int i = 0; i < k; ++i) lines.push_back(raw({1, 1}, {1, i}));
    return build_arrangement(2, lines);
}

}  // namespace

TEST(BuildPoset, TwoCrossingLines) {
    auto p = build_poset(axes(3, 2));
    ASSERT_EQ(p.elements.size(), 4u);
    EXPECT_EQ(p.elements[0].id(), "p0");
    EXPECT_EQ(p.elements[3].id(), "T");
    EXPECT_TRUE(p.less(0, 1));
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_TRUE(p.less(0, 3));
    EXPECT_TRUE(p.less(1, 3));
    EXPECT_TRUE(p.less(2, 3));
    EXPECT_EQ(p.relations.size(), 5u);
}

TEST(BuildPoset, SkewPairOnlyBelowTop) {
    auto p = build_poset(two_skew());
    EXPECT_EQ(p.relations, (std::set<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}}));
}

TEST(BuildPoset, ConcurrentTripleHasOnePoint) {
    auto p = build_poset(axes(3, 3));
    EXPECT_EQ(p.elements.size(), 5u);
    for (std::size_t l = 1; l <= 3; ++l) EXPECT_TRUE(p.less(0, l));
}

TEST(RecoverT, Examples) {
    EXPECT_EQ(recover_t(build_poset(generic_triangle(2))), (MultiplicityVector{{2, 3}}));
    EXPECT_TRUE(recover_t(build_poset(two_skew())).empty());
    EXPECT_EQ(recover_t(build_poset(planar_pencil(5))), (MultiplicityVector{{5, 1}}));
}

TEST(RecoverD, Examples) {
    EXPECT_EQ(recover_d(build_poset(axes(3, 3))), 3u);
    EXPECT_EQ(recover_d(build_poset(build_arrangement(2, {raw({0, 0}, {1, 0})}))), 1u);
    auto skew4 = build_arrangement(3, {raw({0, 0, 0}, {1, 0, 0}), raw({0, 0, 1}, {0, 1, 0}),
                                       raw({0, 5, 0}, {0, 0, 1}), raw({7, 0, 3}, {0, 1, 0})});
    EXPECT_EQ(recover_d(build_poset(skew4)), 4u);
}

TEST(HasseEdges, Examples) {
    EXPECT_EQ(named_hasse(build_poset(axes(2, 2))),
              (std::vector<Edge>{{"p0", "l0"}, {"p0", "l1"}, {"l0", "T"}, {"l1", "T"}}));
    EXPECT_EQ(named_hasse(build_poset(build_arrangement(2, {raw({0, 0}, {1, 0})}))), (std::vector<Edge>{{"l0", "T"}}));
    EXPECT_EQ(named_hasse(build_poset(two_skew())), (std::vector<Edge>{{"l0", "T"}, {"l1", "T"}}));
}

TEST(HasseEdges, DotListing) {
    auto dot = hasse_dot(build_poset(axes(2, 2)));
    EXPECT_NE(dot.find("p0 -> l0;"), std::string::npos);
    EXPECT_NE(dot.find("l1 -> T;"), std::string::npos);
}

TEST(PosetProperties, RoundTripOverSeededCorpus) {
    for (int n : {2, 3, 4}) {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const char* profile = seed % 3 == 0 ? "generic" : (seed % 3 == 1 ? "mixed" : "pencil(3)");
            auto a = generate_random(n, 3 + seed % 8, parse_profile(profile), seed);
            auto points = multiple_points(a);
            auto p = build_poset(a, points);
            EXPECT_EQ(recover_t(p), multiplicity_vector(points));
            EXPECT_EQ(recover_d(p), a.size());
            EXPECT_TRUE(is_strict_partial_order(p));

            // Chains have at most three elements: point < line < T.
            for (const auto& [x, y] : p.relations) {
                for (const auto& [y2, z] : p.relations) {
                    if (y2 != y) continue;
                    EXPECT_EQ(p.elements[x].kind, PosetElement::Kind::MPoint);
                    EXPECT_EQ(p.elements[z].kind, PosetElement::Kind::Top);
                }
            }
            // Up-set of a point (excluding T) is its multiplicity.
            for (std::size_t i = 0; i < points.size(); ++i) {
                std::size_t up = 0;
                for (std::size_t y = 0; y < p.top(); ++y) up += p.less(i, y);
                EXPECT_EQ(up, points[i].multiplicity());
            }
        }
    }
}
