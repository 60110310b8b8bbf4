/* SPDX-License-Identifier: Apache-2.0 */

#include <random>

#include <gtest/gtest.h>

#include "reldyn/errors.hpp"
#include "reldyn/minkowski.hpp"

using namespace reldyn;

namespace {

Quantity q(const char* text) { return Quantity::parse(text); }

}  // namespace

TEST(Minkowski, EuclideanLength) {
    EXPECT_EQ(euclid_len(Vector{0, 0, 0}), Quantity(0));
    EXPECT_EQ(euclid_len(Vector{3, 4}), Quantity(5));
    EXPECT_EQ(euclid_len(Vector{1, 1}), sqrt(Quantity(2)));
}

TEST(Minkowski, SignedLength) {
    EXPECT_EQ(mink_len(Vector{1, 0, 0, 0}), Quantity(1));
    EXPECT_EQ(mink_len(Vector{1, 1, 0, 0}), Quantity(0));
    EXPECT_EQ(mink_len(Vector{0, 1, 0, 0}), Quantity(-1));
}

TEST(Minkowski, Distance) {
    Point p{q("7/3"), 2};
    EXPECT_EQ(mink_dist(p, p), Quantity(0));
    EXPECT_EQ(mink_dist(Point{2, 0}, Point{1, 0}), Quantity(1));
    EXPECT_EQ(mink_dist(Point{0, 0}, Point{q("3/5"), 1}), q("-4/5"));
    EXPECT_THROW(mink_dist(Point{0, 0}, Point{0, 0, 0}), DimensionMismatch);
}

TEST(Minkowski, SlopeOne) {
    EXPECT_TRUE(is_slope_one(Point{0, 0}, Point{1, 1}));
    EXPECT_TRUE(is_slope_one(Point{0, 0, 0}, Point{5, 3, 4}));
    EXPECT_FALSE(is_slope_one(Point{0, 0}, Point{2, 1}));
    EXPECT_THROW(is_slope_one(Point{1, 1}, Point{1, 1}), DegeneratePair);
}

TEST(Minkowski, Containment) {
    Segment s{Point{0, 0}, Point{2, 2}};
    EXPECT_TRUE(s.contains(Point{1, 1}));
    EXPECT_FALSE(s.contains(Point{3, 3}));
    EXPECT_TRUE(Line(Point{0, 0}, Vector{1, q("3/5")}).contains(Point{5, 3}));
    EXPECT_THROW(s.contains(Point{1, 1, 1}), DimensionMismatch);
}

TEST(Minkowski, CommonLine) {
    auto r = common_line({std::vector<Point>{Point{0, 0}, Point{1, 1}, Point{2, 2}}});
    ASSERT_TRUE(r.line);
    EXPECT_EQ(*r.line, Line(Point{0, 0}, Vector{1, 1}));

    r = common_line({std::vector<Point>{Point{0, 0}, Point{1, 1}, Point{1, 0}}});
    EXPECT_FALSE(r.line);
    EXPECT_FALSE(r.degenerate);

    r = common_line({Segment{Point{0, 0}, Point{1, 2}}, Segment{Point{1, 2}, Point{3, 6}}});
    ASSERT_TRUE(r.line);
    EXPECT_TRUE(parallel_factor(r.line->direction, Vector{1, 2}));

    r = common_line({std::vector<Point>{Point{4, 4}, Point{4, 4}}});
    EXPECT_FALSE(r.line);
    EXPECT_TRUE(r.degenerate);

    EXPECT_THROW(common_line({}), EmptyInput);
}

TEST(Minkowski, LineEqualityIsPointSetEquality) {
    EXPECT_EQ(Line(Point{0, 0}, Vector{1, 2}), Line(Point{1, 2}, Vector{-2, -4}));
    EXPECT_NE(Line(Point{0, 0}, Vector{1, 2}), Line(Point{0, 1}, Vector{1, 2}));
}

TEST(Minkowski, WorldlineKinds) {
    Worldline ray = Worldline::ray_to(Point{2, 1}, Vector{1, q("1/2")});
    EXPECT_EQ(ray.kind(), WorldlineKind::Ray);
    EXPECT_EQ(*ray.last(), (Point{2, 1}));
    EXPECT_FALSE(ray.first());
    EXPECT_TRUE(ray.contains(Point{0, 0}));
    EXPECT_FALSE(ray.contains(Point{4, 2}));
    EXPECT_EQ(*ray.velocity(), (Vector{q("1/2")}));
    EXPECT_EQ(*ray.at_time(0), (Point{0, 0}));
    EXPECT_FALSE(ray.at_time(3));

    Worldline seg = Worldline::segment(Point{3, 3}, Point{1, 1});
    EXPECT_EQ(seg.kind(), WorldlineKind::Segment);
    EXPECT_EQ(*seg.first(), (Point{1, 1}));
    EXPECT_EQ(*seg.last(), (Point{3, 3}));

    Worldline horizontal = Worldline::line(Point{1, 0}, Vector{0, 1});
    EXPECT_FALSE(horizontal.velocity());
    EXPECT_FALSE(horizontal.at_time(1));
    EXPECT_TRUE(horizontal.contains(Point{1, 7}));

    Worldline e = Worldline::event(Point{2, 5}, Vector{1, 0});
    EXPECT_TRUE(e.single_point());
    EXPECT_FALSE(e.velocity());
    EXPECT_EQ(*e.at_time(2), (Point{2, 5}));
}

TEST(Minkowski, RandomizedProperties) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    auto r = [&] { return Quantity(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Point p{r(), r(), r()}, x{r(), r(), r()};
        EXPECT_EQ(mink_dist(p, x), mink_dist(x, p));
        EXPECT_EQ(mink_len(p - x).sign(), mink_len2(p - x).sign());
        if (p != x) EXPECT_EQ(is_slope_one(p, x), mink_dist(p, x).is_zero());
        Vector d = x - p;
        if (!d.is_zero()) {
            auto c = common_line({std::vector<Point>{p, x, p + r() * d}});
            ASSERT_TRUE(c.line);
            EXPECT_TRUE(c.line->contains(p) && c.line->contains(x));
        }
    }
}
