/* SPDX-License-Identifier: Apache-2.0 */

#include <random>

#include <gtest/gtest.h>

#include "reldyn/errors.hpp"
#include "reldyn/transforms.hpp"

using namespace reldyn;

namespace {

Quantity q(const char* text) { return Quantity::parse(text); }

AffineMap random_map(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (;;) {
        Matrix m(d);
        Vector t(d);
        for (std::size_t i = 0; i < d; ++i) {
            t[i] = Quantity(num(rng), den(rng));
            for (std::size_t j = 0; j < d; ++j) m(i, j) = Quantity(num(rng), den(rng));
        }
        AffineMap f(m, t);
        if (is_invertible(f)) return f;
    }
}

PoincareMap random_poincare(std::mt19937& rng) {
    // boosts by Pythagorean-triple speeds keep entries rational
    static const char* speeds[] = {"0", "3/5", "-4/5", "5/13", "-12/13", "8/17"};
    std::uniform_int_distribution<int> pick(0, 5), num(-5, 5);
    Vector v{q(speeds[pick(rng)]), 0};
    if (euclid_len2(v) < Quantity(1, 4)) v[1] = q(speeds[pick(rng)]) / 2;
    AffineMap f = compose(AffineMap::translate(Vector{num(rng), num(rng), num(rng)}),
                          boost_for_velocity(v));
    return PoincareMap(f);
}

}  // namespace

TEST(Transforms, AffineAlgebra) {
    Point p{2, 3};
    EXPECT_EQ(AffineMap::identity(2).apply(p), p);
    EXPECT_EQ(AffineMap::translate(Vector{1, 0}).apply(p), (Point{3, 3}));
    std::mt19937 rng(3);
    AffineMap f = random_map(rng, 3);
    EXPECT_EQ(compose(f, inverse(f)), AffineMap::identity(3));
    EXPECT_THROW(inverse(AffineMap::scaling(2, 0)), SingularMap);
}

TEST(Transforms, PoincarePredicate) {
    EXPECT_TRUE(is_poincare(AffineMap::identity(4)));
    EXPECT_FALSE(is_poincare(AffineMap::scaling(4, 2)));
    EXPECT_TRUE(is_poincare(boost_for_velocity(Vector{q("3/5"), 0, 0})));
    EXPECT_THROW(PoincareMap(AffineMap::scaling(3, 2)), NotPoincare);
}

TEST(Transforms, BoostForVelocity) {
    EXPECT_EQ(boost_for_velocity(Vector{0, 0, 0}).map(), AffineMap::identity(4));

    PoincareMap b = boost_for_velocity(Vector{q("3/5")});
    Vector image = b.map().apply_linear(Vector{1, q("3/5")});
    EXPECT_TRUE(parallel_factor(image, Vector{1, 0}));
    EXPECT_EQ(mink_len(b.map().apply_linear(Vector{1, 0})), Quantity(1));
    EXPECT_EQ(b.map().linear(0, 0), q("5/4"));

    EXPECT_THROW(boost_for_velocity(Vector{1}), SpeedNotSubluminal);
    EXPECT_THROW(boost_for_velocity(Vector{q("3/5"), q("4/5")}), SpeedNotSubluminal);
}

TEST(Transforms, BoostSignConvention) {
    // a body moving at +3/5 is at rest in the boosted frame, and a body at
    // rest in the world frame moves at -3/5 there
    Vector v{q("3/5"), q("1/5"), 0};
    PoincareMap b = boost_for_velocity(v);
    EXPECT_TRUE(transform_velocity(b, v).is_zero());
    EXPECT_EQ(transform_velocity(b, Vector{0, 0, 0}), -v);
}

TEST(Transforms, BoostWithIrrationalGamma) {
    Vector v{q("1/2"), q("1/3")};
    PoincareMap b = boost_for_velocity(v);
    EXPECT_TRUE(is_poincare(b));
    EXPECT_TRUE(transform_velocity(b, v).is_zero());
}

TEST(Transforms, TimeDilation) {
    EXPECT_EQ(time_dilation_factor(0), Quantity(1));
    EXPECT_EQ(time_dilation_factor(q("3/5")), q("4/5"));
    EXPECT_EQ(time_dilation_factor(q("1/2")), q("sqrt(3)/2"));
    EXPECT_THROW(time_dilation_factor(1), SpeedNotSubluminal);
    EXPECT_THROW(time_dilation_factor(-1), SpeedNotSubluminal);
}

TEST(Transforms, MedianObserver) {
    Vector u{q("3/5")}, v{0};
    EXPECT_EQ(median_velocity(u, v), (Vector{q("1/3")}));
    PoincareMap h = median_observer_boost(u, v);
    EXPECT_EQ(transform_velocity(h, u), (Vector{q("1/3")}));
    EXPECT_EQ(transform_velocity(h, v), (Vector{q("-1/3")}));

    Vector w{q("2/7"), q("1/3")};
    EXPECT_TRUE(median_velocity(w, -w).is_zero());

    EXPECT_THROW(median_observer_boost(u, u), NoMedianNeeded);
    EXPECT_TRUE(median_velocity(v, v).is_zero());
}

TEST(Transforms, MedianObserverNonCollinear) {
    Vector u{q("1/2"), q("1/4"), 0}, v{q("-1/3"), 0, q("1/5")};
    PoincareMap h = median_observer_boost(u, v);
    EXPECT_EQ(transform_velocity(h, u), -transform_velocity(h, v));
}

TEST(Transforms, PoincareMapsPreserveDistance) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int i = 0; i < 50; ++i) {
        PoincareMap f = random_poincare(rng);
        PoincareMap g = random_poincare(rng);
        Point p{Quantity(num(rng), den(rng)), num(rng), num(rng)};
        Point x{num(rng), Quantity(num(rng), den(rng)), num(rng)};
        EXPECT_EQ(mink_dist(f.apply(p), f.apply(x)), mink_dist(p, x));
        EXPECT_TRUE(is_poincare(compose(f, g)));
        EXPECT_TRUE(is_poincare(inverse(f)));
    }
}

TEST(Transforms, LinesMapToLines) {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        AffineMap f = random_map(rng, 3);
        Point a{1, 2, 3}, d{1, q("1/2"), -1};
        auto c = common_line({std::vector<Point>{f.apply(a), f.apply(a + d), f.apply(a + Quantity(7, 3) * d)}});
        EXPECT_TRUE(c.line);
    }
}

TEST(Transforms, WorldlineImage) {
    Worldline ray = Worldline::ray_to(Point{2, 1}, Vector{1, q("1/2")});
    Worldline image = apply(AffineMap::scaling(2, -1), ray);
    // time reversal turns an incoming ray into an outgoing one
    EXPECT_FALSE(image.last());
    EXPECT_EQ(*image.first(), (Point{-2, -1}));
    EXPECT_TRUE(image.contains(Point{4, 2}));
    EXPECT_FALSE(image.contains(Point{-4, -2}));
}
