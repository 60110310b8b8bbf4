/* SPDX-License-Identifier: Apache-2.0 */

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "reldyn/errors.hpp"
#include "reldyn/quantity.hpp"

using reldyn::Quantity;

namespace {

Quantity q(const char* text) { return Quantity::parse(text); }

}  // namespace

TEST(Quantity, AdditiveInverse) { EXPECT_TRUE((Quantity(1) + Quantity(-1)).is_zero()); }

TEST(Quantity, ConjugateProduct) {
    Quantity s2 = reldyn::sqrt(Quantity(2));
    // (1 + s)(1 - s) = 1 - 2
    EXPECT_EQ((1 + s2) * (1 - s2), Quantity(-1));
    EXPECT_TRUE(((1 + s2) * (1 - s2)).is_rational());
}

TEST(Quantity, InverseOfRootTwo) {
    Quantity s2 = reldyn::sqrt(Quantity(2));
    EXPECT_EQ(s2.inverse(), s2 / 2);
    EXPECT_EQ(s2.inverse() * s2, Quantity(1));
    EXPECT_EQ(s2.inverse().to_string(), "sqrt(2)/2");
}

TEST(Quantity, DivisionByZeroThrows) {
    EXPECT_THROW(Quantity(0).inverse(), reldyn::DivisionByZero);
    EXPECT_THROW(Quantity(1) / Quantity(0), reldyn::DivisionByZero);
}

TEST(Quantity, Compare) {
    EXPECT_EQ(cmp(Quantity(0), Quantity(0)), std::strong_ordering::equal);
    // 2 < 9/4 and both sides positive
    EXPECT_EQ(cmp(reldyn::sqrt(Quantity(2)), Quantity(3, 2)), std::strong_ordering::less);
    Quantity lhs = reldyn::sqrt(Quantity(2)) + reldyn::sqrt(Quantity(3));
    Quantity rhs = reldyn::sqrt(5 + 2 * reldyn::sqrt(Quantity(6)));
    EXPECT_EQ(cmp(lhs, rhs), std::strong_ordering::equal);
    EXPECT_EQ(lhs, rhs);
}

TEST(Quantity, SqrtExamples) {
    EXPECT_EQ(reldyn::sqrt(Quantity(4)), Quantity(2));
    EXPECT_TRUE(reldyn::sqrt(Quantity(4)).is_rational());
    EXPECT_TRUE(reldyn::sqrt(Quantity(0)).is_zero());
    Quantity r = reldyn::sqrt(Quantity(9, 2));
    EXPECT_EQ(r, 3 * reldyn::sqrt(Quantity(2)) / 2);
    EXPECT_EQ(r * r, Quantity(9, 2));
    EXPECT_EQ(r.to_string(), "3*sqrt(2)/2");
    EXPECT_THROW(reldyn::sqrt(Quantity(-1)), reldyn::NegativeRadicand);
}

TEST(Quantity, SqrtReusesLevels) {
    Quantity s6 = reldyn::sqrt(Quantity(6));
    Quantity s2 = reldyn::sqrt(Quantity(2));
    Quantity s3 = reldyn::sqrt(Quantity(3));
    auto before = reldyn::tower_stats().levels;
    EXPECT_EQ(s2 * s3, s6);
    EXPECT_EQ(reldyn::sqrt(Quantity(24)), 2 * s6);
    EXPECT_EQ(reldyn::sqrt(Quantity(12)), 2 * s3);
    EXPECT_EQ(reldyn::tower_stats().levels, before);
}

TEST(Quantity, SqrtDenestsInsideTheTower) {
    Quantity s2 = reldyn::sqrt(Quantity(2));
    Quantity s3 = reldyn::sqrt(Quantity(3));
    auto before = reldyn::tower_stats().levels;
    // 5 + 2*sqrt(6) = (sqrt 2 + sqrt 3)^2
    EXPECT_EQ(reldyn::sqrt(5 + 2 * s2 * s3), s2 + s3);
    // 3 - 2*sqrt(2) = (sqrt 2 - 1)^2
    EXPECT_EQ(reldyn::sqrt(3 - 2 * s2), s2 - 1);
    EXPECT_EQ(reldyn::tower_stats().levels, before);
}

TEST(Quantity, NestedRadicalSquares) {
    Quantity x = 2 + reldyn::sqrt(Quantity(3));
    Quantity r = reldyn::sqrt(x);
    EXPECT_EQ(r * r, x);
    EXPECT_GT(r, Quantity(0));
    Quantity rr = reldyn::sqrt(r);
    EXPECT_EQ(rr * rr, r);
    EXPECT_EQ(rr * rr * rr * rr, x);
}

TEST(Quantity, Approx) {
    EXPECT_EQ(Quantity(1, 3).approx(4), "0.3333");
    EXPECT_EQ(reldyn::sqrt(Quantity(2)).approx(5), "1.41421");
    EXPECT_EQ(Quantity(0).approx(2), "0.00");
    EXPECT_EQ(Quantity(-1, 3).approx(2), "-0.33");
    EXPECT_EQ(Quantity(-1, 1000).approx(2), "0.00");
    EXPECT_EQ(Quantity(2, 3).approx(3), "0.667");
    EXPECT_EQ((3 * reldyn::sqrt(Quantity(2)) / 2).approx(5), "2.12132");
    EXPECT_EQ(reldyn::sqrt(Quantity(2)).approx(30), "1.414213562373095048801688724210");
    EXPECT_THROW(Quantity(1).approx(0), std::invalid_argument);
}

TEST(Quantity, ParseLiterals) {
    EXPECT_EQ(q("3/5"), Quantity(3, 5));
    EXPECT_EQ(q("-7"), Quantity(-7));
    EXPECT_EQ(q("1.25"), Quantity(5, 4));
    EXPECT_EQ(q(".5"), Quantity(1, 2));
    EXPECT_EQ(q("sqrt(9/2)"), 3 * reldyn::sqrt(Quantity(2)) / 2);
    EXPECT_EQ(q("2*(1 + sqrt(2)) - 3/4"), Quantity(5, 4) + 2 * reldyn::sqrt(Quantity(2)));
    EXPECT_EQ(q("3·sqrt(2)/2"), q("3*sqrt(2)/2"));
    EXPECT_EQ(q("−1"), Quantity(-1));
    EXPECT_EQ(q("sqrt(5 + 2*sqrt(6))"), q("sqrt(2) + sqrt(3)"));
}

TEST(Quantity, ParseErrors) {
    EXPECT_THROW(q("sqrt(-1)"), reldyn::ParseError);
    EXPECT_THROW(q("1/0"), reldyn::ParseError);
    EXPECT_THROW(q(""), reldyn::ParseError);
    EXPECT_THROW(q("1 +"), reldyn::ParseError);
    EXPECT_THROW(q("abc"), reldyn::ParseError);
    EXPECT_THROW(q("(1"), reldyn::ParseError);
    try {
        q("1 + x");
        FAIL();
    } catch (const reldyn::ParseError& e) {
        EXPECT_EQ(e.column(), 5U);
    }
}

TEST(Quantity, PrintParseRoundTrip) {
    Quantity s2 = reldyn::sqrt(Quantity(2));
    Quantity s5 = reldyn::sqrt(Quantity(5));
    Quantity nested = reldyn::sqrt(3 + s5);
    for (const Quantity& x : {Quantity(0), Quantity(-7, 3), s2, -s2 / 2, 1 + s2 * s5 / 7,
                              nested, nested * s2 - Quantity(1, 9)}) {
        EXPECT_EQ(Quantity::parse(x.to_string()), x) << x.to_string();
    }
}

TEST(Quantity, SignDecidedSymbolicallyWhenIntervalsStraddle) {
    // A difference far below double resolution.
    Quantity s2 = reldyn::sqrt(Quantity(2));
    mpq_class close("665857/470832");  // convergent of sqrt(2)
    Quantity d = s2 - Quantity(close);
    EXPECT_LT(d, Quantity(0));
    Quantity tiny = d * d * d * d * d;
    EXPECT_LT(tiny, Quantity(0));
    EXPECT_GT(-tiny, Quantity(0));
    EXPECT_FALSE(tiny.is_zero());
}

TEST(Quantity, RandomizedFieldLaws) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-9, 9);
    std::uniform_int_distribution<int> radicand(2, 12);
    auto draw = [&] {
        Quantity x(small(rng), 1 + std::abs(small(rng)));
        if (rng() % 2 == 0) x += Quantity(small(rng)) * reldyn::sqrt(Quantity(radicand(rng)));
        if (rng() % 4 == 0) x *= reldyn::sqrt(2 + reldyn::sqrt(Quantity(radicand(rng))));
        return x;
    };
    for (int i = 0; i < 200; ++i) {
        Quantity a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-6);
        Quantity aa = abs(a);
        Quantity r = reldyn::sqrt(aa);
        EXPECT_EQ(r * r, aa);
        EXPECT_GE(r, Quantity(0));
        if (a < b) {
            EXPECT_LT(a + c, b + c);
            if (c > Quantity(0)) EXPECT_LT(a * c, b * c);
        }
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Quantity(1));
    }
}
