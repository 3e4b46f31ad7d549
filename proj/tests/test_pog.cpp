#include <gtest/gtest.h>

#include "pogcat/pog.hpp"
#include "support.hpp"

using namespace pogcat;

TEST(Pog, ConeMembership) {
    EXPECT_TRUE(Pog::scaled_integers(2).cone_contains(Rational(3, 2)));
    EXPECT_FALSE(Pog::rationals().cone_contains(Rational(-1, 3)));
    EXPECT_THROW(Pog::integers().cone_contains(Rational(1, 2)), MalformedElement);
}

TEST(Pog, QuotientConeUsesNonnegativeLifts) {
    Pog q = Pog::parse("Q%Z");
    // the coset [1/3] has nonnegative lifts 1/3 + k, e.g. 4/3
    bool found = false;
    for (int k = 0; k < 3; ++k) found |= Pog::rationals().cone_contains(Rational(1, 3) + Rational(k));
    EXPECT_EQ(q.cone_contains(Rational(4, 3)), found);
    EXPECT_EQ(q.normalize(Rational(4, 3)), Rational(1, 3));
    EXPECT_EQ(q.normalize(Rational(-1, 3)), Rational(2, 3));
}

TEST(Pog, ParseAndRender) {
    EXPECT_EQ(Pog::parse("Z/4%Z").str(), "Z/4%Z");
    EXPECT_EQ(Pog::parse("Z/4%Z").order(), 4);
    EXPECT_EQ(Pog::parse("Q").str(), "Q");
    EXPECT_EQ(Pog::parse("Z/1"), Pog::integers());
    EXPECT_THROW(Pog::parse("R"), std::invalid_argument);
    EXPECT_THROW(Pog::parse("Z/0"), std::invalid_argument);
    EXPECT_THROW(Pog::parse("Z/2%1/3Z"), std::invalid_argument);
}

TEST(Pog, OrderAxiomsAndLeftInvariance) {
    testgen::Rng rng(1);
    Pog q = Pog::rationals();
    for (int i = 0; i < 100; ++i) {
        Rational a = testgen::rational(rng, 10, 6), b = testgen::rational(rng, 10, 6), c = testgen::rational(rng, 10, 6);
        EXPECT_TRUE(q.leq(a, a));
        if (q.leq(a, b) && q.leq(b, a)) EXPECT_EQ(a, b);
        if (q.leq(a, b) && q.leq(b, c)) EXPECT_TRUE(q.leq(a, c));
        if (q.leq(a, b)) EXPECT_TRUE(q.leq(c + a, c + b));
        EXPECT_EQ(q.leq(a, b), a <= b);
    }
    EXPECT_TRUE(q.leq(Rational(0), Rational(5, 7)));
    EXPECT_FALSE(q.leq(Rational(5, 7), Rational(0)));
}

TEST(Pog, FloorAndCeiling) {
    Pog z = Pog::integers(), q = Pog::rationals();
    EXPECT_EQ(floor_to(z, q, Rational(1, 2)), Rational(0));
    EXPECT_EQ(ceil_to(z, q, Rational(1, 2)), Rational(1));
    // not additive
    Rational h(1, 2);
    EXPECT_NE(floor_to(z, q, h) + floor_to(z, q, h), floor_to(z, q, h + h));
    // floor_{(1/2)Z in (1/6)Z}(5/6): scan multiples of 1/2 below 5/6
    Rational best(-100);
    for (int k = -10; k <= 10; ++k)
        if (Rational(k, 2) <= Rational(5, 6)) best = max(best, Rational(k, 2));
    EXPECT_EQ(floor_to(Pog::scaled_integers(2), Pog::scaled_integers(6), Rational(5, 6)), best);
    EXPECT_THROW(floor_to(q, q, h), UnsupportedInclusion);
    EXPECT_THROW(floor_to(Pog::scaled_integers(4), Pog::scaled_integers(6), h), UnsupportedInclusion);
}

TEST(Pog, FloorCeilAdjunctions) {
    testgen::Rng rng(2);
    Pog sub = Pog::scaled_integers(3), sup = Pog::rationals();
    for (int i = 0; i < 200; ++i) {
        Rational g = testgen::rational(rng, 30, 12);
        Rational s(testgen::integer(rng, -30, 30), 3);
        Rational f = floor_to(sub, sup, g), c = ceil_to(sub, sup, g);
        EXPECT_LE(f, g);
        EXPECT_LE(g, c);
        EXPECT_EQ(s <= g, s <= f);
        EXPECT_EQ(g <= s, c <= s);
    }
}

TEST(Pog, FactorialExhaustion) {
    auto e = exhaustion(Pog::rationals(), 3);
    ASSERT_EQ(e.chain.size(), 3u);
    EXPECT_EQ(e.chain[0], Pog::scaled_integers(1));
    EXPECT_EQ(e.chain[1], Pog::scaled_integers(2));
    EXPECT_EQ(e.chain[2], Pog::scaled_integers(6));
    EXPECT_EQ(e.witnesses[1], std::make_pair(int64_t{2}, int64_t{6}));
    for (size_t i = 0; i + 1 < e.chain.size(); ++i) EXPECT_TRUE(e.chain[i].included_in(e.chain[i + 1]));
    for (int q = 1; q <= 3; ++q)
        for (int p = -10; p <= 10; ++p) EXPECT_TRUE(e.chain.back().contains(Rational(p, q)));
    auto eq = exhaustion(Pog::parse("Q%Z"), 3);
    EXPECT_EQ(eq.chain.back().str(), "Z/6%Z");
    EXPECT_THROW(exhaustion(Pog::integers(), 2), std::invalid_argument);
}
