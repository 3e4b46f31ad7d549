#include <gtest/gtest.h>

#include "pogcat/persistence.hpp"
#include "oracles.hpp"

using namespace pogcat;
using namespace oracle;

TEST(Persistence, CompletionOfHalfOpenInterval) {
    Rational one(1);
    auto G = interval_module(Rational(0), true, &one, false);
    EXPECT_EQ(complete_persistence(G, Rational(1, 2)), 1u);
    EXPECT_EQ(complete_persistence(G, Rational(1)), 0u);
    EXPECT_EQ(complete_persistence(G, Rational(0)), 1u);
    EXPECT_EQ(complete_persistence(G, Rational(-1)), 0u);
}

TEST(Persistence, OpenLeftEndpointIsZeroAtTheEndpoint) {
    Rational one(1);
    auto G = interval_module(Rational(0), false, &one, true);
    EXPECT_EQ(complete_persistence(G, Rational(0)), 0u);
    EXPECT_EQ(complete_persistence(G, Rational(1)), 1u);
    EXPECT_FALSE(G.right_continuous());
    auto H = interval_module(Rational(0), true, nullptr, false);
    EXPECT_TRUE(H.right_continuous());
}

TEST(Persistence, IncompletePresentationBelowRange) {
    auto G = interval_module(Rational(0), true, nullptr, false);
    G.zero_below = false;
    EXPECT_THROW(complete_persistence(G, Rational(-1)), PresentationIncomplete);
}

TEST(Persistence, BarcodeRanksMatchMembership) {
    testgen::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto ends = random_endpoints(rng, 3);
        std::vector<Interval> bars{random_interval(rng, ends), random_interval(rng, ends)};
        auto M = barcode_module(bars);
        for (int64_t k = -30; k <= 30; ++k) {
            Rational x(k, 4);
            size_t expect = 0;
            for (auto& b : bars) expect += b.contains(x) ? 1 : 0;
            EXPECT_EQ(M.rank_at_location(M.locate(x)), expect) << x.str();
        }
    }
}

TEST(Persistence, TransitionsCompose) {
    Rational two(2);
    auto M = barcode_module({{Rational(0), true, two, false}, {Rational(1), false, std::nullopt, false}});
    int a = M.locate(Rational(1, 2)), b = M.locate(Rational(3, 2)), c = M.locate(Rational(3));
    EXPECT_EQ(M.map_between(b, c) * M.map_between(a, b), M.map_between(a, c));
    EXPECT_THROW(M.map_between(c, a), std::invalid_argument);
}

TEST(Persistence, SingleIntervalHoms) {
    Rational two(2);
    auto A = interval_module(Rational(0), true, &two, false);
    auto B = interval_module(Rational(1), true, nullptr, false);
    // [0,2) -> [1,inf): 0 has nowhere to go at 0 < 1, so the hom vanishes
    EXPECT_EQ(check_completion_adjunction(A, B).rational_rank, 0u);
    // [1,inf) -> [0,2): the image may die at 2
    EXPECT_EQ(check_completion_adjunction(B, A).rational_rank, 1u);
    auto C = interval_module(Rational(1), true, &two, false);
    // [1,2) -> [0,2) is nonzero
    EXPECT_EQ(check_completion_adjunction(C, A).rational_rank, 1u);
}

TEST(Persistence, CompletionAdjunctionRandom) {
    testgen::Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto ends = random_endpoints(rng, static_cast<size_t>(testgen::integer(rng, 1, 3)));
        std::vector<Interval> fb, gb;
        for (int i = testgen::integer(rng, 1, 2); i > 0; --i) fb.push_back(random_interval(rng, ends));
        for (int i = testgen::integer(rng, 1, 2); i > 0; --i) gb.push_back(random_interval(rng, ends));
        auto F = barcode_module(fb), G = barcode_module(gb);
        auto rep = check_completion_adjunction(F, G);
        EXPECT_TRUE(rep.ok()) << "trial " << trial;
        size_t oracle = 0;
        auto pts = sample_points(ends);
        for (auto& I : fb)
            for (auto& J : gb) oracle += interval_hom_rank(I, J, pts);
        EXPECT_EQ(rep.real_rank, oracle) << "trial " << trial;
    }
}
