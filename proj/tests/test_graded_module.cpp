#include <gtest/gtest.h>

#include "pogcat/graded_module.hpp"
#include "pogcat/monoid_ring.hpp"
#include "support.hpp"

using namespace pogcat;

namespace {

// Rank one in grades lo..hi of (1/n)Z, the step acting by the scalar s; so
// rho = k steps acts by s^k. Valid for any s.
GradedModule scalar_module(int64_t n, int64_t lo, int64_t hi, int64_t s) {
    Pog p = Pog::scaled_integers(n);
    GradedModule M(p);
    for (int64_t k = lo; k <= hi; ++k) M.set_rank(Rational(k, n), 1);
    for (int64_t a = lo; a <= hi; ++a)
        for (int64_t b = a; b <= hi; ++b) {
            int64_t v = 1;
            for (int64_t i = a; i < b; ++i) v *= s;
            M.set_action(Rational(a, n), Rational(b - a, n), IntMatrix{{v}});
        }
    return M;
}

}  // namespace

TEST(GradedModule, ShiftModulePassesLaws) {
    for (int64_t n : {1, 2, 4}) {
        auto M = shift_module(n, Rational(3));
        auto rep = module_check(M);
        EXPECT_TRUE(rep.ok()) << n;
        EXPECT_EQ(M.total_rank(), static_cast<size_t>(3 * n));
    }
}

TEST(GradedModule, CorruptedActionIsReported) {
    auto M = scalar_module(1, 0, 3, 2);
    M.set_action(Rational(0), Rational(2), IntMatrix{{5}});
    auto rep = module_check(M);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().grade, Rational(0));
}

TEST(GradedModule, MissingActionKeyMeansZero) {
    GradedModule M(Pog::integers());
    M.set_rank(Rational(0), 1);
    M.set_rank(Rational(1), 1);
    EXPECT_TRUE(M.action(Rational(1), Rational(0)).is_zero());
    EXPECT_EQ(M.action(Rational(0), Rational(1)), IntMatrix::identity(1));
    EXPECT_TRUE(module_check(M).ok());
}

TEST(GradedModule, ActionShapeIsChecked) {
    GradedModule M(Pog::integers());
    M.set_rank(Rational(0), 2);
    M.set_rank(Rational(1), 1);
    EXPECT_THROW(M.set_action(Rational(0), Rational(1), IntMatrix{{1}}), std::invalid_argument);
    EXPECT_THROW(M.set_action(Rational(0), Rational(-1), IntMatrix(0, 2)), MalformedElement);
}

TEST(GradedModule, RestrictKeepsSubgroupGrades) {
    auto M = shift_module(4, Rational(2));
    auto R = restrict(M, Pog::scaled_integers(2));
    EXPECT_EQ(R.support(), (std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}));
    EXPECT_TRUE(module_check(R).ok());
    EXPECT_THROW(restrict(M, Pog::scaled_integers(3)), UnsupportedInclusion);
}

TEST(GradedModule, TensorMultipliesScalarsGradewise) {
    testgen::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int64_t n = testgen::integer(rng, 1, 3);
        int64_t s = testgen::integer(rng, -3, 3), t = testgen::integer(rng, -3, 3);
        auto M = scalar_module(n, 0, 4, s);
        auto N = scalar_module(n, 2, 6, t);
        auto P = tensor(M, N);
        EXPECT_TRUE(module_check(P).ok());
        // oracle: support is the overlap 2..4 and the step acts by s*t
        EXPECT_EQ(P.support().size(), 3u);
        EXPECT_EQ(P.action(Rational(1, n), Rational(2, n)), (IntMatrix{{s * t}}));
        EXPECT_EQ(P.rank(Rational(1, n)), 0u);
    }
}

TEST(GradedModule, TensorIsRankMultiplicative) {
    GradedModule M(Pog::integers()), N(Pog::integers());
    M.set_rank(Rational(0), 2);
    N.set_rank(Rational(0), 3);
    N.set_rank(Rational(1), 1);
    auto P = tensor(M, N);
    EXPECT_EQ(P.rank(Rational(0)), 6u);
    EXPECT_EQ(P.rank(Rational(1)), 0u);
    EXPECT_THROW(tensor(M, GradedModule(Pog::scaled_integers(2))), DescriptorMismatch);
}

TEST(GradedModule, QuotientByIdealMatchesTruncatedRing) {
    // (M / I_k M) over (1/n)Z has one Z in each grade below k; the monoid
    // ring side is the truncated basis of Z[(1/n)Z+]/I_k.
    for (int64_t n : {1, 2, 4})
        for (int64_t k : {1, 2, 3}) {
            auto M = shift_module(n, Rational(k + 2));
            auto Q = quotient_by_ideal(M, Rational(k));
            size_t total = 0;
            for (auto& [g, grp] : Q) {
                EXPECT_LT(g, Rational(k));
                EXPECT_EQ(grp.free_rank, 1u);
                EXPECT_TRUE(grp.torsion.empty());
                total += grp.free_rank;
            }
            EXPECT_EQ(total, ring_completion(Pog::scaled_integers(n), Rational(k)).rank());
        }
}

TEST(GradedModule, QuotientByIdealSeesTorsion) {
    auto M = scalar_module(1, 0, 2, 3);
    auto Q = quotient_by_ideal(M, Rational(1));
    EXPECT_EQ(Q.at(Rational(0)).free_rank, 1u);
    EXPECT_EQ(Q.at(Rational(1)).torsion, (std::vector<int64_t>{3}));
    EXPECT_EQ(Q.at(Rational(2)).torsion, (std::vector<int64_t>{3}));
}

TEST(GradedModule, EquivariantizeIdentify) {
    // period-2 module on grades 0..5: the step acts by 1 from even grades
    // and by 0 from odd ones, all longer actions vanish
    GradedModule M(Pog::integers());
    for (int64_t g = 0; g <= 5; ++g) M.set_rank(Rational(g), 1);
    for (int64_t g = 0; g + 1 <= 5; ++g) M.set_action(Rational(g), Rational(1), IntMatrix{{g % 2 == 0 ? 1 : 0}});
    ASSERT_TRUE(module_check(M).ok());
    Periodicity phi;
    for (int64_t g = 0; g + 2 <= 5; ++g) phi[Rational(g)] = IntMatrix{{1}};
    auto E = equivariantize(M, Rational(2), EquivariantMode::identify, phi);
    EXPECT_EQ(E.pog().str(), "Z/1%2Z");
    EXPECT_EQ(E.rank(Rational(0)), 1u);
    EXPECT_EQ(E.rank(Rational(1)), 1u);
    EXPECT_TRUE(module_check(E).ok());
    EXPECT_EQ(E.action(Rational(1), Rational(0)), IntMatrix{{1}});
    EXPECT_EQ(E.action(Rational(1), Rational(1)), IntMatrix{{0}});
}

TEST(GradedModule, EquivariantizeIdentifyTransportsThroughPhi) {
    // phi = -1 twists the identification: the step from [1] back to [0]
    // lands on grade 2 and is carried to grade 0 by phi^{-1}.
    auto M = scalar_module(1, 0, 3, 1);
    Periodicity phi{{Rational(0), IntMatrix{{-1}}}, {Rational(1), IntMatrix{{-1}}}};
    auto E = equivariantize(M, Rational(2), EquivariantMode::identify, phi);
    EXPECT_EQ(E.action(Rational(1), Rational(1)), IntMatrix{{-1}});
    EXPECT_EQ(E.action(Rational(1), Rational(0)), IntMatrix{{1}});
}

TEST(GradedModule, EquivariantizeFreeSumsCosets) {
    auto M = scalar_module(1, 0, 3, 1);
    auto E = equivariantize(M, Rational(2), EquivariantMode::free);
    EXPECT_EQ(E.rank(Rational(0)), 2u);
    EXPECT_EQ(E.rank(Rational(1)), 2u);
    EXPECT_TRUE(module_check(E).ok());
    // oracle: the step sends grade 0 -> 1 and 2 -> 3, block by block
    EXPECT_EQ(E.action(Rational(1), Rational(0)), (IntMatrix{{1, 0}, {0, 1}}));
    // grade 1 -> 2 lands in the second slot of coset [0]; grade 3 -> 4 is outside the support
    EXPECT_EQ(E.action(Rational(1), Rational(1)), (IntMatrix{{0, 0}, {1, 0}}));
}

TEST(GradedModule, EquivariantizeRejectsBadData) {
    auto M = scalar_module(1, 0, 3, 1);
    EXPECT_THROW(equivariantize(M, Rational(2), EquivariantMode::identify), std::invalid_argument);
    GradedModule gap(Pog::integers());
    gap.set_rank(Rational(0), 1);
    gap.set_rank(Rational(4), 1);
    EXPECT_THROW(equivariantize(gap, Rational(2), EquivariantMode::identify, {{Rational(0), IntMatrix{{1}}}}),
                 std::invalid_argument);
    Periodicity bad{{Rational(0), IntMatrix{{2}}}, {Rational(1), IntMatrix{{1}}}};
    EXPECT_THROW(equivariantize(M, Rational(2), EquivariantMode::identify, bad), std::invalid_argument);
}
