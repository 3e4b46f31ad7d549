#include <gtest/gtest.h>

#include "pogcat/almost.hpp"
#include "support.hpp"

using namespace pogcat;

namespace {

const Rational kOne(1);

TruncatedModuleMap multiplication(const Rational& e, const Rational& cutoff) {
    auto lam = TruncatedModule::free(1, cutoff);
    return {lam, lam, {{TermMap{{e, 1}}}}};
}

}  // namespace

TEST(AlmostZero, ResidueFieldIsAlmostZero) {
    // Lambda/m realized at grid step 1/2: R / (T^{1/2})
    AlmostSetup s{2};
    EXPECT_TRUE(almost_zero(TruncatedModule::cyclic(Rational(1, 2), kOne), s, kOne));
}

TEST(AlmostZero, TruncatedRingIsNot) {
    for (int64_t d = 2; d <= 4; ++d) EXPECT_FALSE(almost_zero(TruncatedModule::free(1, kOne), AlmostSetup{d}, kOne));
    // with D = 1 the only probe is T^1, which is already zero below cutoff 1
    EXPECT_TRUE(almost_zero(TruncatedModule::free(1, kOne), AlmostSetup{1}, kOne));
}

TEST(AlmostZero, CokernelOfHalfDependsOnBound) {
    auto m = TruncatedModule::cyclic(Rational(1, 2), kOne);
    // oracle: T^{1/k} kills R/(T^{1/2}) iff 1/k >= 1/2
    for (int64_t d = 1; d <= 5; ++d) {
        bool expect = true;
        for (int64_t k = 1; k <= d; ++k) expect &= Rational(1, k) >= Rational(1, 2);
        EXPECT_EQ(almost_zero(m, AlmostSetup{d}, kOne), expect) << "D=" << d;
    }
}

TEST(AlmostZero, DirectSumsStayAlmostZero) {
    testgen::Rng rng(6);
    for (int i = 0; i < 40; ++i) {
        AlmostSetup s{testgen::integer(rng, 1, 4)};
        auto a = TruncatedModule::cyclic(Rational(testgen::integer(rng, 0, 3), 4), kOne);
        auto b = TruncatedModule::cyclic(Rational(testgen::integer(rng, 0, 3), 4), kOne);
        bool za = almost_zero(a, s, kOne), zb = almost_zero(b, s, kOne);
        if (za && zb) EXPECT_TRUE(almost_zero(direct_sum(a, b), s, kOne));
        EXPECT_EQ(almost_zero(direct_sum(a, b), s, kOne), za && zb);
    }
}

TEST(AlmostZero, CutoffValidation) {
    auto m = TruncatedModule::free(1, kOne);
    EXPECT_THROW(almost_zero(m, AlmostSetup{2}, Rational(2)), std::invalid_argument);
    EXPECT_THROW(almost_zero(m, AlmostSetup{2}, Rational(0)), std::invalid_argument);
    EXPECT_THROW(almost_zero(m, AlmostSetup{0}, kOne), std::invalid_argument);
}

TEST(AlmostIso, ThreeClassicCases) {
    AlmostSetup s{2};
    auto lam = TruncatedModule::free(1, kOne);
    EXPECT_TRUE(almost_iso(TruncatedModuleMap::identity(lam), s, kOne));

    TruncatedModuleMap zero{lam, lam, {{TermMap{}}}};
    auto rz = almost_iso_report(zero, s, kOne);
    EXPECT_FALSE(rz.cokernel_almost_zero);
    EXPECT_FALSE(rz.kernel_almost_zero);

    auto r = almost_iso_report(multiplication(Rational(1, 2), kOne), s, kOne);
    EXPECT_TRUE(r.cokernel_almost_zero);
    EXPECT_TRUE(r.kernel_almost_zero);
}

TEST(AlmostIso, KernelOfTruncatedMultiplication) {
    // x -> T^{1/2} x on R = Z[(1/2)Z+]/I_1: kernel is spanned by T^{1/2},
    // and T^{1/k} T^{1/2} = 0 for k <= 2
    auto r = almost_iso_report(multiplication(Rational(1, 2), kOne), AlmostSetup{2}, kOne);
    EXPECT_TRUE(r.kernel_almost_zero);
    // with D = 3 the grid refines to 1/6; T^{1/3} T^{1/6}-type elements survive
    auto r3 = almost_iso_report(multiplication(Rational(1, 2), kOne), AlmostSetup{3}, kOne);
    EXPECT_FALSE(r3.cokernel_almost_zero);
}

TEST(AlmostIso, ShapeMismatch) {
    auto lam = TruncatedModule::free(1, kOne);
    TruncatedModuleMap bad{lam, lam, {}};
    EXPECT_THROW(almost_iso(bad, AlmostSetup{1}, kOne), std::invalid_argument);
}
