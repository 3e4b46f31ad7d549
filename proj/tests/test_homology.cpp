#include <gtest/gtest.h>

#include "pogcat/homology.hpp"
#include "support.hpp"

using namespace pogcat;

namespace {

ChainComplexZ two_term(int64_t m) {
    ChainComplexZ c;
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_differential(0, IntMatrix{{m}});
    return c;
}

// Random complex C^0 -> C^1 -> C^2 with d1 d0 = 0, built as d1 = B, d0 = kernel(B) * R.
ChainComplexZ random_complex(testgen::Rng& rng) {
    size_t n0 = testgen::integer(rng, 1, 3), n1 = testgen::integer(rng, 2, 4), n2 = testgen::integer(rng, 1, 3);
    IntMatrix d1 = testgen::matrix(rng, n2, n1, 3);
    IntMatrix K = kernel_basis(d1);
    IntMatrix R = testgen::matrix(rng, K.cols(), n0, 2);
    ChainComplexZ c;
    c.set_dim(0, n0);
    c.set_dim(1, n1);
    c.set_dim(2, n2);
    c.set_differential(0, K * R);
    c.set_differential(1, d1);
    return c;
}

}  // namespace

TEST(Homology, IdentityIsAcyclic) {
    EXPECT_TRUE(is_acyclic(two_term(1)));
    EXPECT_TRUE(homology(two_term(1), 0).is_zero());
}

TEST(Homology, MultiplicationByTwo) {
    // H^1 = coker(2) = Z/2, H^0 = ker(2) = 0
    auto c = two_term(2);
    EXPECT_TRUE(homology(c, 0).is_zero());
    EXPECT_EQ(homology(c, 1).torsion, std::vector<int64_t>{2});
    EXPECT_EQ(homology(c, 1).str(), "Z/2");
    EXPECT_EQ(homology_f2(c, 0), 1u);
    EXPECT_EQ(homology_f2(c, 1), 1u);
}

TEST(Homology, DSquaredNonzeroRejected) {
    ChainComplexZ c;
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_dim(2, 1);
    c.set_differential(0, IntMatrix{{1}});
    c.set_differential(1, IntMatrix{{1}});
    EXPECT_THROW(c.validate(), InvalidComplex);
}

TEST(Homology, EulerCharacteristicAndUniversalCoefficients) {
    testgen::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        auto c = random_complex(rng);
        auto h = all_homology(c);
        int64_t chi_chain = 0, chi_h = 0;
        for (int k = 0; k <= 2; ++k) {
            chi_chain += (k % 2 ? -1 : 1) * static_cast<int64_t>(c.dim(k));
            chi_h += (k % 2 ? -1 : 1) * static_cast<int64_t>(h[k].free_rank);
        }
        EXPECT_EQ(chi_chain, chi_h);
        // dim H^k(C; F2) = rank H^k + #even torsion in H^k + #even torsion in H^{k+1}
        for (int k = 0; k <= 2; ++k) {
            size_t expect = h[k].free_rank;
            for (int64_t t : h[k].torsion) expect += (t % 2 == 0);
            if (h.count(k + 1))
                for (int64_t t : h[k + 1].torsion) expect += (t % 2 == 0);
            EXPECT_EQ(homology_f2(c, k), expect);
        }
    }
}

TEST(QuasiIso, IdentityAndZeroBetweenAcyclics) {
    auto c = two_term(1);
    ChainMap id{&c, &c, {{0, IntMatrix::identity(1)}, {1, IntMatrix::identity(1)}}};
    EXPECT_TRUE(is_quasi_iso(id).quasi_iso);
    ChainMap zero{&c, &c, {}};
    EXPECT_TRUE(is_quasi_iso(zero).quasi_iso);
    auto d = two_term(2);
    ChainMap zero2{&d, &d, {}};
    EXPECT_FALSE(is_quasi_iso(zero2).quasi_iso);
}

TEST(QuasiIso, ConeOfZeroMapIsShiftedSum) {
    testgen::Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        auto c = random_complex(rng);
        ChainComplexZ zero;
        ChainMap f{&c, &zero, {}};
        auto cone = mapping_cone(f);
        for (int k = 0; k <= 2; ++k) EXPECT_EQ(homology(cone, k - 1), homology(c, k));
    }
}

TEST(QuasiIso, NonChainMapRejected) {
    auto c = two_term(1);
    ChainMap bad{&c, &c, {{0, IntMatrix::identity(1)}}};
    EXPECT_THROW(is_quasi_iso(bad), InvalidComplex);
}
