#include <gtest/gtest.h>

#include "fixtures_cainf.hpp"
#include "pogcat/localize.hpp"

using namespace pogcat;

namespace {

// V: Z in degrees 0, 1 with d = T^{1/2}; A: the same with d = 1, contractible.
CChCategory with_contractible(Coeff m) {
    FilteredComplex A{"A", {0, 1}, {{0, 1, 1, Rational(0)}}};
    return cch_category({fixtures::two_term(), A}, m, Rational(2), Rational(1, 2));
}

}  // namespace

TEST(Localize, QuotientModuleIsAcyclicAtA) {
    for (Coeff m : {Coeff::Z, Coeff::F2}) {
        auto P = fixtures::curved_pair(m);
        QuotientCategory Q(P, {1}, 3);
        for (int Y : Q.objects()) EXPECT_TRUE(quotient_module_acyclic_at_A(Q, Y)) << coeff_str(m) << " Y=" << Y;
        auto C = fixtures::cch(m);
        QuotientCategory QW(C.cat, {1}, 1);
        for (int Y : QW.objects()) EXPECT_TRUE(quotient_module_acyclic_at_A(QW, Y)) << coeff_str(m) << " Y=" << Y;
    }
}

TEST(Localize, InclusionIsQuasiIsoWhenMAIsAcyclic) {
    for (Coeff m : {Coeff::Z, Coeff::F2}) {
        auto C = with_contractible(m);
        QuotientCategory Q(C.cat, {1}, 2);
        for (int Y : Q.objects()) {
            auto rep = check_module_localization(Q, Y);
            EXPECT_TRUE(rep.precondition) << coeff_str(m);
            EXPECT_TRUE(rep.acyclic_at_A) << coeff_str(m);
            EXPECT_TRUE(rep.quasi_iso) << coeff_str(m) << " Y=" << Y << (rep.notes.empty() ? "" : ": " + rep.notes.front());
        }
        // without the hypothesis the inclusion changes homology
        auto P = fixtures::curved_pair(m);
        QuotientCategory QP(P, {1}, 2);
        auto rep = check_module_localization(QP, 0);
        EXPECT_FALSE(rep.precondition);
        EXPECT_FALSE(gr_inclusion_quasi_iso(QP, words_with_bars(QP, 0, 0, 0), QP.hom(0, 0)));
    }
}

TEST(Localize, TelescopeMatchesLocalizedHoms) {
    for (Coeff c : {Coeff::Z, Coeff::F2})
        for (auto& f : fixtures::telescope_fixtures(c)) {
            Localization loc(f.C, {{"m", 0, 0, f.m}}, 3);
            auto rep = compare_telescope(f.C, loc, 0, 0, f.m);
            EXPECT_TRUE(rep.ok()) << f.name << " " << coeff_str(c);
            EXPECT_FALSE(rep.entries.empty());
        }
}

TEST(Localize, ShortWordsDoNotKillDeepTorsion) {
    // t^3 = 0: the class of e only dies once words may carry three bars
    auto f = fixtures::telescope_fixtures(Coeff::Z).front();
    std::vector<size_t> image;
    for (int L : {1, 2, 3}) {
        Localization loc(f.C, {{"m", 0, 0, f.m}}, L);
        image.push_back(compare_telescope(f.C, loc, 0, 0, f.m).entries.front().image_rank);
    }
    EXPECT_EQ(image, (std::vector<size_t>{2, 1, 0}));
}

TEST(Localize, LocalizationIsACurvedCategory) {
    auto f = fixtures::telescope_fixtures(Coeff::Z)[2];
    Localization loc(f.C, {{"m", 0, 0, f.m}}, 1);
    auto rep = check_cainf(loc.category(), 3);
    EXPECT_TRUE(rep.ok());
}
