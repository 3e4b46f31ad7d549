#include <gtest/gtest.h>

#include "fixtures_cainf.hpp"
#include "pogcat/bounding.hpp"

using namespace pogcat;

namespace {

std::string first_violation(const CAinfCategory& C, const CAinfReport& r) {
    if (r.ok()) return "";
    auto& v = r.violations.front();
    return v.law + " " + key_str(C, v.key) + " " + v.detail;
}

// X with a : X -> X of degree 0 and mu1(a) = b at weight 0.
TableCategory open_arrow() {
    TableCategory C;
    C.cutoff = Rational(2);
    C.epsilon = Rational(1, 2);
    int X = C.add_object("X");
    int e = C.add_gen("e", X, X, 0, Rational(0));
    int a = C.add_gen("a", X, X, 0, Rational(0));
    int b = C.add_gen("b", X, X, 1, Rational(0));
    C.set_unit(X, C.generator(e));
    C.autounits();
    C.set_mu({a}, C.generator(b));
    return C;
}

Element term(const CAinfCategory& C, int g, const Rational& s, int64_t c = 1) {
    Element e;
    C.add_term(e, {g, s}, c);
    return e;
}

}  // namespace

TEST(Twisted, ConesAndBoundingCochainsFormACategory) {
    for (Coeff m : {Coeff::Z, Coeff::F2}) {
        auto C = fixtures::cch(m, Rational(2));
        Element b = term(C.cat, C.matrix_unit[1][1][2][1], Rational(1, 2));
        std::vector<TwistedObject> objs{single("V", 0), cone("Cone(eV)", 0, 0, C.cat.unit(0)),
                                        TwistedObject{"W_b", {{1, 0}}, {{{0, 0}, b}}}};
        TwistedCategory T(C.cat, objs);
        EXPECT_TRUE(T.mu0(2).empty());
        auto rep = check_cainf(T, 3);
        EXPECT_TRUE(rep.ok()) << coeff_str(m) << ": " << first_violation(T, rep);
    }
}

TEST(Twisted, ShiftedObjectUnitCarriesSign) {
    auto C = fixtures::cch(Coeff::Z);
    TwistedCategory T(C.cat, {TwistedObject{"V[1]", {{0, 1}}, {}}});
    for (auto& [t, c] : T.unit(0)) EXPECT_EQ(c, -1);
    EXPECT_TRUE(check_cainf(T, 3).ok());
}

TEST(Twisted, RejectsBadTwisting) {
    auto C = fixtures::cch(Coeff::Z);
    Element up = term(C.cat, C.matrix_unit[0][0][0][0], Rational(0));
    TwistedObject lower{"bad", {{0, 0}, {0, 1}}, {{{1, 0}, up}}};
    EXPECT_THROW(TwistedCategory(C.cat, {lower}), CategoryError);
    TwistedObject wrong_degree{"bad", {{0, 0}, {0, 0}}, {{{0, 1}, up}}};
    EXPECT_THROW(TwistedCategory(C.cat, {wrong_degree}), CategoryError);
    auto O = open_arrow();
    EXPECT_THROW(TwistedCategory(O, {cone("Cone(a)", 0, 0, O.generator(1))}), MaurerCartanError);
    EXPECT_NO_THROW(TwistedCategory(O, {cone("Cone(e)", 0, 0, O.generator(0))}));
}

TEST(Twisted, ConeCurvatureMatchesHandComputation) {
    // Cone(m) on the curved object W: diagonal -mu0 and +mu0, corner -mu1(m)
    auto C = fixtures::cch(Coeff::Z);
    Element m = term(C.cat, C.matrix_unit[1][1][1][0], Rational(0));
    auto curv = twisted_curvature(C.cat, cone("c", 1, 1, m));
    Element minus_w, corner;
    C.cat.add_into(minus_w, C.cat.mu0(1), -1);
    C.cat.add_into(corner, C.cat.mu({C.matrix_unit[1][1][1][0]}), -1);
    EXPECT_EQ(curv.at({0, 0}), minus_w);
    EXPECT_EQ(curv.at({1, 1}), C.cat.mu0(1));
    Element expect_corner = corner;
    C.cat.add_into(expect_corner, C.cat.mu_elements({C.cat.mu0(1), m}), -1);
    C.cat.add_into(expect_corner, C.cat.mu_elements({m, C.cat.mu0(1)}), -1);
    EXPECT_EQ(curv.count({0, 1}) ? curv.at({0, 1}) : Element{}, expect_corner);
}

TEST(Bounding, StratumSolverMatchesExhaustiveSearch) {
    std::vector<TableCategory> cats;
    for (int64_t c : {1, 2, 3}) {
        auto C = cch_category({fixtures::curved_three_term(c), fixtures::two_term()}, Coeff::F2, Rational(2), Rational(1, 2));
        cats.push_back(C.cat);
    }
    FilteredComplex four{"U", {0, 1, 2, 3}, {{0, 1, 1, Rational(1, 2)}, {1, 2, 1, Rational(0)}, {2, 3, 1, Rational(1, 2)}}};
    cats.push_back(cch_category({four}, Coeff::F2, Rational(2), Rational(1, 2)).cat);
    cats.push_back(fixtures::curved_pair(Coeff::F2));
    size_t total = 0;
    for (auto& C : cats)
        for (int X : C.objects())
            for (int steps : {1, 2}) {
                auto solver = bounding_cochains_f2(C, X, steps);
                auto brute = bounding_cochains_exhaustive(C, X, steps);
                std::set<Element> a(solver.solutions.begin(), solver.solutions.end()), b(brute.begin(), brute.end());
                EXPECT_EQ(a, b) << C.object_name(X) << " steps " << steps;
                total += a.size();
            }
    EXPECT_GT(total, 0u);
}

TEST(Bounding, IntegerCandidatesAreVerified) {
    auto C = fixtures::cch(Coeff::Z);
    int E21 = C.matrix_unit[1][1][2][1];
    EXPECT_TRUE(is_bounding_cochain(C.cat, 1, term(C.cat, E21, Rational(1, 2))));
    EXPECT_FALSE(is_bounding_cochain(C.cat, 1, term(C.cat, E21, Rational(1, 2), 2)));
    EXPECT_FALSE(is_bounding_cochain(C.cat, 1, term(C.cat, E21, Rational(1, 2), -1)));
    // over F2 the sign does not matter
    auto F = C.cat.with_coeff(Coeff::F2);
    EXPECT_TRUE(is_bounding_cochain(F, 1, term(F, E21, Rational(1, 2))));
    EXPECT_TRUE(is_bounding_cochain(C.cat, 0, Element{}));
    EXPECT_FALSE(is_bounding_cochain(C.cat, 1, Element{}));
}

TEST(Bounding, TwistedOverBcIsFlatPartOfCurvedTwisted) {
    auto C = fixtures::cch(Coeff::F2, Rational(3, 2));
    TwistedWindow W;
    W.max_entries = 2;
    W.shifts = {0, 1};
    W.diagonal_shift_steps = 2;
    auto rep = compare_bc_flat_twisted(C.cat, W, 3, 4);
    EXPECT_TRUE(rep.ok()) << (rep.mismatches.empty() ? "" : rep.mismatches.front());
    EXPECT_GT(rep.flat_twisted, 4u);
    EXPECT_GT(rep.tables_compared, 0u);
}
