#include <gtest/gtest.h>

#include "pogcat/orbit.hpp"
#include "pogcat/sample_categories.hpp"
#include "oracles.hpp"

using namespace pogcat;

namespace {

enum class Variant { plain, pog, quotient };

struct Case {
    Pog pog;
    Variant variant;
    int order_divides;
};

std::vector<Rational> range(const Pog& p, int lo, int hi) {
    std::vector<Rational> out;
    for (int k = lo; k <= hi; ++k) out.push_back(p.step() * Rational(k));
    return out;
}

::testing::AssertionResult same_by_grade(const LinearCategory& A, const LinearCategory& B) {
    std::string m = oracle::grade_mismatch(A, B);
    if (m.empty()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << m;
}

}  // namespace

TEST(PathCategory, IsACategoryWithEquivariantContinuation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto P = path_category(rng, {});
        EXPECT_TRUE(check_category(P.cat).ok());
        auto A = path_action(P, Pog::integers());
        for (int a = 0; a < static_cast<int>(P.cat.num_arrows()); ++a)
            for (int z = 0; z < static_cast<int>(P.cat.num_objects()); ++z)
                for (int b : P.cat.hom(P.cat.arrow(a).tgt, z)) {
                    Vec lhs = detail::act_vec(A, Rational(1), P.cat.compose(a, b));
                    Vec rhs = P.cat.compose(Vec{{*A.on_arrow(Rational(1), a), 1}}, Vec{{*A.on_arrow(Rational(1), b), 1}});
                    EXPECT_EQ(lhs, rhs);
                }
        // naturality of the continuation: f then c(y) = c(x) then sigma f
        for (int a = 0; a < static_cast<int>(P.cat.num_arrows()); ++a) {
            int x = P.cat.arrow(a).src, y = P.cat.arrow(a).tgt;
            Vec lhs = P.cat.compose(Vec{{a, 1}}, A.continuation(Rational(1), y));
            Vec rhs = P.cat.compose(A.continuation(Rational(1), x), Vec{{*A.on_arrow(Rational(1), a), 1}});
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(Orbit, RoundTripsOnRandomFixtures) {
    const std::vector<Case> cases{{Pog::integers(), Variant::plain, 0},
                                  {Pog::integers(), Variant::pog, 0},
                                  {Pog::scaled_integers(2), Variant::pog, 0},
                                  {Pog::scaled_integers(4), Variant::quotient, 4}};
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Case& cs = cases[static_cast<size_t>(trial) % cases.size()];
        PathCategoryParams params;
        params.sigma_order_divides = cs.order_divides;
        auto P = path_category(rng, params);
        CategoryAction A = path_action(P, cs.pog, cs.variant != Variant::plain);
        std::vector<Rational> rhos = range(cs.pog, 0, 3);
        if (cs.variant == Variant::quotient) {
            A = quotient_action(P.cat, A, Rational(1));
            auto all = A.pog.elements_in(Rational(0), Rational(0));
            auto r1 = check_orbit_unorbit(P.cat, A, all, all, rhos);
            EXPECT_TRUE(r1.ok()) << trial << ": " << (r1.ok() ? "" : r1.mismatches.front());
            auto D = orbit_quotient(P.cat, path_action(P, cs.pog), Rational(1));
            EXPECT_TRUE(check_category(D.cat, rhos).ok()) << trial;
            auto r2 = check_unorbit_orbit(D.cat, all, all, rhos);
            EXPECT_TRUE(r2.ok()) << trial << ": " << (r2.ok() ? "" : r2.mismatches.front());
        } else {
            auto r1 = check_orbit_unorbit(P.cat, A, range(cs.pog, 0, 3), range(cs.pog, -3, 3), rhos);
            EXPECT_TRUE(r1.ok()) << trial << ": " << (r1.ok() ? "" : r1.mismatches.front());
            EXPECT_GT(r1.homs_compared, 0u);
            auto D = orbit(P.cat, A, range(cs.pog, -6, 6));
            auto r2 = check_unorbit_orbit(D.cat, range(cs.pog, 0, 3), range(cs.pog, -3, 3), rhos);
            EXPECT_TRUE(r2.ok()) << trial << ": " << (r2.ok() ? "" : r2.mismatches.front());
        }
    }
}

TEST(Orbit, QuotientRequiresTrivialKernel) {
    std::mt19937_64 rng(8);
    PathCategoryParams params;
    params.sigma_order_divides = 3;
    for (;;) {
        auto P = path_category(rng, params);
        if (P.sigma_order != 3) continue;
        EXPECT_THROW(orbit_quotient(P.cat, path_action(P, Pog::scaled_integers(4)), Rational(1)), KernelViolation);
        EXPECT_NO_THROW(orbit_quotient(P.cat, path_action(P, Pog::scaled_integers(3)), Rational(1)));
        break;
    }
}

TEST(Orbit, OrbitOfBZIsGroupRing) {
    Pog half = Pog::quotient(Pog::scaled_integers(2), Rational(1));
    auto BZ = b_integers();
    auto O = orbit_quotient(BZ, trivial_action(Pog::scaled_integers(2)), Rational(1));
    EXPECT_TRUE(same_by_grade(O.cat, b_group_ring(half, half.elements_in(Rational(0), Rational(0)))));
    EXPECT_EQ(O.cat.num_arrows(), 2u);

    auto W = range(Pog::integers(), -3, 3);
    auto OZ = orbit(BZ, trivial_action(Pog::integers()), W);
    EXPECT_TRUE(same_by_grade(OZ.cat, b_group_ring(Pog::integers(), W)));
    EXPECT_EQ(OZ.cat.num_arrows(), 7u);
    EXPECT_GT(OZ.dropped_composites, 0u);
}

TEST(Orbit, UnorbitOfGroupRingIsIndiscrete) {
    Pog half = Pog::quotient(Pog::scaled_integers(2), Rational(1));
    auto ring = b_group_ring(half, half.elements_in(Rational(0), Rational(0)));
    auto U = unorbit_quotient(ring);
    ASSERT_EQ(U.cat.num_objects(), 2u);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            ASSERT_EQ(U.cat.hom(u, v).size(), 1u);
            for (int w = 0; w < 2; ++w)
                EXPECT_EQ(U.cat.compose(U.cat.hom(u, v)[0], U.cat.hom(v, w)[0]), (Vec{{U.cat.hom(u, w)[0], 1}}));
        }

    // the ring window covers every difference of object grades
    auto UZ = unorbit(b_group_ring(Pog::integers(), range(Pog::integers(), -6, 6)), range(Pog::integers(), -3, 3));
    EXPECT_EQ(UZ.cat.num_objects(), 7u);
    size_t total = 0;
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) total += UZ.cat.hom(u, v).size();
    EXPECT_EQ(total, 49u);
    EXPECT_TRUE(check_category(UZ.cat).ok());
}

TEST(Orbit, UnorbitShiftActsFreely) {
    std::mt19937_64 rng(4);
    auto P = path_category(rng, {});
    auto D = orbit(P.cat, path_action(P, Pog::integers()), range(Pog::integers(), -4, 4));
    auto U = unorbit(D.cat, range(Pog::integers(), 0, 2));
    for (int u = 0; u < static_cast<int>(U.cat.num_objects()); ++u) {
        auto [d, g] = U.object_origin[u];
        auto v = U.action.on_object(Rational(1), u);
        EXPECT_EQ(v.has_value(), g < Rational(2));
        if (v) EXPECT_EQ(U.object_origin[*v], std::make_pair(d, g + Rational(1)));
    }
}

TEST(Orbit, FiltrationIsDecreasingAndMultiplicative) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        auto P = path_category(rng, {});
        auto A = path_action(P, Pog::integers());
        auto rep = check_filtration(P.cat, A, {Rational(0), Rational(1), Rational(2)});
        EXPECT_TRUE(rep.ok()) << trial;
        // F^{>=0} is everything
        for (int x = 0; x < static_cast<int>(P.cat.num_objects()); ++x)
            EXPECT_EQ(rank(filtration_lattice(P.cat, A, x, x, Rational(0))), P.cat.hom(x, x).size());
    }
}

TEST(Orbit, ChangeOfEnrichmentIsEquivariant) {
    std::mt19937_64 rng(9);
    PathCategoryParams params;
    params.sigma_order_divides = 4;
    Pog quarter = Pog::scaled_integers(4);
    Pog half_q = Pog::quotient(Pog::scaled_integers(2), Rational(1));
    for (int trial = 0; trial < 10; ++trial) {
        auto P = path_category(rng, params);
        auto D = orbit_quotient(P.cat, path_action(P, quarter), Rational(1));
        auto window = half_q.elements_in(Rational(0), Rational(0));
        auto rep = check_change_of_enrichment(D.cat, half_q, window, window);
        EXPECT_TRUE(rep.ok()) << trial << ": " << (rep.ok() ? "" : rep.mismatches.front());
    }
}

TEST(Orbit, ReconstructionFromExhaustion) {
    std::mt19937_64 rng(31);
    PathCategoryParams params;
    params.sigma_order_divides = 6;
    Pog qz = Pog::parse("Q%Z");
    Pog sixth = Pog::quotient(Pog::scaled_integers(6), Rational(1));
    for (int trial = 0; trial < 10; ++trial) {
        auto P = path_category(rng, params);
        auto D6 = orbit_quotient(P.cat, path_action(P, Pog::scaled_integers(6)), Rational(1));
        auto D = restrict_category(D6.cat, qz);
        auto window = sixth.elements_in(Rational(0), Rational(0));
        auto full = reconstruct(D, exhaustion(qz, 3).chain, window);
        EXPECT_EQ(full.status, CheckStatus::pass) << trial << (full.notes.empty() ? "" : ": " + full.notes.front());
        EXPECT_EQ(full.colimit_rank, full.direct_rank);
        EXPECT_TRUE(full.orbit_recovers);
        auto cut = reconstruct(D, exhaustion(qz, 2).chain, window);
        EXPECT_EQ(cut.status, CheckStatus::inconclusive);
        EXPECT_LT(cut.colimit_rank, cut.direct_rank);
    }
}
