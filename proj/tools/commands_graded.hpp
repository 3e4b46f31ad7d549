#pragma once

// Subcommands on graded category files (orbit, unorbit, reconstruct,
// pipeline) and the completion demo.

#include <numeric>
#include <string>
#include <vector>

#include "commands_curved.hpp"
#include "pogcat/linear_io.hpp"
#include "pogcat/novikov_demo.hpp"

namespace pogcat::cli {

inline void require_graded(const CategoryFile& f) {
    if (f.kind != FileKind::graded) throw UsageError("this command needs a graded category file (kind graded)");
}

inline void describe_graded(const CategoryFile& f, Report& rep) {
    rep.param("pog", f.pog.str());
    rep.param("kind", "graded");
}

/// Grades seen by the comparisons: the whole group for a finite quotient,
/// the subgroup generated by the grades of D for a quotient of Q, and
/// -window..window steps otherwise.
inline std::vector<Rational> grade_window(const CategoryFile& f, const LinearCategory& D, int window) {
    const Pog& G = f.pog;
    if (G.order()) return G.elements_in(Rational(0), Rational(0));
    int64_t n = 1;
    for (int a = 0; a < static_cast<int>(D.num_arrows()); ++a) n = std::lcm(n, D.arrow(a).grade.den());
    std::vector<Rational> out;
    if (G.is_quotient()) {
        int64_t m = (G.period() * Rational(n)).num();
        for (int64_t k = 0; k < m; ++k) out.push_back(Rational(k, n));
        return out;
    }
    Rational step = G.is_discrete() ? G.step() : Rational(1, n);
    for (int k = -window; k <= window; ++k) out.push_back(step * Rational(k));
    return out;
}

inline void add_grade_ranks(Report& rep, const std::string& table, const LinearCategory& C) {
    std::map<std::tuple<int, int, Rational>, size_t> count;
    for (int a = 0; a < static_cast<int>(C.num_arrows()); ++a) ++count[{C.arrow(a).src, C.arrow(a).tgt, C.arrow(a).grade}];
    for (auto& [k, n] : count) {
        auto [x, y, g] = k;
        rep.ranks.push_back({table, C.object_name(x) + "->" + C.object_name(y), 0, g, n, {}});
    }
}

inline Report cmd_check_graded(const CategoryFile& f) {
    Report rep;
    describe_graded(f, rep);
    auto L = to_linear(f);
    auto r = check_category(L.cat);
    std::vector<std::string> w;
    for (auto& v : r.violations) w.push_back(v.law + ": " + v.witness);
    rep.add("associativity, units and additive grades", r.ok(), std::to_string(r.checked) + " composites", w);
    add_grade_ranks(rep, "D", L.cat);
    return rep;
}

inline Report cmd_orbit(const CategoryFile& f, int window) {
    require_graded(f);
    Report rep;
    describe_graded(f, rep);
    if (!f.pog.base().is_discrete())
        throw UsageError("orbit needs a discrete grading group such as Z/1; this file is graded by " + f.pog.str());
    auto L = to_linear(f, false);
    CategoryAction A = file_action(f, L);
    std::vector<Rational> objw, orbw;
    if (A.pog.order()) {
        objw = orbw = A.pog.elements_in(Rational(0), Rational(0));
    } else {
        for (int k = 0; k <= window; ++k) objw.push_back(A.pog.step() * Rational(k));
        for (int k = -window; k <= window; ++k) orbw.push_back(A.pog.step() * Rational(k));
    }
    rep.param("window", std::to_string(orbw.size()) + " grades");
    auto cmp = check_orbit_unorbit(L.cat, A, objw, orbw);
    rep.add("C[G]#G recovers C", cmp.ok(), std::to_string(cmp.homs_compared) + " homs compared", cmp.mismatches);
    auto O = orbit(L.cat, A, orbw);
    rep.param("dropped composites", std::to_string(O.dropped_composites));
    add_grade_ranks(rep, "C[G]", O.cat);
    return rep;
}

inline Report cmd_unorbit(const CategoryFile& f, int window) {
    require_graded(f);
    Report rep;
    describe_graded(f, rep);
    auto L = to_linear(f);
    auto W = grade_window(f, L.cat, window);
    rep.param("window", std::to_string(W.size()) + " grades");
    auto cmp = check_unorbit_orbit(L.cat, W, W);
    rep.add("(D#G)[G] recovers D", cmp.ok(), std::to_string(cmp.homs_compared) + " homs compared", cmp.mismatches);
    auto U = unorbit(L.cat, W);
    rep.param("objects of D#G", std::to_string(U.cat.num_objects()));
    add_grade_ranks(rep, "D#G", U.cat);
    return rep;
}

inline Status to_status(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return Status::pass;
        case CheckStatus::fail: return Status::fail;
        default: return Status::inconclusive;
    }
}

inline ReconstructionReport run_reconstruct(const CategoryFile& f, const LinearCategory& D, int depth, Report& rep) {
    if (!f.pog.is_rational() || !f.pog.is_quotient()) throw UsageError("reconstruct needs a graded file over a quotient of Q, e.g. Q%Z");
    auto chain = exhaustion(f.pog, depth).chain;
    std::string stages;
    for (auto& P : chain) stages += (stages.empty() ? "" : " ") + P.str();
    rep.param("exhaustion", stages);
    return reconstruct(D, chain, grade_window(f, D, 0));
}

inline Report cmd_reconstruct(const CategoryFile& f, int depth) {
    require_graded(f);
    Report rep;
    describe_graded(f, rep);
    auto L = to_linear(f);
    auto r = run_reconstruct(f, L.cat, depth, rep);
    std::string ranks;
    for (size_t s : r.stage_ranks) ranks += (ranks.empty() ? "" : " ") + std::to_string(s);
    rep.param("stage ranks", ranks);
    rep.add("colimit of the stages equals D#(Q/Z) on the window", to_status(r.status),
            "colimit " + std::to_string(r.colimit_rank) + ", direct " + std::to_string(r.direct_rank) + ", objects " +
                std::to_string(r.objects_covered) + "/" + std::to_string(r.objects_total),
            r.notes);
    return rep;
}

inline Report cmd_pipeline(const CategoryFile& f, int depth) {
    require_graded(f);
    Report rep;
    describe_graded(f, rep);
    auto L = to_linear(f);
    auto r = run_reconstruct(f, L.cat, depth, rep);
    std::string ranks;
    for (size_t s : r.stage_ranks) ranks += (ranks.empty() ? "" : " ") + std::to_string(s);
    rep.param("stage ranks", ranks);
    rep.add("stage 1: exhaustion stages are functorial", r.status != CheckStatus::fail || r.colimit_rank == r.direct_rank,
            std::to_string(r.stage_ranks.size()) + " stages");
    rep.add("stage 2: colimit reconstruction", to_status(r.status),
            "colimit " + std::to_string(r.colimit_rank) + ", direct " + std::to_string(r.direct_rank), r.notes);
    if (r.status != CheckStatus::pass) {
        rep.add("stage 3: orbit of the colimit recovers D", Status::skipped, "reconstruction did not pass");
        rep.add("stage 4: completion and Novikov base change keep hom ranks", Status::skipped, "reconstruction did not pass");
        return rep;
    }
    rep.add("stage 3: orbit of the colimit recovers D", r.orbit_recovers);
    // Each generator of D(X, Y) contributes one hom ((X,0),(Y,g)) of rank
    // one; completion and base change to the Novikov ring keep this rank.
    auto U = unorbit(L.cat, grade_window(f, L.cat, 0));
    std::vector<std::string> bad;
    for (int x = 0; x < static_cast<int>(L.cat.num_objects()); ++x)
        for (int y = 0; y < static_cast<int>(L.cat.num_objects()); ++y) {
            size_t from_colimit = 0;
            for (int u = 0; u < static_cast<int>(U.cat.num_objects()); ++u) {
                if (U.object_origin[u].first != x || !U.object_origin[u].second.is_zero()) continue;
                for (int v = 0; v < static_cast<int>(U.cat.num_objects()); ++v)
                    if (U.object_origin[v].first == y) from_colimit += U.cat.hom(u, v).size();
            }
            size_t direct = L.cat.hom(x, y).size();
            rep.ranks.push_back({"Novikov rank", L.cat.object_name(x) + "->" + L.cat.object_name(y), 0, Rational(0), from_colimit, {}});
            if (from_colimit != direct)
                bad.push_back(L.cat.object_name(x) + "->" + L.cat.object_name(y) + ": " + std::to_string(from_colimit) + " vs " + std::to_string(direct));
        }
    rep.add("stage 4: completion and Novikov base change keep hom ranks", bad.empty(), "", bad);
    return rep;
}

inline Report cmd_demo_novikov(int64_t n, const Rational& cutoff) {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (cutoff.sign() <= 0) throw UsageError("--cutoff must be positive");
    Report rep;
    rep.param("n", std::to_string(n));
    rep.param("cutoff", cutoff.str());
    std::vector<Rational> ks;
    for (int64_t k = 1; Rational(k) < cutoff; ++k) ks.push_back(Rational(k));
    ks.push_back(cutoff);
    for (auto& k : ks) {
        auto row = novikov_row(n, k);
        rep.add("M/I_" + k.str() + " M has the rank of Z[R]/I_" + k.str() + " at denominators <= " + std::to_string(n), row.ok(),
                std::to_string(row.module_rank) + " vs " + std::to_string(row.ring_rank));
        rep.ranks.push_back({"M/I_k M", "k=" + k.str(), 0, k, row.module_rank, {}});
        // coarser grids embed: their grades are among ours and ranks do not exceed ours
        for (int64_t m = 1; m < n; ++m) {
            if (n % m) continue;
            auto coarse = novikov_row(m, k);
            bool refines = coarse.module_rank <= row.module_rank &&
                           std::includes(row.grades.begin(), row.grades.end(), coarse.grades.begin(), coarse.grades.end());
            rep.add("denominators <= " + std::to_string(m) + " refine to <= " + std::to_string(n) + " at k=" + k.str(), refines);
        }
    }
    auto w8 = divergence_witness(8, n, cutoff), w16 = divergence_witness(16, n, cutoff);
    rep.add("sum T^(m+1/m) is not in M", !w16.in_module,
            std::to_string(w8.theta_classes) + " then " + std::to_string(w16.theta_classes) + " fractional parts for 8 and 16 terms");
    rep.add("sum T^(m+1/m) is in the completion", w8.below_cutoff == w16.below_cutoff,
            std::to_string(w16.below_cutoff) + " terms below the cutoff, stable in the number of terms");
    return rep;
}

}  // namespace pogcat::cli
