#pragma once

// Subcommands on curved category files: check, homology, quotient,
// localize, tw, bc.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pogcat/bounding.hpp"
#include "pogcat/catfile.hpp"
#include "pogcat/localize.hpp"
#include "report.hpp"

namespace pogcat::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::optional<int> dmax, lmax;
    std::optional<std::string> cutoff, eps, coeff;
    bool json = false;
    int window = 3;
    int depth = 3;
    int search_cutoff = 2;
    int64_t n = 2;
    std::string novikov_cutoff = "3";
};

inline std::string hom_name(const CAinfCategory& C, int X, int Y) { return C.object_name(X) + "->" + C.object_name(Y); }

inline void describe(const CategoryFile& f, Report& rep) {
    rep.param("pog", f.pog.str());
    rep.param("coeff", coeff_str(f.coeff));
    rep.param("cutoff", f.cutoff.str());
    rep.param("eps", f.eps.str());
    rep.param("dmax", std::to_string(f.dmax));
    rep.param("lmax", std::to_string(f.lmax));
}

inline void require_curved(const CategoryFile& f) {
    if (f.kind != FileKind::curved) throw UsageError("this command needs a curved category file");
}

/// One check per law, with the first violations as witnesses.
inline void add_cainf_checks(Report& rep, const CAinfCategory& C, int dmax, const std::string& prefix) {
    if (dmax < 2) throw UsageError("--dmax must be at least 2");
    CAinfReport r = check_cainf(C, dmax);
    std::map<std::string, std::vector<std::string>> by_law;
    for (auto& v : r.violations) by_law[v.law].push_back(key_str(C, v.key) + " -> " + v.detail);
    for (const char* law : {"degree", "filtration", "unit", "relation"}) {
        auto& w = by_law[law];
        std::string detail = std::to_string(r.tuples_checked) + " tuples, d <= " + std::to_string(dmax);
        if (!w.empty()) detail = std::to_string(w.size()) + " violations; " + detail;
        rep.add(prefix + law, w.empty(), detail, w);
    }
}

inline void add_gr_table(Report& rep, const CAinfCategory& C, const std::string& table) {
    for (int X : C.objects())
        for (int Y : C.objects()) rep.add_gr_ranks(table, hom_name(C, X, Y), gr_homology(C, X, Y));
}

inline Report cmd_check_curved(const CategoryFile& f) {
    Report rep;
    describe(f, rep);
    add_cainf_checks(rep, f.cat, f.dmax, "");
    std::vector<std::string> curved;
    for (int X : f.cat.objects())
        if (!f.cat.mu0(X).empty()) curved.push_back(f.cat.object_name(X));
    std::string flat = curved.empty() ? "all objects flat" : "curved objects:";
    for (auto& n : curved) flat += " " + n;
    rep.param("curvature", flat);
    add_gr_table(rep, f.cat, "Gr H C");
    return rep;
}

inline Report cmd_homology(const CategoryFile& f) {
    require_curved(f);
    Report rep;
    describe(f, rep);
    add_gr_table(rep, f.cat, "Gr H C");
    return rep;
}

inline Report cmd_quotient(const CategoryFile& f) {
    require_curved(f);
    if (f.subcategory.empty()) throw UsageError("quotient needs a `sub` line naming the objects of A");
    Report rep;
    describe(f, rep);
    std::string sub;
    for (int a : f.subcategory) sub += (sub.empty() ? "" : " ") + f.cat.object_name(a);
    rep.param("sub", sub);
    const int sweep_l = std::min(f.lmax, 1), sweep_d = std::min(f.dmax, 3);
    rep.param("sweep lmax", std::to_string(sweep_l));
    rep.param("sweep dmax", std::to_string(sweep_d));
    {
        QuotientCategory S(f.cat, f.subcategory, sweep_l);
        add_cainf_checks(rep, S, sweep_d, "C/A ");
    }
    QuotientCategory Q(f.cat, f.subcategory, f.lmax);
    std::vector<std::string> mu0_diff;
    for (int X : Q.objects())
        if (Q.str(Q.mu0(X)) != f.cat.str(f.cat.mu0(X))) mu0_diff.push_back(f.cat.object_name(X));
    rep.add("C/A curvature equals curvature of C", mu0_diff.empty(), "", mu0_diff);
    for (int Y : Q.objects()) {
        auto m = check_module_localization(Q, Y);
        const std::string y = f.cat.object_name(Y);
        rep.add("Gr of localized C(-, " + y + ") acyclic at A", m.acyclic_at_A,
                "cycles on <= " + std::to_string(f.lmax - 1) + " bars bound on <= " + std::to_string(f.lmax));
        if (!m.precondition)
            rep.add("C(-, " + y + ") -> localized module is a quasi-isomorphism", Status::skipped, "Gr C(A, " + y + ") is not acyclic");
        else
            rep.add("C(-, " + y + ") -> localized module is a quasi-isomorphism", m.quasi_iso, "", m.notes);
    }
    rep.param("overflow words", std::to_string(Q.overflow_words()));
    add_gr_table(rep, Q, "Gr H C/A (capped)");
    return rep;
}

inline std::vector<LocalizingArrow> localizing_arrows(const CategoryFile& f) {
    std::vector<LocalizingArrow> out;
    for (auto& a : f.arrows) out.push_back({a.name, a.src, a.tgt, a.value});
    return out;
}

inline Report cmd_localize(const CategoryFile& f) {
    require_curved(f);
    if (f.arrows.empty()) throw UsageError("localize needs `arrow` lines naming the morphisms to invert");
    Report rep;
    describe(f, rep);
    // the relation sweep grows like (words)^d, so it runs on a shorter window
    const int sweep_l = std::min(f.lmax, 1), sweep_d = std::min(f.dmax, 3);
    rep.param("sweep lmax", std::to_string(sweep_l));
    rep.param("sweep dmax", std::to_string(sweep_d));
    {
        Localization S(f.cat, localizing_arrows(f), sweep_l);
        add_cainf_checks(rep, S.category(), sweep_d, "C[M^-1] ");
    }
    Localization L(f.cat, localizing_arrows(f), f.lmax);
    for (auto& a : f.arrows) {
        bool endo = a.src == a.tgt && !a.value.empty() && f.cat.min_weight(a.value).is_zero();
        for (int Y : f.cat.objects()) {
            std::string name = "telescope of " + a.name + " on Gr H " + hom_name(f.cat, a.src, Y);
            if (!endo) {
                rep.add(name, Status::skipped, "needs an endomorphism of weight 0");
                continue;
            }
            auto t = compare_telescope(f.cat, L, a.src, Y, a.value);
            std::vector<std::string> w;
            size_t needed = 0;
            for (auto& e : t.entries) {
                needed = std::max(needed, e.stages - 1);
                if (e.telescope_rank != e.image_rank)
                    w.push_back("degree " + std::to_string(e.degree) + " weight " + e.weight.str() + ": colimit " +
                                std::to_string(e.telescope_rank) + ", localization " + std::to_string(e.image_rank));
                rep.ranks.push_back({"colim " + a.name, hom_name(f.cat, a.src, Y), e.degree, e.weight, e.telescope_rank, {}});
                rep.ranks.push_back({"image in C[M^-1]", hom_name(f.cat, a.src, Y), e.degree, e.weight, e.image_rank, {}});
            }
            std::string detail = std::to_string(needed) + " powers of " + a.name + " to stabilize";
            if (!t.ok() && static_cast<int>(needed) > f.lmax)
                rep.add(name, Status::inconclusive, detail + "; words have at most " + std::to_string(f.lmax) + " bars", w);
            else
                rep.add(name, t.ok(), detail, w);
        }
    }
    rep.param("overflow words", std::to_string(L.quotient().overflow_words()));
    return rep;
}

inline Report cmd_tw(const CategoryFile& f) {
    require_curved(f);
    Report rep;
    describe(f, rep);
    std::vector<TwistedObject> objs;
    for (int X : f.cat.objects()) objs.push_back(single(f.cat.object_name(X), X));
    for (auto& a : f.arrows) objs.push_back(cone("Cone(" + a.name + ")", a.src, a.tgt, a.value));
    try {
        TwistedCategory T(f.cat, objs);
        rep.add("Maurer-Cartan residuals have weight >= eps", true);
        add_cainf_checks(rep, T, f.dmax, "Tw ");
        std::string flat;
        for (int p : T.objects())
            if (T.mu0(p).empty()) flat += (flat.empty() ? "" : " ") + T.object_name(p);
        rep.param("flat twisted objects", flat.empty() ? "none" : flat);
        add_gr_table(rep, T, "Gr H Tw");
    } catch (const MaurerCartanError& e) {
        rep.add("Maurer-Cartan residuals have weight >= eps", false, "", {e.what()});
    }
    return rep;
}

inline Report cmd_bc(const CategoryFile& f, int search_steps, int window) {
    require_curved(f);
    Report rep;
    describe(f, rep);
    rep.param("search cutoff", std::to_string(search_steps) + " shift steps");
    if (f.coeff == Coeff::Z) {
        std::set<int> supplied;
        for (auto& a : f.arrows) {
            if (a.src != a.tgt) continue;
            const std::string name = "candidate " + a.name + " bounds " + f.cat.object_name(a.src);
            bool shape = true;
            for (auto& [t, c] : a.value)
                if (f.cat.gen(t.first).degree != 1 || f.cat.term_weight(t) < f.cat.epsilon) shape = false;
            if (!shape) {
                rep.add(name, Status::skipped, "arrow is not of degree 1 and weight >= eps");
                continue;
            }
            supplied.insert(a.src);
            Element r = mc_residual(f.cat, a.src, a.value);
            std::vector<std::string> w;
            if (!r.empty()) w.push_back("residual " + f.cat.str(r));
            rep.add(name, r.empty(), "", w);
        }
        for (int X : f.cat.objects())
            if (!supplied.count(X) && !f.cat.mu0(X).empty())
                rep.add("bounding cochains on " + f.cat.object_name(X), Status::inconclusive,
                        "over Z only supplied candidates are verified; none given");
        return rep;
    }
    for (int X : f.cat.objects()) {
        auto s = bounding_cochains_f2(f.cat, X, search_steps);
        std::vector<std::string> found, bad;
        for (auto& b : s.solutions) {
            found.push_back(b.empty() ? "0" : f.cat.str(b));
            if (!is_bounding_cochain(f.cat, X, b)) bad.push_back(f.cat.str(b));
        }
        rep.add("bounding cochains on " + f.cat.object_name(X) + " re-evaluate to zero", bad.empty(),
                std::to_string(s.solutions.size()) + " found among " + std::to_string(s.candidates.size()) + " candidate terms",
                bad.empty() ? found : bad);
    }
    TwistedWindow W;
    W.max_entries = 2;
    W.shifts = {0, 1};
    W.diagonal_shift_steps = std::min(search_steps, window);
    auto cmp = compare_bc_flat_twisted(f.cat, W, std::min(f.dmax, 3), 4);
    rep.add("Tw(C^bc) matches the flat part of cTw(C)", cmp.ok(),
            std::to_string(cmp.flat_twisted) + " flat twisted, " + std::to_string(cmp.bc_twisted) + " over C^bc, " +
                std::to_string(cmp.tables_compared) + " table entries compared",
            cmp.mismatches);
    return rep;
}

}  // namespace pogcat::cli
