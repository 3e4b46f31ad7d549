#pragma once

// Localization of modules and categories.
//
// For the Yoneda module M = C(-, Y) the localized module A\M is
// X |-> C/A(X, Y), so both module statements are statements about homs of
// the quotient:
//   - Gr(A\M(A)) is acyclic for A in A; with words capped at L bars this is
//     read as "cycles on <= L-1 bars bound on <= L bars";
//   - if Gr M(A) is acyclic for every A in A, the inclusion of length-0
//     words Gr M(X) -> Gr A\M(X) is a quasi-isomorphism (exact for capped
//     words: the length filtration has acyclic graded pieces).
//
// C[M^-1] is the full subcategory on the objects of C inside Tw(C)/Cone(M),
// with Tw(C) taken on the objects of C and the cones. For m : X -> X its
// homs are compared with the telescope colim(C(X, Y) -m-> C(X, Y) -> ..)
// where m acts by precomposition f |-> mu2(m, f). Over a field the colimit
// is the image of the first stage, so the comparison is: the image of
// Gr H C(X, Y) in Gr H C[M^-1](X, Y) has the rank of the stable image of m.

#include <memory>
#include <string>
#include <vector>

#include "pogcat/gr_homology.hpp"
#include "pogcat/quotient.hpp"
#include "pogcat/twisted.hpp"

namespace pogcat {

namespace detail {

inline size_t field_rank(const IntMatrix& A, Coeff c) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    return c == Coeff::F2 ? rank_f2(A) : rank(A);
}

inline IntMatrix hcat(const IntMatrix& A, const IntMatrix& B) {
    size_t rows = std::max(A.rows(), B.rows());
    IntMatrix out(rows, A.cols() + B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) out(i, j) = A(i, j);
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) out(i, A.cols() + j) = B(i, j);
    return out;
}

inline IntMatrix cycles(const ChainComplexZ& K, int k, Coeff c) {
    IntMatrix d = K.differential(k);
    if (c == Coeff::Z) return d.rows() == 0 ? IntMatrix::identity(K.dim(k)) : kernel_basis(d);
    auto ker = kernel_f2(d);
    IntMatrix out(K.dim(k), ker.size());
    for (size_t j = 0; j < ker.size(); ++j)
        for (size_t i = 0; i < K.dim(k); ++i) out(i, j) = ker[j][i];
    return out;
}

// rank of the image of span(W) in H^k(K) = rank[B | W] - rank B
inline size_t homology_image_rank(const ChainComplexZ& K, int k, const IntMatrix& W, Coeff c) {
    IntMatrix B = K.differential(k - 1);
    if (B.rows() != K.dim(k)) B = IntMatrix(K.dim(k), 0);
    return field_rank(hcat(B, W), c) - field_rank(B, c);
}

}  // namespace detail

// ---------------------------------------------------------------- modules

struct ModuleLocalizationReport {
    bool acyclic_at_A = true;
    bool precondition = true;  // Gr M(A) acyclic for A in A
    bool quasi_iso = true;
    std::vector<std::string> notes;
};

inline std::vector<int> words_with_bars(const QuotientCategory& Q, int X, int Y, int max_bars) {
    std::vector<int> out;
    for (int g : Q.hom(X, Y))
        if (static_cast<int>(Q.letters(g).size()) <= max_bars + 1) out.push_back(g);
    return out;
}

/// Gr(A\M(A)) acyclic (window form) for M = C(-, Y), for every A in A.
inline bool quotient_module_acyclic_at_A(const QuotientCategory& Q, int Y) {
    for (int A : Q.objects())
        if (Q.in_subcategory(A) && !gr_classes_die(Q, words_with_bars(Q, A, Y, Q.max_bars() - 1), Q.hom(A, Y))) return false;
    return true;
}

/// Per stratum: the inclusion of the complex on `sub` into the one on
/// `gens` is a quasi-isomorphism.
inline bool gr_inclusion_quasi_iso(const CAinfCategory& C, const std::vector<int>& sub, const std::vector<int>& gens) {
    for (auto& w : stratum_weights(C, gens)) {
        GrStratum small = gr_stratum(C, sub, w), big = gr_stratum(C, gens, w);
        if (C.coeff == Coeff::Z) {
            ChainMap inc = stratum_inclusion(small, big);
            if (!is_quasi_iso(inc).quasi_iso) return false;
            continue;
        }
        std::set<int> ks;
        for (int k : small.complex.degrees()) ks.insert(k);
        for (int k : big.complex.degrees()) ks.insert(k);
        ChainMap inc = stratum_inclusion(small, big);
        for (int k : ks) {
            size_t hs = homology_f2(small.complex, k), hb = homology_f2(big.complex, k);
            if (hs != hb) return false;
            IntMatrix Z = detail::cycles(small.complex, k, Coeff::F2);
            IntMatrix img = small.complex.dim(k) ? inc.at(k) * Z : IntMatrix(big.complex.dim(k), 0);
            if (detail::homology_image_rank(big.complex, k, img, Coeff::F2) != hs) return false;
        }
    }
    return true;
}

inline ModuleLocalizationReport check_module_localization(const QuotientCategory& Q, int Y) {
    ModuleLocalizationReport rep;
    rep.acyclic_at_A = quotient_module_acyclic_at_A(Q, Y);
    if (!rep.acyclic_at_A) rep.notes.push_back("Gr of the localized module has a surviving cycle at an object of A");
    for (int A : Q.objects())
        if (Q.in_subcategory(A) && !gr_acyclic(gr_homology(Q.base(), A, Y))) rep.precondition = false;
    if (!rep.precondition) {
        rep.notes.push_back("Gr M(A) is not acyclic; quasi-isomorphism not tested");
        return rep;
    }
    for (int X : Q.objects())
        if (!gr_inclusion_quasi_iso(Q, words_with_bars(Q, X, Y, 0), Q.hom(X, Y))) {
            rep.quasi_iso = false;
            rep.notes.push_back("inclusion is not a quasi-isomorphism at " + Q.object_name(X));
        }
    return rep;
}

// ---------------------------------------------------------------- categories

struct LocalizingArrow {
    std::string name;
    int X1 = 0, X2 = 0;  // m : X1 -> X2
    Element m;
};

/// C[M^-1] with words capped at `max_bars`. Objects of C keep their ids
/// inside the twisted category; the cones come after them.
class Localization {
public:
    Localization(const CAinfCategory& C, const std::vector<LocalizingArrow>& M, int max_bars) : C_(C) {
        std::vector<TwistedObject> objs;
        for (int X : C.objects()) {
            objs_.push_back(static_cast<int>(objs.size()));
            objs.push_back(single(C.object_name(X), X));
        }
        std::vector<int> cones;
        for (auto& a : M) {
            cones.push_back(static_cast<int>(objs.size()));
            objs.push_back(cone("Cone(" + a.name + ")", a.X1, a.X2, a.m));
        }
        T_ = std::make_unique<TwistedCategory>(C, objs);
        Q_ = std::make_unique<QuotientCategory>(*T_, cones, max_bars);
        view_ = std::make_unique<FullSubcategory>(*Q_, objs_);
    }

    const CAinfCategory& category() const { return *view_; }
    const QuotientCategory& quotient() const { return *Q_; }
    const TwistedCategory& twisted() const { return *T_; }
    /// id of an object of C in the localization
    int object(int X) const {
        auto all = C_.objects();
        return objs_.at(static_cast<size_t>(std::find(all.begin(), all.end(), X) - all.begin()));
    }

    /// Words of one letter coming from C(X, Y).
    std::vector<int> base_words(int X, int Y) const {
        std::vector<int> out;
        for (int g : T_->hom(object(X), object(Y))) out.push_back(Q_->intern({g}));
        return out;
    }

private:
    const CAinfCategory& C_;
    std::vector<int> objs_;
    std::unique_ptr<TwistedCategory> T_;
    std::unique_ptr<QuotientCategory> Q_;
    std::unique_ptr<FullSubcategory> view_;
};

struct TelescopeEntry {
    Rational weight;
    int degree = 0;
    size_t telescope_rank = 0;   // stable image of m on Gr H C(X, Y)
    size_t image_rank = 0;       // image of Gr H C(X, Y) in Gr H C[M^-1](X, Y)
    size_t localized_rank = 0;   // all of Gr H of the capped localized hom
    size_t stages = 0;           // powers of m until the image stopped shrinking
};

struct TelescopeReport {
    std::vector<TelescopeEntry> entries;
    bool ok() const {
        for (auto& e : entries)
            if (e.telescope_rank != e.image_rank) return false;
        return true;
    }
};

/// Compares, stratum by stratum and degree by degree, the telescope of
/// precomposition by m : X -> X on Gr H C(X, Y) with the image of
/// Gr H C(X, Y) in the localization.
inline TelescopeReport compare_telescope(const CAinfCategory& C, const Localization& L, int X, int Y, const Element& m) {
    TelescopeReport rep;
    const Coeff c = C.coeff;
    if (C.min_weight(m) != Rational(0)) throw std::invalid_argument("compare_telescope: m must have weight 0");
    const auto& base = C.hom(X, Y);
    const auto& Q = L.quotient();
    auto small_words = L.base_words(X, Y);
    auto big_words = Q.hom(L.object(X), L.object(Y));
    for (auto& w : stratum_weights(C, base)) {
        GrStratum K = gr_stratum(C, base, w);
        GrStratum Ks = gr_stratum(Q, small_words, w), Kb = gr_stratum(Q, big_words, w);
        ChainMap inc = stratum_inclusion(Ks, Kb);
        for (auto& [k, gens] : K.basis) {
            TelescopeEntry e;
            e.weight = w;
            e.degree = k;
            // the matrix of f |-> Gr mu2(m, f) on this degree
            IntMatrix Mk(gens.size(), gens.size());
            std::map<int, size_t> pos;
            for (size_t i = 0; i < gens.size(); ++i) pos[gens[i]] = i;
            for (size_t j = 0; j < gens.size(); ++j)
                for (auto& [t, coef] : C.mu_elements({m, C.generator(gens[j])})) {
                    if (C.term_weight(t) != C.gen(gens[j]).weight + C.min_weight(m)) continue;
                    auto it = pos.find(t.first);
                    if (it == pos.end()) throw BasisEscape("telescope: mu2(m, f) leaves the stratum");
                    Mk(it->second, j) = detail::checked_add(Mk(it->second, j), coef);
                }
            IntMatrix W = detail::cycles(K.complex, k, c);
            size_t r = detail::homology_image_rank(K.complex, k, W, c);
            for (;;) {
                IntMatrix next = Mk * W;
                size_t rn = detail::homology_image_rank(K.complex, k, next, c);
                ++e.stages;
                if (rn == r) break;
                r = rn;
                W = next;
            }
            e.telescope_rank = r;
            IntMatrix Zs = detail::cycles(Ks.complex, k, c);
            IntMatrix img = Ks.complex.dim(k) ? inc.at(k) * Zs : IntMatrix(Kb.complex.dim(k), 0);
            e.image_rank = detail::homology_image_rank(Kb.complex, k, img, c);
            IntMatrix Zb = detail::cycles(Kb.complex, k, c);
            e.localized_rank = detail::homology_image_rank(Kb.complex, k, Zb, c);
            rep.entries.push_back(e);
        }
    }
    return rep;
}

}  // namespace pogcat
