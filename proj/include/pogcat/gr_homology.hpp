#pragma once

// Homology of associated graded hom complexes.
//
// Gr mu1 preserves total weight, so Gr C(X, Y) splits into strata: the
// stratum of weight w has basis T^{w - wt(g)} g for the generators with
// wt(g) <= w, and the differential is the weight-preserving part of mu1.
// The stratum complex only changes at generator weights, so it is enough to
// look at w in that finite set.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pogcat/cainf.hpp"
#include "pogcat/homology.hpp"

namespace pogcat {

struct BasisEscape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Kernel basis of A over F2, by reduction to row echelon form.
inline std::vector<std::vector<int64_t>> kernel_f2(const IntMatrix& A) {
    const size_t m = A.rows(), n = A.cols();
    std::vector<std::vector<int64_t>> R(m, std::vector<int64_t>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) R[i][j] = ((A(i, j) % 2) + 2) % 2;
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t j = 0; j < n && row < m; ++j) {
        size_t p = row;
        while (p < m && R[p][j] == 0) ++p;
        if (p == m) continue;
        std::swap(R[p], R[row]);
        for (size_t i = 0; i < m; ++i)
            if (i != row && R[i][j])
                for (size_t k = 0; k < n; ++k) R[i][k] ^= R[row][k];
        pivot_col.push_back(static_cast<int>(j));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int j : pivot_col) is_pivot[j] = true;
    std::vector<std::vector<int64_t>> out;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int64_t> v(n);
        v[f] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = R[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

struct GrStratum {
    Rational weight;
    ChainComplexZ complex;
    std::map<int, std::vector<int>> basis;  // degree -> generators in order
};

/// Stratum complex of Gr C(X, Y) at weight w, on `gens` (default: the hom
/// basis). Throws BasisEscape if Gr mu1 leaves the given generators.
inline GrStratum gr_stratum(const CAinfCategory& C, const std::vector<int>& gens, const Rational& w) {
    GrStratum s;
    s.weight = w;
    std::map<int, size_t> pos;
    for (int g : gens)
        if (C.gen(g).weight <= w) {
            auto& b = s.basis[C.gen(g).degree];
            pos[g] = b.size();
            b.push_back(g);
        }
    for (auto& [k, b] : s.basis) s.complex.set_dim(k, b.size());
    for (auto& [k, b] : s.basis) {
        IntMatrix d(s.complex.dim(k + 1), b.size());
        for (size_t j = 0; j < b.size(); ++j)
            for (auto& [t, c] : C.mu({b[j]})) {
                if (C.term_weight(t) != C.gen(b[j]).weight) continue;
                auto it = pos.find(t.first);
                if (it == pos.end()) throw BasisEscape("Gr mu1 of " + C.gen(b[j]).name + " leaves the basis: " + C.gen(t.first).name);
                d(it->second, j) = detail::checked_add(d(it->second, j), c);
            }
        if (d.rows() > 0) s.complex.set_differential(k, std::move(d));
    }
    s.complex.validate(C.coeff == Coeff::F2);
    return s;
}

inline std::set<Rational> stratum_weights(const CAinfCategory& C, const std::vector<int>& gens) {
    std::set<Rational> out;
    for (int g : gens) out.insert(C.gen(g).weight);
    return out;
}

/// Homology of every stratum: weight -> degree -> group (over F2 only the
/// free rank is meaningful).
inline std::map<Rational, std::map<int, AbelianGroup>> gr_homology(const CAinfCategory& C, const std::vector<int>& gens) {
    std::map<Rational, std::map<int, AbelianGroup>> out;
    for (auto& w : stratum_weights(C, gens)) {
        GrStratum s = gr_stratum(C, gens, w);
        auto& h = out[w];
        for (int k : s.complex.degrees()) {
            if (C.coeff == Coeff::F2) {
                AbelianGroup g;
                g.free_rank = homology_f2(s.complex, k);
                h[k] = g;
            } else {
                h[k] = homology(s.complex, k);
            }
        }
    }
    return out;
}

inline std::map<Rational, std::map<int, AbelianGroup>> gr_homology(const CAinfCategory& C, int X, int Y) {
    return gr_homology(C, C.hom(X, Y));
}

inline bool gr_acyclic(const std::map<Rational, std::map<int, AbelianGroup>>& h) {
    for (auto& [w, byk] : h)
        for (auto& [k, g] : byk)
            if (!g.is_zero()) return false;
    return true;
}

/// Coordinate inclusion of the stratum on `sub` into the stratum on `gens`.
inline ChainMap stratum_inclusion(const GrStratum& small, const GrStratum& big) {
    ChainMap f;
    f.source = &small.complex;
    f.target = &big.complex;
    for (auto& [k, b] : small.basis) {
        auto it = big.basis.find(k);
        IntMatrix m(big.complex.dim(k), b.size());
        for (size_t j = 0; j < b.size(); ++j) {
            size_t i = 0;
            while (it != big.basis.end() && i < it->second.size() && it->second[i] != b[j]) ++i;
            if (it == big.basis.end() || i == it->second.size()) throw std::invalid_argument("stratum_inclusion: not a subcomplex");
            m(i, j) = 1;
        }
        f.components[k] = std::move(m);
    }
    return f;
}

/// True iff every Gr cycle on `sub` bounds in the complex on `gens`, in
/// every stratum. Over F2 boundaries are taken mod 2.
inline bool gr_classes_die(const CAinfCategory& C, const std::vector<int>& sub, const std::vector<int>& gens) {
    for (auto& w : stratum_weights(C, gens)) {
        GrStratum small = gr_stratum(C, sub, w), big = gr_stratum(C, gens, w);
        ChainMap inc = stratum_inclusion(small, big);
        if (C.coeff == Coeff::Z) {
            if (!classes_die(inc)) return false;
            continue;
        }
        // F2: a cycle bounds iff appending it to the boundaries keeps the rank
        for (int k : small.complex.degrees()) {
            IntMatrix bd = big.complex.differential(k - 1);
            size_t rb = bd.cols() ? rank_f2(bd) : 0;
            for (auto& v : detail::kernel_f2(small.complex.differential(k))) {
                auto img = inc.at(k).apply(v);
                IntMatrix aug(bd.rows(), bd.cols() + 1);
                for (size_t i = 0; i < bd.rows(); ++i) {
                    for (size_t j = 0; j < bd.cols(); ++j) aug(i, j) = bd(i, j);
                    aug(i, bd.cols()) = img[i];
                }
                if (rank_f2(aug) != rb) return false;
            }
        }
    }
    return true;
}

}  // namespace pogcat
