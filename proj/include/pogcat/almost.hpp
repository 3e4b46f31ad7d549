#pragma once

// Almost-module predicates over the truncated Novikov ring.
//
// The maximal ideal m = (T^{>0}) is not finitely generated, so decisions are
// made relative to a denominator bound D: m is probed by T^{1/k}, k = 1..D.
// Modules are finitely presented over R = Z[(1/L)Z+]/I_c, where the grid L
// is the lcm of 1..D and of every denominator in the presentation; as a
// Z-module R^g is then free of finite rank and everything reduces to integer
// lattice computations.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pogcat/int_matrix.hpp"
#include "pogcat/monoid_ring.hpp"

namespace pogcat {

struct AlmostSetup {
    int64_t denominator_bound = 1;  // D
};

/// Cokernel of a relations matrix: generators e_0..e_{g-1}, relations are
/// columns whose entries are truncated-ring elements.
struct TruncatedModule {
    size_t generators = 0;
    Rational cutoff{1};
    std::vector<std::vector<TermMap>> relations;  // each of length `generators`

    static TruncatedModule free(size_t g, const Rational& cutoff) { return {g, cutoff, {}}; }

    /// R / (T^e).
    static TruncatedModule cyclic(const Exponent& e, const Rational& cutoff) {
        TruncatedModule m{1, cutoff, {}};
        m.relations.push_back({TermMap{{e, 1}}});
        return m;
    }
};

/// Images of generators: column j is f(e_j) in the target.
struct TruncatedModuleMap {
    TruncatedModule source, target;
    std::vector<std::vector<TermMap>> columns;

    static TruncatedModuleMap identity(const TruncatedModule& m) {
        TruncatedModuleMap f{m, m, {}};
        for (size_t j = 0; j < m.generators; ++j) {
            std::vector<TermMap> col(m.generators);
            col[j][Exponent(0)] = 1;
            f.columns.push_back(col);
        }
        return f;
    }
};

inline TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b) {
    if (a.cutoff != b.cutoff) throw DescriptorMismatch("direct_sum: cutoffs differ");
    TruncatedModule out{a.generators + b.generators, a.cutoff, {}};
    for (auto& r : a.relations) {
        auto col = r;
        col.resize(out.generators);
        out.relations.push_back(col);
    }
    for (auto& r : b.relations) {
        std::vector<TermMap> col(a.generators);
        col.insert(col.end(), r.begin(), r.end());
        out.relations.push_back(col);
    }
    return out;
}

namespace detail {

inline int64_t almost_grid(const AlmostSetup& s, const TruncatedModule& m, const Rational& cutoff,
                           const std::vector<std::vector<TermMap>>* extra = nullptr) {
    if (s.denominator_bound < 1) throw std::invalid_argument("almost setup: denominator bound must be >= 1");
    int64_t L = 1;
    for (int64_t k = 1; k <= s.denominator_bound; ++k) L = lcm64(L, k);
    L = lcm64(L, cutoff.den());
    auto scan = [&](const std::vector<std::vector<TermMap>>& cols) {
        for (auto& col : cols)
            for (auto& entry : col)
                for (auto& [e, c] : entry) {
                    if (e.sign() < 0) throw MalformedElement("negative exponent in presentation");
                    L = lcm64(L, e.den());
                }
    };
    scan(m.relations);
    if (extra) scan(*extra);
    return L;
}

// Z-coordinates: (generator i, exponent k/L) -> i * K + k, K = cutoff * L.
struct Coordinates {
    int64_t L = 1;
    size_t K = 0;
    size_t generators = 0;
    Rational cutoff;
    size_t dim() const { return K * generators; }

    // T^shift * (column vector of ring elements), as an integer vector.
    std::vector<int64_t> embed(const std::vector<TermMap>& col, const Exponent& shift) const {
        std::vector<int64_t> v(dim(), 0);
        for (size_t i = 0; i < col.size(); ++i)
            for (auto& [e, c] : col[i]) {
                Rational x = e + shift;
                if (x >= cutoff) continue;
                int64_t k = (x * Rational(L)).num();
                v[i * K + static_cast<size_t>(k)] = checked_add(v[i * K + static_cast<size_t>(k)], c);
            }
        return v;
    }
    // T^shift applied to an integer vector.
    std::vector<int64_t> shift(const std::vector<int64_t>& x, const Exponent& s) const {
        std::vector<int64_t> v(dim(), 0);
        int64_t ds = (s * Rational(L)).num();
        for (size_t i = 0; i < generators; ++i)
            for (size_t k = 0; k < K; ++k) {
                int64_t c = x[i * K + k];
                if (c == 0) continue;
                int64_t nk = static_cast<int64_t>(k) + ds;
                if (nk >= static_cast<int64_t>(K)) continue;
                v[i * K + static_cast<size_t>(nk)] = c;
            }
        return v;
    }
};

inline Coordinates coordinates(int64_t L, size_t generators, const Rational& cutoff) {
    Rational K = cutoff * Rational(L);
    if (!K.is_integer()) throw std::invalid_argument("cutoff incompatible with the presentation grid");
    return Coordinates{L, static_cast<size_t>(K.num()), generators, cutoff};
}

// Z-lattice of relations, spanned by T^{k/L} * relation for all k.
inline IntMatrix relation_lattice(const Coordinates& co, const std::vector<std::vector<TermMap>>& rels) {
    std::vector<std::vector<int64_t>> cols;
    for (auto& r : rels)
        for (size_t k = 0; k < co.K; ++k) cols.push_back(co.embed(r, Rational(static_cast<int64_t>(k), co.L)));
    return IntMatrix::from_columns(co.dim(), cols);
}

inline void check_cutoff(const TruncatedModule& m, const Rational& cutoff) {
    if (cutoff.sign() <= 0) throw std::invalid_argument("almost: cutoff must be positive");
    if (cutoff > m.cutoff)
        throw std::invalid_argument("cutoff " + cutoff.str() + " incompatible with module presented at " + m.cutoff.str());
    for (auto& r : m.relations)
        if (r.size() != m.generators) throw std::invalid_argument("almost: relation length mismatch");
}

}  // namespace detail

/// True iff T^{1/k} annihilates M for all k <= D, decided below the cutoff.
inline bool almost_zero(const TruncatedModule& M, const AlmostSetup& setup, const Rational& cutoff) {
    detail::check_cutoff(M, cutoff);
    int64_t L = detail::almost_grid(setup, M, cutoff);
    auto co = detail::coordinates(L, M.generators, cutoff);
    IntMatrix lattice = detail::relation_lattice(co, M.relations);
    for (size_t i = 0; i < M.generators; ++i) {
        std::vector<TermMap> gen(M.generators);
        gen[i][Exponent(0)] = 1;
        for (int64_t k = 1; k <= setup.denominator_bound; ++k)
            if (!in_lattice(lattice, co.embed(gen, Rational(1, k)))) return false;
    }
    return true;
}

struct AlmostIsoReport {
    bool kernel_almost_zero = false;
    bool cokernel_almost_zero = false;
    bool almost_iso() const { return kernel_almost_zero && cokernel_almost_zero; }
};

inline AlmostIsoReport almost_iso_report(const TruncatedModuleMap& f, const AlmostSetup& setup, const Rational& cutoff) {
    detail::check_cutoff(f.source, cutoff);
    detail::check_cutoff(f.target, cutoff);
    if (f.columns.size() != f.source.generators) throw std::invalid_argument("almost_iso: map shape mismatch");
    for (auto& c : f.columns)
        if (c.size() != f.target.generators) throw std::invalid_argument("almost_iso: map shape mismatch");

    AlmostIsoReport r;
    // cokernel: target with the images as extra relations
    TruncatedModule coker = f.target;
    coker.cutoff = cutoff;
    for (auto& c : f.columns) coker.relations.push_back(c);
    r.cokernel_almost_zero = almost_zero(coker, setup, cutoff);

    // kernel: {x in Z^{src} : F x in lattice(target)} modulo lattice(source)
    int64_t L = lcm64(detail::almost_grid(setup, f.source, cutoff, &f.columns),
                      detail::almost_grid(setup, f.target, cutoff));
    auto cs = detail::coordinates(L, f.source.generators, cutoff);
    auto ct = detail::coordinates(L, f.target.generators, cutoff);
    IntMatrix src_lattice = detail::relation_lattice(cs, f.source.relations);
    IntMatrix tgt_lattice = detail::relation_lattice(ct, f.target.relations);
    // F as an integer matrix on Z-coordinates
    std::vector<std::vector<int64_t>> fcols;
    for (size_t j = 0; j < f.source.generators; ++j)
        for (size_t k = 0; k < cs.K; ++k)
            fcols.push_back(ct.embed(f.columns[j], Rational(static_cast<int64_t>(k), L)));
    IntMatrix F = IntMatrix::from_columns(ct.dim(), fcols);
    // solutions of F x - B y = 0
    IntMatrix negB(tgt_lattice.rows(), tgt_lattice.cols());
    for (size_t i = 0; i < negB.rows(); ++i)
        for (size_t j = 0; j < negB.cols(); ++j) negB(i, j) = -tgt_lattice(i, j);
    IntMatrix K = kernel_basis(IntMatrix::hconcat(F, negB));
    r.kernel_almost_zero = true;
    for (size_t c = 0; c < K.cols() && r.kernel_almost_zero; ++c) {
        std::vector<int64_t> x(cs.dim());
        for (size_t i = 0; i < cs.dim(); ++i) x[i] = K(i, c);
        for (int64_t k = 1; k <= setup.denominator_bound; ++k)
            if (!in_lattice(src_lattice, cs.shift(x, Rational(1, k)))) {
                r.kernel_almost_zero = false;
                break;
            }
    }
    return r;
}

inline bool almost_iso(const TruncatedModuleMap& f, const AlmostSetup& setup, const Rational& cutoff) {
    return almost_iso_report(f, setup, cutoff).almost_iso();
}

}  // namespace pogcat
