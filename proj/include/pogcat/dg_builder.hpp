#pragma once

// Curved categories of filtered graded free modules (cCh-style).
//
// An object is a free module with a graded basis and a degree-one map d
// whose matrix entries are c * T^s. Homs are spanned by matrix units
// E_ij : v_j -> w_i (weight 0); with the product x.y = "x then y" = y o x,
//   mu1(f) = f o d_V - (-1)^{|f|} d_W o f,
//   mu2(f, g) = (-1)^{|f|} g o f,
//   mu0(V) = -d_V o d_V        (Z mode; d_V o d_V over F2).
// mu0 must have weight >= eps, so every curved composite of d carries at
// least that much T.

#include <string>
#include <tuple>
#include <vector>

#include "pogcat/cainf.hpp"

namespace pogcat {

struct FilteredComplex {
    std::string name;
    std::vector<int> degrees;
    // d(v_from) += coeff * T^shift * v_to
    struct Entry {
        int from, to;
        int64_t coeff;
        Rational shift;
    };
    std::vector<Entry> d;
};

struct CChCategory {
    TableCategory cat;
    // matrix_unit[V][W][i][j] = generator E^{VW}_{ij}
    std::vector<std::vector<std::vector<std::vector<int>>>> matrix_unit;
};

inline CChCategory cch_category(const std::vector<FilteredComplex>& objs, Coeff coeff, const Rational& cutoff,
                                const Rational& eps) {
    CChCategory out;
    TableCategory& C = out.cat;
    C.coeff = coeff;
    C.cutoff = cutoff;
    C.epsilon = eps;
    const int n = static_cast<int>(objs.size());
    for (auto& V : objs) C.add_object(V.name);
    for (auto& V : objs)
        for (auto& e : V.d)
            if (V.degrees.at(e.to) != V.degrees.at(e.from) + 1) throw CategoryError("d does not have degree 1 on " + V.name);
    out.matrix_unit.assign(n, std::vector<std::vector<std::vector<int>>>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto& M = out.matrix_unit[a][b];
            M.assign(objs[b].degrees.size(), std::vector<int>(objs[a].degrees.size()));
            for (size_t i = 0; i < objs[b].degrees.size(); ++i)
                for (size_t j = 0; j < objs[a].degrees.size(); ++j) {
                    std::string name = a == b ? objs[a].name : objs[a].name + objs[b].name;
                    name = "E" + name + "_" + std::to_string(i) + std::to_string(j);
                    M[i][j] = C.add_gen(name, a, b, objs[b].degrees[i] - objs[a].degrees[j], Rational(0));
                }
        }
    for (int a = 0; a < n; ++a) {
        Element e;
        for (size_t i = 0; i < objs[a].degrees.size(); ++i) C.add_term(e, {out.matrix_unit[a][a][i][i], Rational(0)}, 1);
        C.set_unit(a, e);
    }
    // decoded generator: (a, b, i, j)
    std::vector<std::tuple<int, int, int, int>> decode(C.num_gens());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (size_t i = 0; i < out.matrix_unit[a][b].size(); ++i)
                for (size_t j = 0; j < out.matrix_unit[a][b][i].size(); ++j)
                    decode[out.matrix_unit[a][b][i][j]] = {a, b, static_cast<int>(i), static_cast<int>(j)};

    for (int g = 0; g < static_cast<int>(C.num_gens()); ++g) {
        auto [a, b, i, j] = decode[g];
        int deg = C.gen(g).degree;
        Element m1;
        // E_ij o d_V: d_V(v_m) has v_j-coefficient -> E_im
        for (auto& e : objs[a].d)
            if (e.to == j) C.add_term(m1, {out.matrix_unit[a][b][i][e.from], e.shift}, e.coeff);
        // d_W o E_ij: d_W(w_i) = sum c w_k -> E_kj
        for (auto& e : objs[b].d)
            if (e.from == i) C.add_term(m1, {out.matrix_unit[a][b][e.to][j], e.shift}, -C.sign(deg) * e.coeff);
        C.set_mu({g}, m1);
        for (int c = 0; c < n; ++c)
            for (size_t k = 0; k < out.matrix_unit[b][c].size(); ++k) {
                // E^{bc}_{k i} after E^{ab}_{i j} = E^{ac}_{k j}
                int h = out.matrix_unit[b][c][k][i];
                Element m2;
                C.add_term(m2, {out.matrix_unit[a][c][k][j], Rational(0)}, C.sign(deg));
                C.set_mu({g, h}, m2);
            }
    }
    for (int a = 0; a < n; ++a) {
        Element w;
        for (auto& e1 : objs[a].d)
            for (auto& e2 : objs[a].d)
                if (e2.from == e1.to)
                    C.add_term(w, {out.matrix_unit[a][a][e2.to][e1.from], e1.shift + e2.shift},
                               C.sign(1) * detail::checked_mul(e1.coeff, e2.coeff));
        C.set_mu0(a, w);
    }
    return out;
}

/// The unit category: one object, one generator e, mu2(e, e) = e.
inline TableCategory unit_category(Coeff coeff, const Rational& cutoff, const Rational& eps) {
    TableCategory C;
    C.coeff = coeff;
    C.cutoff = cutoff;
    C.epsilon = eps;
    int x = C.add_object("*");
    int e = C.add_gen("e", x, x, 0, Rational(0));
    C.set_unit(x, C.generator(e));
    C.autounits();
    return C;
}

}  // namespace pogcat
