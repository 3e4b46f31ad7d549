#pragma once

// The completion example: M = sum over theta in (1/n)Z cap [0, 1) of
// t^theta Z[[t]], compared with the monoid ring truncations Z[(1/n)Z+]/I_k,
// and the series sum_m T^{m + 1/m}, which lies in the completion but not in
// M (it needs infinitely many theta).

#include <set>
#include <vector>

#include "pogcat/graded_module.hpp"
#include "pogcat/monoid_ring.hpp"

namespace pogcat {

struct NovikovRow {
    int64_t n = 1;
    Rational k;
    size_t module_rank = 0;   // rank of M / I_k M
    size_t ring_rank = 0;     // rank of Z[(1/n)Z+] / I_k
    bool torsion_free = true;
    std::vector<Rational> grades;
    bool ok() const { return module_rank == ring_rank && torsion_free; }
};

inline NovikovRow novikov_row(int64_t n, const Rational& k) {
    NovikovRow row;
    row.n = n;
    row.k = k;
    auto M = shift_module(n, k + Rational(2));
    for (auto& [g, grp] : quotient_by_ideal(M, k)) {
        row.module_rank += grp.free_rank;
        if (!grp.torsion.empty()) row.torsion_free = false;
        row.grades.push_back(g);
    }
    row.ring_rank = ring_completion(Pog::scaled_integers(n), k).rank();
    return row;
}

/// The first `terms` summands of sum_m T^{m + 1/m}.
struct DivergenceWitness {
    size_t terms = 0;
    size_t theta_classes = 0;     // distinct fractional parts: unbounded as terms grows
    size_t below_cutoff = 0;      // summands below the cutoff: stable as terms grows
    bool in_module = false;       // membership in M over the denominators <= n
    bool in_completion = true;
};

inline DivergenceWitness divergence_witness(size_t terms, int64_t n, const Rational& cutoff) {
    DivergenceWitness w;
    w.terms = terms;
    std::set<Rational> thetas;
    Pog grid = Pog::scaled_integers(n);
    bool all_on_grid = true;
    for (size_t m = 1; m <= terms; ++m) {
        Rational e = Rational(static_cast<int64_t>(m)) + Rational(1, static_cast<int64_t>(m));
        thetas.insert(e - Rational(e.floor()));
        if (!grid.contains(e)) all_on_grid = false;
        if (e < cutoff) ++w.below_cutoff;
    }
    w.theta_classes = thetas.size();
    // an element of M uses finitely many theta, all in (1/n)Z
    w.in_module = all_on_grid && w.theta_classes <= static_cast<size_t>(n);
    return w;
}

}  // namespace pogcat
