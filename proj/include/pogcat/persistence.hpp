#pragma once

// Finite-type persistence modules over a totally ordered pog (Q or (1/n)Z,
// and their dense completion R).
//
// Orientation: a module is covariant along <=, i.e. a <= b gives
// G(a) -> G(b). A module is described by critical values c_0 < ... < c_m.
// At each c_i there is a point component G(c_i); on the open region
// (c_i, c_{i+1}) (and (c_m, inf) for the last) the module is constant with
// identity transitions. Below c_0 the module is zero. Right-continuous
// modules are the ones whose point and region components agree.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pogcat/int_matrix.hpp"
#include "pogcat/rational.hpp"

namespace pogcat {

struct PresentationIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PersistenceModule {
    std::vector<Rational> critical;
    std::vector<size_t> point_rank;    // at c_i
    std::vector<size_t> region_rank;   // on (c_i, c_{i+1})
    std::vector<IntMatrix> to_region;  // G(c_i) -> region i
    std::vector<IntMatrix> to_point;   // region i -> G(c_{i+1}); size m
    bool zero_below = true;            // false: nothing is known below c_0

    /// Location of a value: 2*i for the point c_i, 2*i+1 for region i, -1 below c_0.
    int locate(const Rational& a) const {
        if (critical.empty() || a < critical.front()) return -1;
        auto it = std::upper_bound(critical.begin(), critical.end(), a);
        int i = static_cast<int>(it - critical.begin()) - 1;
        return critical[i] == a ? 2 * i : 2 * i + 1;
    }

    size_t rank_at_location(int loc) const {
        if (loc < 0) return 0;
        return loc % 2 == 0 ? point_rank[loc / 2] : region_rank[loc / 2];
    }

    /// Transition between locations lo <= hi.
    IntMatrix map_between(int lo, int hi) const {
        if (lo > hi) throw std::invalid_argument("persistence: map against the order");
        if (lo < 0) return IntMatrix(rank_at_location(hi), 0);
        IntMatrix m = IntMatrix::identity(rank_at_location(lo));
        for (int loc = lo; loc < hi; ++loc) {
            int i = loc / 2;
            m = (loc % 2 == 0 ? to_region[i] : to_point[i]) * m;
        }
        return m;
    }

    void validate() const {
        size_t n = critical.size();
        if (point_rank.size() != n || region_rank.size() != n || to_region.size() != n ||
            to_point.size() + 1 != std::max<size_t>(n, 1))
            throw std::invalid_argument("persistence module: inconsistent sizes");
        for (size_t i = 0; i + 1 < n; ++i)
            if (!(critical[i] < critical[i + 1])) throw std::invalid_argument("persistence module: critical values must increase");
        for (size_t i = 0; i < n; ++i) {
            if (to_region[i].rows() != region_rank[i] || to_region[i].cols() != point_rank[i])
                throw std::invalid_argument("persistence module: bad map at " + critical[i].str());
            if (i + 1 < n && (to_point[i].rows() != point_rank[i + 1] || to_point[i].cols() != region_rank[i]))
                throw std::invalid_argument("persistence module: bad map after " + critical[i].str());
        }
    }

    bool right_continuous() const {
        for (size_t i = 0; i < critical.size(); ++i)
            if (!(to_region[i] == IntMatrix::identity(point_rank[i]))) return false;
        return true;
    }
};

struct Interval {
    Rational lo;
    bool lo_closed = true;
    std::optional<Rational> hi;  // absent: unbounded above
    bool hi_closed = false;

    bool contains(const Rational& x) const {
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (hi && (*hi < x || (x == *hi && !hi_closed))) return false;
        return true;
    }
};

/// Direct sum of interval modules Z_I, one summand per interval, with the
/// endpoints as critical values.
inline PersistenceModule barcode_module(const std::vector<Interval>& bars) {
    std::set<Rational> crit;
    for (auto& b : bars) {
        if (b.hi && !(b.lo < *b.hi)) throw std::invalid_argument("barcode: empty interval");
        crit.insert(b.lo);
        if (b.hi) crit.insert(*b.hi);
    }
    PersistenceModule m;
    m.critical.assign(crit.begin(), crit.end());
    const size_t n = m.critical.size();
    // a witness value inside each region
    std::vector<Rational> inside(n);
    for (size_t i = 0; i < n; ++i)
        inside[i] = i + 1 < n ? (m.critical[i] + m.critical[i + 1]) / Rational(2) : m.critical[i] + Rational(1);
    auto members = [&](const Rational& x) {
        std::vector<size_t> out;
        for (size_t j = 0; j < bars.size(); ++j)
            if (bars[j].contains(x)) out.push_back(j);
        return out;
    };
    auto inclusion = [](const std::vector<size_t>& from, const std::vector<size_t>& to) {
        IntMatrix a(to.size(), from.size());
        for (size_t j = 0; j < from.size(); ++j)
            for (size_t i = 0; i < to.size(); ++i)
                if (to[i] == from[j]) a(i, j) = 1;
        return a;
    };
    for (size_t i = 0; i < n; ++i) {
        auto pt = members(m.critical[i]), rg = members(inside[i]);
        m.point_rank.push_back(pt.size());
        m.region_rank.push_back(rg.size());
        m.to_region.push_back(inclusion(pt, rg));
        if (i + 1 < n) m.to_point.push_back(inclusion(rg, members(m.critical[i + 1])));
    }
    if (n == 0) m.to_point.clear();
    m.validate();
    return m;
}

/// Z on an interval with endpoints lo < hi (hi may be absent = +inf).
inline PersistenceModule interval_module(const Rational& lo, bool lo_closed, const Rational* hi, bool hi_closed) {
    Interval b{lo, lo_closed, std::nullopt, hi_closed};
    if (hi) b.hi = *hi;
    return barcode_module({b});
}

/// Rank of the completed module at a: the limit of G(b) over b >= a, which
/// the finite presentation resolves to the component containing a.
inline size_t complete_persistence(const PersistenceModule& G, const Rational& a) {
    G.validate();
    int loc = G.locate(a);
    if (loc < 0 && !G.zero_below)
        throw PresentationIncomplete("value " + a.str() + " lies below the presented range");
    return G.rank_at_location(loc);
}

/// Natural transformations F -> H on a finite chain of sample values, as a
/// Z-basis (columns) of the solution lattice. Coordinates are the entries of
/// phi_s (row-major) for each sample s in order.
inline IntMatrix natural_transformations(const PersistenceModule& F, const PersistenceModule& H,
                                         const std::vector<int>& floc, const std::vector<int>& hloc) {
    const size_t n = floc.size();
    std::vector<size_t> offset(n + 1, 0);
    for (size_t s = 0; s < n; ++s) offset[s + 1] = offset[s] + F.rank_at_location(floc[s]) * H.rank_at_location(hloc[s]);
    std::vector<std::vector<int64_t>> rows;
    for (size_t s = 0; s + 1 < n; ++s) {
        // H(s->s') phi_s - phi_s' F(s->s') = 0
        IntMatrix hm = H.map_between(hloc[s], hloc[s + 1]);
        IntMatrix fm = F.map_between(floc[s], floc[s + 1]);
        size_t fa = F.rank_at_location(floc[s]), ha = H.rank_at_location(hloc[s]);
        size_t fb = F.rank_at_location(floc[s + 1]), hb = H.rank_at_location(hloc[s + 1]);
        for (size_t i = 0; i < hb; ++i)
            for (size_t j = 0; j < fa; ++j) {
                std::vector<int64_t> row(offset[n], 0);
                for (size_t k = 0; k < ha; ++k) row[offset[s] + k * fa + j] += hm(i, k);
                for (size_t k = 0; k < fb; ++k) row[offset[s + 1] + i * fb + k] -= fm(k, j);
                rows.push_back(std::move(row));
            }
    }
    IntMatrix A(rows.size(), offset[n]);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < offset[n]; ++c) A(r, c) = rows[r][c];
    return kernel_basis(A);
}

struct AdjunctionReport {
    size_t real_rank = 0;      // rank of hom(F, completion of G), sampled at critical values and regions
    size_t rational_rank = 0;  // rank of hom(F|_Q, G) on a rational grid
    bool lattices_agree = false;
    bool ok() const { return lattices_agree && real_rank == rational_rank; }
};

/// Compares hom(F, G-bar) with hom(F|_Q, G). The real side is sampled once per
/// component (critical values, one point per open region); the rational
/// side on the grid (1/N)Z covering all critical values, with N a multiple
/// of twice every denominator. Restricting rational solutions to the real
/// samples must give exactly the real solution lattice.
inline AdjunctionReport check_completion_adjunction(const PersistenceModule& F, const PersistenceModule& G) {
    F.validate();
    G.validate();
    std::set<Rational> crit(F.critical.begin(), F.critical.end());
    crit.insert(G.critical.begin(), G.critical.end());
    AdjunctionReport rep;
    if (crit.empty()) {
        rep.lattices_agree = true;
        return rep;
    }
    std::vector<Rational> cv(crit.begin(), crit.end());
    std::vector<Rational> coarse;
    coarse.push_back(cv.front() - Rational(1));
    for (size_t i = 0; i < cv.size(); ++i) {
        coarse.push_back(cv[i]);
        coarse.push_back(i + 1 < cv.size() ? (cv[i] + cv[i + 1]) / Rational(2) : cv[i] + Rational(1));
    }
    int64_t N = 2;
    for (auto& c : cv) N = lcm64(N, 2 * c.den());
    std::vector<Rational> dense;
    for (int64_t k = (coarse.front() * Rational(N)).floor(); Rational(k, N) <= coarse.back(); ++k)
        dense.emplace_back(k, N);

    auto locations = [](const PersistenceModule& M, const std::vector<Rational>& xs) {
        std::vector<int> out;
        for (auto& x : xs) out.push_back(M.locate(x));
        return out;
    };
    auto fc = locations(F, coarse), gc = locations(G, coarse);
    auto fd = locations(F, dense), gd = locations(G, dense);
    IntMatrix Kc = natural_transformations(F, G, fc, gc);
    IntMatrix Kd = natural_transformations(F, G, fd, gd);
    rep.real_rank = Kc.cols();
    rep.rational_rank = Kd.cols();

    // coordinates of each coarse sample inside the dense vector
    std::vector<size_t> dense_offset(dense.size() + 1, 0);
    for (size_t s = 0; s < dense.size(); ++s)
        dense_offset[s + 1] = dense_offset[s] + F.rank_at_location(fd[s]) * G.rank_at_location(gd[s]);
    std::vector<size_t> pick;
    for (auto& x : coarse) {
        size_t s = static_cast<size_t>(std::find(dense.begin(), dense.end(), x) - dense.begin());
        for (size_t i = dense_offset[s]; i < dense_offset[s + 1]; ++i) pick.push_back(i);
    }
    IntMatrix P(pick.size(), Kd.cols());
    for (size_t r = 0; r < pick.size(); ++r)
        for (size_t c = 0; c < Kd.cols(); ++c) P(r, c) = Kd(pick[r], c);
    bool agree = rank(P) == Kd.cols();
    for (size_t c = 0; agree && c < P.cols(); ++c) agree = in_lattice(Kc, P.column(c));
    for (size_t c = 0; agree && c < Kc.cols(); ++c) agree = in_lattice(P, Kc.column(c));
    rep.lattices_agree = agree;
    return rep;
}

}  // namespace pogcat
