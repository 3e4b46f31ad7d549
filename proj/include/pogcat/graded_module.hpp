#pragma once

// P-graded Z[P+]-modules with finite support.
//
// Each grade carries a free component Z^r. The action of a cone element rho
// is a matrix component(g) -> component(g + rho). Actions are stored
// explicitly, keyed by (source grade, rho); an absent key means the identity
// when rho = 0 and the zero map otherwise. For an unquotiented pog the key
// (g, rho) is the same as the pair of grades (g, g + rho); over a quotient
// P/P0 it is not, since e.g. t and t^2 both map [0] to [0].

#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pogcat/homology.hpp"
#include "pogcat/int_matrix.hpp"
#include "pogcat/pog.hpp"

namespace pogcat {

class GradedModule {
public:
    explicit GradedModule(Pog pog) : pog_(std::move(pog)) {}

    const Pog& pog() const { return pog_; }
    const std::map<Rational, size_t>& ranks() const { return ranks_; }
    const std::map<std::pair<Rational, Rational>, IntMatrix>& actions() const { return actions_; }

    void set_rank(const Rational& g, size_t r) {
        Rational n = pog_.normalize(g);
        if (r == 0)
            ranks_.erase(n);
        else
            ranks_[n] = r;
    }

    size_t rank(const Rational& g) const {
        auto it = ranks_.find(pog_.normalize(g));
        return it == ranks_.end() ? 0 : it->second;
    }

    std::vector<Rational> support() const {
        std::vector<Rational> out;
        for (auto& [g, r] : ranks_) out.push_back(g);
        return out;
    }

    void set_action(const Rational& g, const Rational& rho, IntMatrix m) {
        if (!pog_.base().cone_contains(rho)) throw MalformedElement("action by " + rho.str() + " outside the cone");
        Rational src = pog_.normalize(g);
        if (m.rows() != rank(src + rho) || m.cols() != rank(src))
            throw std::invalid_argument("action matrix at grade " + src.str() + " by " + rho.str() + " has wrong shape");
        actions_[{src, rho}] = std::move(m);
    }

    IntMatrix action(const Rational& rho, const Rational& g) const {
        Rational src = pog_.normalize(g);
        auto it = actions_.find({src, rho});
        if (it != actions_.end()) return it->second;
        if (rho.is_zero()) return IntMatrix::identity(rank(src));
        return IntMatrix(rank(src + rho), rank(src));
    }

    /// Total Z-rank over the support.
    size_t total_rank() const {
        size_t n = 0;
        for (auto& [g, r] : ranks_) n += r;
        return n;
    }

    friend bool operator==(const GradedModule& a, const GradedModule& b) {
        if (!(a.pog_ == b.pog_) || a.ranks_ != b.ranks_) return false;
        // compare through action(), so that stored identities equal defaults
        std::set<std::pair<Rational, Rational>> keys;
        for (auto& [k, m] : a.actions_) keys.insert(k);
        for (auto& [k, m] : b.actions_) keys.insert(k);
        for (auto& [g, rho] : keys)
            if (!(a.action(rho, g) == b.action(rho, g))) return false;
        return true;
    }

private:
    Pog pog_;
    std::map<Rational, size_t> ranks_;
    std::map<std::pair<Rational, Rational>, IntMatrix> actions_;
};

struct ModuleViolation {
    Rational grade, rho, rho2;  // rho2 unused for identity violations
    std::string what;
};

struct ModuleCheckReport {
    size_t squares_checked = 0;
    std::vector<ModuleViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::vector<Rational> sample_cone(const Pog& pog, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    Pog base = pog.base();
    for (int i = 0; i < samples; ++i) {
        int64_t den = base.is_discrete() ? base.denominator() : std::uniform_int_distribution<int64_t>(1, 6)(rng);
        int64_t num = std::uniform_int_distribution<int64_t>(0, 4 * den)(rng);
        out.emplace_back(num, den);
    }
    return out;
}

}  // namespace detail

/// Identity and composition laws on the stored support, for every stored
/// rho together with `samples` pseudo-random cone elements.
inline ModuleCheckReport module_check(const GradedModule& M, int samples = 8, uint64_t seed = 1) {
    ModuleCheckReport rep;
    std::set<Rational> rhos{Rational(0)};
    for (auto& [k, m] : M.actions()) rhos.insert(k.second);
    for (auto& r : detail::sample_cone(M.pog(), samples, seed)) rhos.insert(r);

    for (auto& g : M.support()) {
        ++rep.squares_checked;
        if (!(M.action(Rational(0), g) == IntMatrix::identity(M.rank(g))))
            rep.violations.push_back({g, Rational(0), Rational(0), "action(0) is not the identity"});
    }
    for (auto& g : M.support())
        for (auto& r1 : rhos)
            for (auto& r2 : rhos) {
                ++rep.squares_checked;
                IntMatrix lhs = M.action(r2, g + r1) * M.action(r1, g);
                if (!(lhs == M.action(r1 + r2, g)))
                    rep.violations.push_back({g, r1, r2, "action(" + r2.str() + ") o action(" + r1.str() +
                                                             ") != action(" + (r1 + r2).str() + ")"});
            }
    return rep;
}

/// Restriction to the grades lying in `sub`; actions by the cone of `sub`.
inline GradedModule restrict(const GradedModule& M, const Pog& sub) {
    if (!sub.included_in(M.pog())) throw UnsupportedInclusion(sub.str() + " is not contained in " + M.pog().str());
    GradedModule out(sub);
    for (auto& [g, r] : M.ranks())
        if (sub.contains(g)) out.set_rank(g, r);
    for (auto& [k, m] : M.actions())
        if (sub.contains(k.first) && sub.contains(k.second)) out.set_action(k.first, k.second, m);
    return out;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = detail::checked_mul(a(i, j), b(k, l));
    return out;
}

/// Gradewise tensor product (M (x) N)(g) = M(g) (x) N(g), restricted to the
/// grades in `window` when one is given.
inline GradedModule tensor(const GradedModule& M, const GradedModule& N,
                           const std::optional<std::vector<Rational>>& window = std::nullopt) {
    if (!(M.pog() == N.pog())) throw DescriptorMismatch("tensor: pogs differ");
    GradedModule out(M.pog());
    auto in_window = [&](const Rational& g) {
        if (!window) return true;
        for (auto& w : *window)
            if (M.pog().normalize(w) == g) return true;
        return false;
    };
    for (auto& [g, r] : M.ranks())
        if (N.rank(g) > 0 && in_window(g)) out.set_rank(g, r * N.rank(g));
    std::set<std::pair<Rational, Rational>> keys;
    for (auto& [k, m] : M.actions()) keys.insert(k);
    for (auto& [k, m] : N.actions()) keys.insert(k);
    for (auto& [g, rho] : keys) {
        if (out.rank(g) == 0 || out.rank(g + rho) == 0) continue;
        out.set_action(g, rho, kronecker(M.action(rho, g), N.action(rho, g)));
    }
    return out;
}

enum class EquivariantMode {
    identify,  // each coset collapses to one component via supplied isomorphisms
    free       // each coset component is the direct sum over its grades (a Z[(P0)+]-module)
};

/// Periodicity data for identify mode: phi[g] : M(g) -> M(g + period),
/// invertible over Z, for every g with g and g + period both in the support.
using Periodicity = std::map<Rational, IntMatrix>;

namespace detail {

inline IntMatrix unimodular_inverse(const IntMatrix& A, const Rational& where) {
    if (A.rows() != A.cols()) throw std::invalid_argument("periodicity map at " + where.str() + " is not square");
    SmithForm f = smith_normal_form(A);
    for (int64_t d : f.diagonal)
        if (d != 1) throw std::invalid_argument("periodicity map at " + where.str() + " is not invertible over Z");
    if (f.rank() != A.rows()) throw std::invalid_argument("periodicity map at " + where.str() + " is not invertible over Z");
    // U A V = I  =>  A^{-1} = V U
    return f.V * f.U;
}

}  // namespace detail

/// Collapse grades to cosets of P0 = period*Z.
inline GradedModule equivariantize(const GradedModule& M, const Rational& period, EquivariantMode mode,
                                   const Periodicity& phi = {}) {
    Pog q = Pog::quotient(M.pog(), period);
    GradedModule out(q);
    // cosets -> ascending grades of the support
    std::map<Rational, std::vector<Rational>> cosets;
    for (auto& g : M.support()) cosets[q.normalize(g)].push_back(g);

    std::set<Rational> rhos{Rational(0)};
    for (auto& [k, m] : M.actions()) rhos.insert(k.second);

    if (mode == EquivariantMode::free) {
        std::map<Rational, size_t> offset;  // grade -> offset inside its coset block
        for (auto& [c, gs] : cosets) {
            size_t n = 0;
            for (auto& g : gs) {
                offset[g] = n;
                n += M.rank(g);
            }
            out.set_rank(c, n);
        }
        for (auto& [c, gs] : cosets)
            for (auto& rho : rhos) {
                Rational tc = q.normalize(c + rho);
                IntMatrix A(out.rank(tc), out.rank(c));
                for (auto& g : gs) {
                    if (M.rank(g + rho) == 0) continue;
                    IntMatrix a = M.action(rho, g);
                    for (size_t i = 0; i < a.rows(); ++i)
                        for (size_t j = 0; j < a.cols(); ++j) A(offset.at(g + rho) + i, offset.at(g) + j) = a(i, j);
                }
                out.set_action(c, rho, std::move(A));
            }
        return out;
    }

    // identify mode: component at a coset is M(rep), rep the least grade
    for (auto& [c, gs] : cosets) {
        for (size_t i = 0; i + 1 < gs.size(); ++i) {
            Rational step = gs[i + 1] - gs[i];
            if (step != period)
                throw std::invalid_argument("equivariantize: coset " + c.str() + " has a gap between " + gs[i].str() +
                                            " and " + gs[i + 1].str());
            if (!phi.count(gs[i]))
                throw std::invalid_argument("equivariantize: missing periodicity data at grade " + gs[i].str());
            if (M.rank(gs[i]) != M.rank(gs[i + 1]))
                throw std::invalid_argument("equivariantize: ranks differ along coset " + c.str());
        }
        out.set_rank(c, M.rank(gs.front()));
    }
    // M(g) -> M(rep of the coset of g), walking down by inverse periodicity maps
    auto transport = [&](const Rational& g) {
        const auto& gs = cosets.at(q.normalize(g));
        IntMatrix T = IntMatrix::identity(M.rank(g));
        for (Rational h = g; h != gs.front(); h -= period) {
            Rational prev = h - period;
            T = detail::unimodular_inverse(phi.at(prev), prev) * T;
        }
        return T;
    };
    for (auto& [c, gs] : cosets)
        for (auto& rho : rhos) {
            Rational tgt = gs.front() + rho;
            Rational tc = q.normalize(tgt);
            if (!cosets.count(tc) || M.rank(tgt) == 0) {
                out.set_action(c, rho, IntMatrix(out.rank(tc), out.rank(c)));
                continue;
            }
            out.set_action(c, rho, transport(tgt) * M.action(rho, gs.front()));
        }
    return out;
}

/// (M / I_c M)(g) = coker(action(c) : M(g - c) -> M(g)), grade by grade.
inline std::map<Rational, AbelianGroup> quotient_by_ideal(const GradedModule& M, const Rational& c) {
    std::map<Rational, AbelianGroup> out;
    for (auto& g : M.support()) {
        IntMatrix a = M.action(c, g - c);
        AbelianGroup grp;
        std::vector<int64_t> factors;
        if (!a.empty()) factors = smith_normal_form(a, false).diagonal;
        grp.free_rank = M.rank(g) - factors.size();
        for (int64_t f : factors)
            if (f > 1) grp.torsion.push_back(f);
        if (!grp.is_zero()) out[g] = grp;
    }
    return out;
}

/// The module t^theta Z[[t]] summed over theta in (1/n)Z cap [0,1), kept at
/// grades below `top`; every cone element acts by the evident shift.
inline GradedModule shift_module(int64_t n, const Rational& top) {
    Pog p = Pog::scaled_integers(n);
    GradedModule M(p);
    auto grades = p.elements_in(Rational(0), top);
    for (auto& g : grades)
        if (g < top) M.set_rank(g, 1);
    for (auto& g : M.support())
        for (auto& h : M.support())
            if (g <= h) M.set_action(g, h - g, IntMatrix{{1}});
    return M;
}

}  // namespace pogcat
