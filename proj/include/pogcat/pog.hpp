#pragma once

// Abelian partially ordered groups: (1/n)Z, Q, and their quotients by a
// cyclic subgroup pZ. Additive notation; the order is a <= b iff b - a lies
// in the positivity cone.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pogcat/rational.hpp"

namespace pogcat {

struct MalformedElement : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedInclusion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DescriptorMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Pog {
public:
    /// (1/n)Z.
    static Pog scaled_integers(int64_t n) {
        if (n <= 0) throw std::invalid_argument("Pog: Z/n needs n > 0");
        Pog p;
        p.denominator_ = n;
        return p;
    }
    static Pog integers() { return scaled_integers(1); }
    static Pog rationals() { return Pog{}; }

    /// base / (period Z). The period must be a positive element of base.
    static Pog quotient(const Pog& base, const Rational& period) {
        if (base.is_quotient()) {
            // quotient of a quotient: only coarsening a period that divides it
            Rational ratio = base.period_ / period;
            if (!ratio.is_integer() || ratio.sign() <= 0)
                throw std::invalid_argument("Pog: nested period " + period.str() + " does not divide " +
                                            base.period_.str());
        }
        if (period.sign() <= 0) throw std::invalid_argument("Pog: quotient period must be positive");
        if (!base.base().contains(period))
            throw std::invalid_argument("Pog: subgroup " + period.str() + "Z not contained in base");
        Pog p = base;
        p.period_ = period;
        return p;
    }

    /// "Z/1", "Z/n", "Q", with optional "%Z" or "%<p>Z" suffix.
    static Pog parse(std::string_view spec) {
        std::string_view head = spec, tail;
        if (auto pct = spec.find('%'); pct != std::string_view::npos) {
            head = spec.substr(0, pct);
            tail = spec.substr(pct + 1);
        }
        Pog base;
        if (head == "Q") {
            base = rationals();
        } else if (head.size() > 2 && head.substr(0, 2) == "Z/") {
            Rational n = Rational::parse(head.substr(2));
            if (!n.is_integer() || n.sign() <= 0) throw std::invalid_argument("bad pog spec '" + std::string(spec) + "'");
            base = scaled_integers(n.num());
        } else if (head == "Z") {
            base = integers();
        } else {
            throw std::invalid_argument("bad pog spec '" + std::string(spec) + "'");
        }
        if (tail.empty()) {
            if (spec.find('%') != std::string_view::npos) throw std::invalid_argument("bad pog spec '" + std::string(spec) + "'");
            return base;
        }
        if (tail.back() != 'Z') throw std::invalid_argument("bad pog spec '" + std::string(spec) + "'");
        tail.remove_suffix(1);
        Rational period = tail.empty() ? Rational(1) : Rational::parse(tail);
        return quotient(base, period);
    }

    std::string str() const {
        std::string s = denominator_ == 0 ? "Q" : "Z/" + std::to_string(denominator_);
        if (is_quotient()) s += period_ == Rational(1) ? "%Z" : "%" + period_.str() + "Z";
        return s;
    }

    bool is_rational() const { return denominator_ == 0; }
    bool is_discrete() const { return denominator_ != 0; }
    bool is_quotient() const { return !period_.is_zero(); }
    int64_t denominator() const { return denominator_; }
    const Rational& period() const { return period_; }

    /// The pog with the quotient removed.
    Pog base() const {
        Pog p = *this;
        p.period_ = Rational(0);
        return p;
    }

    /// Smallest positive element (discrete pogs only).
    Rational step() const {
        if (!is_discrete()) throw std::invalid_argument("Pog::step: " + str() + " has no minimal positive element");
        return Rational(1, denominator_);
    }

    /// Finite quotients: number of elements.
    std::optional<int64_t> order() const {
        if (!is_quotient() || !is_discrete()) return std::nullopt;
        return (period_ * Rational(denominator_)).num();
    }

    bool contains(const Rational& g) const {
        if (denominator_ != 0 && !(g * Rational(denominator_)).is_integer()) return false;
        return true;
    }

    /// Canonical representative; throws MalformedElement if g is not in the pog.
    Rational normalize(const Rational& g) const {
        if (!contains(g)) throw MalformedElement(g.str() + " is not an element of " + str());
        return is_quotient() ? g.mod(period_) : g;
    }

    Rational add(const Rational& a, const Rational& b) const { return normalize(normalize(a) + normalize(b)); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(normalize(a) - normalize(b)); }

    /// 0 <= g. On a quotient the grading is induced from the base: a coset is
    /// in the cone iff it has a nonnegative lift, which every coset does.
    bool cone_contains(const Rational& g) const {
        Rational r = normalize(g);
        if (is_quotient()) return true;
        return r.sign() >= 0;
    }

    bool leq(const Rational& a, const Rational& b) const { return cone_contains(sub(b, a)); }

    /// Sub-pog inclusion this <= other (same quotient period, finer or equal grid).
    bool included_in(const Pog& other) const {
        if (period_ != other.period_) return false;
        if (other.is_rational()) return true;
        if (is_rational()) return false;
        return other.denominator_ % denominator_ == 0;
    }

    /// Elements in [lo, hi] of a discrete pog (or all of a finite quotient).
    std::vector<Rational> elements_in(const Rational& lo, const Rational& hi) const {
        if (!is_discrete()) throw std::invalid_argument("Pog::elements_in: " + str() + " is not discrete");
        std::vector<Rational> out;
        if (is_quotient()) {
            for (int64_t k = 0; k < *order(); ++k) out.push_back(Rational(k, denominator_));
            return out;
        }
        int64_t a = (lo * Rational(denominator_)).ceil(), b = (hi * Rational(denominator_)).floor();
        for (int64_t k = a; k <= b; ++k) out.push_back(Rational(k, denominator_));
        return out;
    }

    friend bool operator==(const Pog&, const Pog&) = default;

private:
    int64_t denominator_ = 0;  // 0 encodes Q
    Rational period_{0};
};

namespace detail {
inline void require_discrete_inclusion(const Pog& sub, const Pog& sup) {
    if (sub.is_quotient() || sup.is_quotient())
        throw UnsupportedInclusion("floor/ceiling are defined for inclusions of unquotiented pogs");
    if (!sub.is_discrete())
        throw UnsupportedInclusion(sub.str() + " in " + sup.str() + " is not a discrete inclusion");
    if (!sub.included_in(sup)) throw UnsupportedInclusion(sub.str() + " is not contained in " + sup.str());
}
}  // namespace detail

/// Greatest element of sub that is <= g (right adjoint to the inclusion).
inline Rational floor_to(const Pog& sub, const Pog& sup, const Rational& g) {
    detail::require_discrete_inclusion(sub, sup);
    sup.normalize(g);
    return Rational((g * Rational(sub.denominator())).floor(), sub.denominator());
}

/// Least element of sub that is >= g (left adjoint to the inclusion).
inline Rational ceil_to(const Pog& sub, const Pog& sup, const Rational& g) {
    detail::require_discrete_inclusion(sub, sup);
    sup.normalize(g);
    return Rational((g * Rational(sub.denominator())).ceil(), sub.denominator());
}

struct Exhaustion {
    std::vector<Pog> chain;
    /// (m, n) with m | n witnessing chain[i] in chain[i+1].
    std::vector<std::pair<int64_t, int64_t>> witnesses;
};

/// (1/k!)Z for k = 1..steps, optionally modulo the period of q.
inline Exhaustion exhaustion(const Pog& q, int steps) {
    if (!q.is_rational()) throw std::invalid_argument("exhaustion: target must be Q or a quotient of Q");
    if (steps <= 0) throw std::invalid_argument("exhaustion: steps must be positive");
    if (q.is_quotient() && !q.period().is_integer())
        throw std::invalid_argument("exhaustion: quotient period must be an integer");
    Exhaustion e;
    int64_t fact = 1;
    for (int k = 1; k <= steps; ++k) {
        fact = detail::checked_mul(fact, k);
        Pog p = Pog::scaled_integers(fact);
        if (q.is_quotient()) p = Pog::quotient(p, q.period());
        if (!e.chain.empty()) e.witnesses.emplace_back(e.chain.back().denominator(), fact);
        e.chain.push_back(p);
    }
    return e;
}

}  // namespace pogcat
