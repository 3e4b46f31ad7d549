#pragma once

// The monoid ring Z[P+] and its truncations Z[P+]/I_c, the finite-precision
// model of the Novikov-type completion.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pogcat/pog.hpp"

namespace pogcat {

using Exponent = Rational;
using TermMap = std::map<Exponent, int64_t>;

namespace detail {
inline void add_term(TermMap& terms, const Exponent& e, int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
}

inline std::string render_terms(const TermMap& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
        if (first) {
            os << c;
        } else {
            os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
        }
        os << "*T^(" << e.str() << ")";
        first = false;
    }
    return os.str();
}
}  // namespace detail

/// Finite sum of a_i T^{c_i} with c_i in the positivity cone of an
/// unquotiented pog. Zero coefficients are never stored.
class MonoidRingElt {
public:
    explicit MonoidRingElt(Pog pog) : pog_(std::move(pog)) {
        if (pog_.is_quotient()) throw std::invalid_argument("MonoidRingElt: exponents live in an unquotiented pog");
    }
    MonoidRingElt(Pog pog, const TermMap& terms) : MonoidRingElt(std::move(pog)) {
        for (auto& [e, c] : terms) add(e, c);
    }

    static MonoidRingElt monomial(const Pog& pog, const Exponent& e, int64_t c = 1) {
        MonoidRingElt x(pog);
        x.add(e, c);
        return x;
    }
    static MonoidRingElt one(const Pog& pog) { return monomial(pog, Exponent(0)); }

    const Pog& pog() const { return pog_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int64_t coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Exponent& e, int64_t c) {
        if (!pog_.cone_contains(e)) throw MalformedElement("exponent " + e.str() + " outside the cone of " + pog_.str());
        detail::add_term(terms_, e, c);
    }

    friend bool operator==(const MonoidRingElt& a, const MonoidRingElt& b) {
        return a.pog_ == b.pog_ && a.terms_ == b.terms_;
    }

    std::string str() const { return detail::render_terms(terms_); }

private:
    Pog pog_;
    TermMap terms_;
};

namespace detail {
inline void require_same_pog(const Pog& a, const Pog& b) {
    if (!(a == b)) throw DescriptorMismatch("pog mismatch: " + a.str() + " vs " + b.str());
}
}  // namespace detail

inline MonoidRingElt mring_add(const MonoidRingElt& x, const MonoidRingElt& y) {
    detail::require_same_pog(x.pog(), y.pog());
    MonoidRingElt out = x;
    for (auto& [e, c] : y.terms()) out.add(e, c);
    return out;
}

inline MonoidRingElt mring_neg(const MonoidRingElt& x) {
    MonoidRingElt out(x.pog());
    for (auto& [e, c] : x.terms()) out.add(e, -c);
    return out;
}

inline MonoidRingElt mring_mul(const MonoidRingElt& x, const MonoidRingElt& y) {
    detail::require_same_pog(x.pog(), y.pog());
    MonoidRingElt out(x.pog());
    for (auto& [e1, c1] : x.terms())
        for (auto& [e2, c2] : y.terms()) out.add(e1 + e2, detail::checked_mul(c1, c2));
    return out;
}

inline MonoidRingElt operator+(const MonoidRingElt& a, const MonoidRingElt& b) { return mring_add(a, b); }
inline MonoidRingElt operator*(const MonoidRingElt& a, const MonoidRingElt& b) { return mring_mul(a, b); }

/// Element of Z[P+]/I_cutoff: every stored exponent is < cutoff.
class NovikovElt {
public:
    NovikovElt(Pog pog, Rational cutoff) : pog_(std::move(pog)), cutoff_(cutoff) {
        if (cutoff_.sign() <= 0) throw std::invalid_argument("Novikov cutoff must be positive, got " + cutoff_.str());
        if (pog_.is_quotient()) throw std::invalid_argument("NovikovElt: exponents live in an unquotiented pog");
    }

    const Pog& pog() const { return pog_; }
    const Rational& cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c T^e; terms at or above the cutoff are identified with zero.
    void add(const Exponent& e, int64_t c) {
        if (!pog_.cone_contains(e)) throw MalformedElement("exponent " + e.str() + " outside the cone of " + pog_.str());
        if (e >= cutoff_) return;
        detail::add_term(terms_, e, c);
    }

    int64_t coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Smallest exponent with a nonzero coefficient.
    std::optional<Exponent> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    friend bool operator==(const NovikovElt& a, const NovikovElt& b) {
        return a.pog_ == b.pog_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

    std::string str() const { return detail::render_terms(terms_); }

private:
    Pog pog_;
    Rational cutoff_;
    TermMap terms_;
};

inline NovikovElt novikov_truncate(const MonoidRingElt& x, const Rational& cutoff) {
    NovikovElt out(x.pog(), cutoff);
    for (auto& [e, c] : x.terms()) out.add(e, c);
    return out;
}

/// Mixed-cutoff arithmetic works at the smaller cutoff.
inline NovikovElt novikov_add(const NovikovElt& x, const NovikovElt& y) {
    detail::require_same_pog(x.pog(), y.pog());
    NovikovElt out(x.pog(), min(x.cutoff(), y.cutoff()));
    for (auto& [e, c] : x.terms()) out.add(e, c);
    for (auto& [e, c] : y.terms()) out.add(e, c);
    return out;
}

inline NovikovElt novikov_mul(const NovikovElt& x, const NovikovElt& y) {
    detail::require_same_pog(x.pog(), y.pog());
    NovikovElt out(x.pog(), min(x.cutoff(), y.cutoff()));
    for (auto& [e1, c1] : x.terms())
        for (auto& [e2, c2] : y.terms())
            if (e1 + e2 < out.cutoff()) out.add(e1 + e2, detail::checked_mul(c1, c2));
    return out;
}

/// Basis exponents of Z[P+]/I_cutoff for a discrete pog: all cone elements
/// below the cutoff.
struct TruncatedRing {
    Pog pog;
    Rational cutoff;
    std::vector<Exponent> basis;
    size_t rank() const { return basis.size(); }
};

/// Z[P+]/I_cutoff. Requires a directed, discrete, unquotiented pog; Q is
/// accepted only together with an explicit denominator grid.
inline TruncatedRing ring_completion(const Pog& p, const Rational& cutoff, std::optional<int64_t> grid = std::nullopt) {
    if (cutoff.sign() <= 0) throw std::invalid_argument("ring_completion: cutoff must be positive");
    if (p.is_quotient()) throw std::invalid_argument("ring_completion: " + p.str() + " is not directed as a cone");
    Pog g = p;
    if (p.is_rational()) {
        if (!grid) throw std::invalid_argument("ring_completion over Q needs a denominator grid");
        g = Pog::scaled_integers(*grid);
    }
    TruncatedRing r{p, cutoff, {}};
    for (auto& e : g.elements_in(Rational(0), cutoff))
        if (e < cutoff) r.basis.push_back(e);
    return r;
}

}  // namespace pogcat
