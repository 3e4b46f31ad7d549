#pragma once

// Curved A-infinity categories with filtered homs.
//
// Homs have finite bases of generators, each with a cohomological degree
// and a filtration weight. Elements are finite sums c * T^s * g with s >= 0;
// the term has weight weight(g) + s, and terms of weight >= cutoff vanish.
//
// Operations are written in diagrammatic order: mu^d(x1, ..., xd) with
// x1 : X0 -> X1, ..., xd : X_{d-1} -> X_d lands in C(X0, Xd).
//
// Signs (Z mode): shifted Koszul convention. The relations read
//   sum_{0<=i<=j<=d} (-1)^{s_i} mu(x1..xi, mu(x_{i+1}..x_j), x_{j+1}..x_d) = 0,
//   s_i = sum_{k<=i} (|x_k| - 1),
// and strict units satisfy mu2(e, x) = x, mu2(x, e) = (-1)^{|x|} x. A dg
// category with product x.y ("x then y") enters as mu1 = d,
// mu2(x, y) = (-1)^{|x|} x.y. In F2 mode every sign is +1.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pogcat/rational.hpp"

namespace pogcat {

enum class Coeff { Z, F2 };

inline const char* coeff_str(Coeff c) { return c == Coeff::Z ? "z" : "f2"; }

struct Gen {
    std::string name;
    int src = 0, tgt = 0;
    int degree = 0;
    Rational weight{0};
};

using Term = std::pair<int, Rational>;  // (generator, weight shift)
using Element = std::map<Term, int64_t>;

struct CategoryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Abstract curved A-infinity category. Object ids need not be contiguous;
/// objects() lists them. mu() receives composable generators (d >= 1).
class CAinfCategory {
public:
    virtual ~CAinfCategory() = default;

    virtual std::vector<int> objects() const = 0;
    virtual std::string object_name(int x) const = 0;
    virtual const std::vector<int>& hom(int x, int y) const = 0;
    virtual const Gen& gen(int g) const = 0;
    virtual Element unit(int x) const = 0;
    virtual Element mu(const std::vector<int>& gens) const = 0;
    virtual Element mu0(int x) const = 0;

    Coeff coeff = Coeff::Z;
    Rational cutoff{1};
    Rational epsilon{1};

    // ---- element arithmetic (coefficients reduced by mode, weights truncated)

    Rational term_weight(const Term& t) const { return gen(t.first).weight + t.second; }

    void add_term(Element& e, const Term& t, int64_t c) const {
        if (coeff == Coeff::F2) c = ((c % 2) + 2) % 2;
        if (c == 0 || term_weight(t) >= cutoff) return;
        auto [it, fresh] = e.try_emplace(t, c);
        if (!fresh) {
            it->second = coeff == Coeff::F2 ? (it->second + c) % 2 : detail::checked_add(it->second, c);
            if (it->second == 0) e.erase(it);
        }
    }

    void add_into(Element& acc, const Element& e, int64_t c = 1, const Rational& shift = Rational(0)) const {
        for (auto& [t, k] : e) add_term(acc, {t.first, t.second + shift}, detail::checked_mul(k, c));
    }

    Element generator(int g) const {
        Element e;
        add_term(e, {g, Rational(0)}, 1);
        return e;
    }

    int sign(int64_t exponent) const { return coeff == Coeff::F2 || exponent % 2 == 0 ? 1 : -1; }

    Rational min_weight(const Element& e) const {
        Rational w = cutoff;
        for (auto& [t, c] : e) w = min(w, term_weight(t));
        return w;
    }

    /// mu extended multilinearly to elements (d >= 1).
    Element mu_elements(const std::vector<Element>& args) const {
        Element out;
        std::vector<int> gens(args.size());
        expand(args, 0, gens, 1, Rational(0), Rational(0), [&](const std::vector<int>& g, int64_t c, const Rational& s) {
            add_into(out, mu(g), c, s);
        });
        return out;
    }

    /// Calls f(gens, coefficient, total shift) for every term tuple of the
    /// arguments whose input weight stays below the cutoff.
    template <class F>
    void expand(const std::vector<Element>& args, size_t i, std::vector<int>& gens, int64_t c, const Rational& shift,
                const Rational& weight, F&& f) const {
        if (weight >= cutoff) return;
        if (i == args.size()) {
            f(gens, c, shift);
            return;
        }
        for (auto& [t, k] : args[i]) {
            if (i > 0 && gen(gens[i - 1]).tgt != gen(t.first).src) continue;
            gens[i] = t.first;
            expand(args, i + 1, gens, detail::checked_mul(c, k), shift + t.second, weight + term_weight(t), f);
        }
    }

    std::string str(const Element& e) const {
        if (e.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [t, c] : e) {
            if (!first) os << " + ";
            os << c << "*T^" << t.second.str() << "*" << gen(t.first).name;
            first = false;
        }
        return os.str();
    }

    /// Generators with source x, over all targets.
    std::vector<int> out_gens(int x) const {
        std::vector<int> out;
        for (int y : objects())
            for (int g : hom(x, y)) out.push_back(g);
        return out;
    }

    std::optional<int> find_object(const std::string& name) const {
        for (int x : objects())
            if (object_name(x) == name) return x;
        return std::nullopt;
    }
};

/// A category given by explicit sparse tables.
class TableCategory : public CAinfCategory {
public:
    int add_object(const std::string& name) {
        for (auto& n : names_)
            if (n == name) throw CategoryError("duplicate object " + name);
        names_.push_back(name);
        units_.emplace_back();
        return static_cast<int>(names_.size()) - 1;
    }

    int add_gen(const std::string& name, int src, int tgt, int degree, const Rational& weight) {
        check_object(src);
        check_object(tgt);
        if (weight.sign() < 0) throw CategoryError("generator " + name + " has negative weight");
        for (int g : homs_[{src, tgt}])
            if (gens_[g].name == name) throw CategoryError("duplicate generator " + name);
        gens_.push_back({name, src, tgt, degree, weight});
        int id = static_cast<int>(gens_.size()) - 1;
        homs_[{src, tgt}].push_back(id);
        return id;
    }

    void set_unit(int x, Element e) {
        check_object(x);
        units_[x] = std::move(e);
    }

    void set_mu(const std::vector<int>& gens, Element value) {
        if (gens.empty()) throw CategoryError("set_mu: use set_mu0 for d = 0");
        for (size_t i = 0; i + 1 < gens.size(); ++i)
            if (gens_.at(gens[i]).tgt != gens_.at(gens[i + 1]).src) throw CategoryError("set_mu: tuple not composable");
        Element clean;
        add_into(clean, value);
        if (clean.empty())
            mu_.erase(gens);
        else
            mu_[gens] = std::move(clean);
    }

    void set_mu0(int x, Element value) {
        check_object(x);
        Element clean;
        add_into(clean, value);
        if (clean.empty())
            mu0_.erase(x);
        else
            mu0_[x] = std::move(clean);
    }

    /// Fills mu2(e, x) = x and mu2(x, e) = (-1)^{|x|} x for every generator x
    /// where no entry is stored, at objects whose unit is a single generator.
    void autounits() {
        for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
            int es = single_unit(gens_[g].src), et = single_unit(gens_[g].tgt);
            if (es >= 0 && !mu_.count({es, g})) set_mu({es, g}, generator(g));
            if (et >= 0 && !mu_.count({g, et})) {
                Element e;
                add_term(e, {g, Rational(0)}, sign(gens_[g].degree));
                set_mu({g, et}, e);
            }
        }
    }

    int single_unit(int x) const {
        const Element& u = units_.at(x);
        if (u.size() != 1 || u.begin()->second != 1 || !u.begin()->first.second.is_zero()) return -1;
        return u.begin()->first.first;
    }

    int unit_gen(int x) const {
        const Element& u = units_.at(x);
        if (u.size() != 1 || u.begin()->second != 1 || !u.begin()->first.second.is_zero())
            throw CategoryError("object " + names_[x] + " has no single-generator unit");
        return u.begin()->first.first;
    }

    std::vector<int> objects() const override {
        std::vector<int> out(names_.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
        return out;
    }
    std::string object_name(int x) const override { return names_.at(x); }
    const std::vector<int>& hom(int x, int y) const override {
        static const std::vector<int> empty;
        auto it = homs_.find({x, y});
        return it == homs_.end() ? empty : it->second;
    }
    const Gen& gen(int g) const override { return gens_.at(g); }
    Element unit(int x) const override { return units_.at(x); }
    Element mu(const std::vector<int>& gens) const override {
        auto it = mu_.find(gens);
        return it == mu_.end() ? Element{} : it->second;
    }
    Element mu0(int x) const override {
        auto it = mu0_.find(x);
        return it == mu0_.end() ? Element{} : it->second;
    }

    size_t num_gens() const { return gens_.size(); }
    const std::map<std::vector<int>, Element>& mu_table() const { return mu_; }
    const std::map<int, Element>& mu0_table() const { return mu0_; }

    std::optional<int> find_gen(int src, int tgt, const std::string& name) const {
        for (int g : hom(src, tgt))
            if (gens_[g].name == name) return g;
        return std::nullopt;
    }
    std::optional<int> find_gen(const std::string& name) const {
        for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
            if (gens_[g].name == name) return g;
        return std::nullopt;
    }

    /// Copy with coefficients reduced to `mode` (Z -> F2 reduces mod 2).
    TableCategory with_coeff(Coeff mode) const {
        TableCategory out = *this;
        out.coeff = mode;
        auto reduce = [&](const Element& e) {
            Element r;
            out.add_into(r, e);
            return r;
        };
        for (auto& u : out.units_) u = reduce(u);
        for (auto it = out.mu_.begin(); it != out.mu_.end();) {
            it->second = reduce(it->second);
            it = it->second.empty() ? out.mu_.erase(it) : std::next(it);
        }
        for (auto it = out.mu0_.begin(); it != out.mu0_.end();) {
            it->second = reduce(it->second);
            it = it->second.empty() ? out.mu0_.erase(it) : std::next(it);
        }
        return out;
    }

private:
    void check_object(int x) const {
        if (x < 0 || static_cast<size_t>(x) >= names_.size()) throw CategoryError("no object " + std::to_string(x));
    }

    std::vector<std::string> names_;
    std::vector<Element> units_;
    std::vector<Gen> gens_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    std::map<std::vector<int>, Element> mu_;
    std::map<int, Element> mu0_;
};

// ---------------------------------------------------------------- checking

/// Key of a relation instance: d = tuple length; for d = 0 the object.
struct RelationKey {
    std::vector<int> tuple;
    int object = -1;
    friend auto operator<=>(const RelationKey&, const RelationKey&) = default;
};

namespace detail {

// Calls f(tuple) for every composable generator tuple of length d.
template <class F>
void for_each_tuple(const CAinfCategory& C, int d, F&& f) {
    std::vector<int> t;
    std::function<void(int)> rec = [&](int x) {
        if (static_cast<int>(t.size()) == d) {
            f(t);
            return;
        }
        for (int g : C.out_gens(x)) {
            t.push_back(g);
            rec(C.gen(g).tgt);
            t.pop_back();
        }
    };
    for (int x : C.objects()) rec(x);
}

inline int object_before(const CAinfCategory& C, const std::vector<int>& t, size_t i, int fallback) {
    // object X_i: source of x_{i+1}, or target of x_i
    if (i < t.size()) return C.gen(t[i]).src;
    if (i > 0) return C.gen(t[i - 1]).tgt;
    return fallback;
}

}  // namespace detail

/// Left-hand side of the curved relation on one tuple (or mu1(mu0(X))).
/// With `skip_last_curvature` the term inserting mu0 after the last entry is
/// left out (module equations of Yoneda modules).
inline Element relation_residual(const CAinfCategory& C, const std::vector<int>& t, int object = -1,
                                 bool skip_last_curvature = false) {
    const size_t d = t.size();
    Element out;
    int64_t shifted = 0;  // s_i
    for (size_t i = 0; i <= d; ++i) {
        if (i > 0) shifted += C.gen(t[i - 1]).degree - 1;
        for (size_t j = i; j <= d; ++j) {
            Element inner;
            if (j == i) {
                if (skip_last_curvature && i == d) continue;
                inner = C.mu0(detail::object_before(C, t, i, object));
            } else {
                inner = C.mu(std::vector<int>(t.begin() + i, t.begin() + j));
            }
            if (inner.empty()) continue;
            std::vector<Element> args;
            for (size_t k = 0; k < i; ++k) args.push_back(C.generator(t[k]));
            args.push_back(inner);
            for (size_t k = j; k < d; ++k) args.push_back(C.generator(t[k]));
            C.add_into(out, C.mu_elements(args), C.sign(shifted));
        }
    }
    return out;
}

/// Nonzero relation residuals for all d <= dmax.
inline std::map<RelationKey, Element> relation_residuals(const CAinfCategory& C, int dmax) {
    std::map<RelationKey, Element> out;
    for (int x : C.objects()) {
        Element r = relation_residual(C, {}, x);
        if (!r.empty()) out[{{}, x}] = r;
    }
    for (int d = 1; d <= dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            Element r = relation_residual(C, t);
            if (!r.empty()) out[{t, -1}] = r;
        });
    return out;
}

struct CAinfViolation {
    std::string law;
    RelationKey key;
    std::string detail;
};

struct CAinfReport {
    size_t tuples_checked = 0;
    std::vector<CAinfViolation> violations;
    bool ok() const { return violations.empty(); }
};

inline std::string key_str(const CAinfCategory& C, const RelationKey& k) {
    if (k.tuple.empty()) return "(" + C.object_name(k.object) + ")";
    std::string s = "(";
    for (size_t i = 0; i < k.tuple.size(); ++i) s += (i ? "," : "") + C.gen(k.tuple[i]).name;
    return s + ")";
}

/// Relations for d <= dmax (modulo the cutoff), unit axioms, and degree and
/// filtration of every evaluated operation.
inline CAinfReport check_cainf(const CAinfCategory& C, int dmax) {
    if (dmax < 2) throw std::invalid_argument("check_cainf: dmax must be at least 2");
    CAinfReport rep;
    auto fail = [&](const std::string& law, RelationKey k, const std::string& what) {
        rep.violations.push_back({law, std::move(k), what});
    };
    // degree and filtration of mu0 and mu
    for (int x : C.objects()) {
        for (auto& [t, c] : C.mu0(x)) {
            const Gen& g = C.gen(t.first);
            if (g.src != x || g.tgt != x || g.degree != 2)
                fail("degree", {{}, x}, "mu0 term " + g.name + " is not a degree-2 endomorphism");
            if (C.term_weight(t) < C.epsilon) fail("filtration", {{}, x}, "mu0 term " + g.name + " has weight below eps");
        }
    }
    for (int d = 1; d <= dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            int deg = 2 - d;
            Rational w(0);
            for (int g : t) {
                deg += C.gen(g).degree;
                w += C.gen(g).weight;
            }
            for (auto& [term, c] : C.mu(t)) {
                const Gen& g = C.gen(term.first);
                if (g.degree != deg || g.src != C.gen(t.front()).src || g.tgt != C.gen(t.back()).tgt)
                    fail("degree", {t, -1}, "output " + g.name + " has degree " + std::to_string(g.degree) + ", expected " +
                                                std::to_string(deg));
                if (C.term_weight(term) < w) fail("filtration", {t, -1}, "output " + g.name + " lowers the weight");
            }
        });
    // units
    for (int x : C.objects()) {
        Element e = C.unit(x);
        for (auto& [t, c] : e)
            if (C.gen(t.first).degree != 0 || C.term_weight(t) != Rational(0))
                fail("unit", {{}, x}, "unit is not of degree 0 and weight 0");
        if (!C.mu_elements({e}).empty()) fail("unit", {{}, x}, "mu1(e) != 0");
        for (int y : C.objects())
            for (int g : C.hom(x, y)) {
                Element xg = C.generator(g);
                if (C.mu_elements({e, xg}) != xg) fail("unit", {{g}, -1}, "mu2(e, x) != x");
                Element signed_x;
                C.add_into(signed_x, xg, C.sign(C.gen(g).degree));
                if (C.mu_elements({xg, C.unit(y)}) != signed_x) fail("unit", {{g}, -1}, "mu2(x, e) != (-1)^|x| x");
            }
    }
    for (int d = 2; d < dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            // insert a unit at every position: arity d + 1 >= 3 must vanish
            for (size_t i = 0; i <= t.size(); ++i) {
                std::vector<Element> args;
                for (size_t k = 0; k < i; ++k) args.push_back(C.generator(t[k]));
                args.push_back(C.unit(detail::object_before(C, t, i, -1)));
                for (size_t k = i; k < t.size(); ++k) args.push_back(C.generator(t[k]));
                if (!C.mu_elements(args).empty()) fail("unit", {t, -1}, "mu with a unit inserted at " + std::to_string(i) + " != 0");
            }
        });
    // relations
    for (int x : C.objects()) {
        ++rep.tuples_checked;
        Element r = relation_residual(C, {}, x);
        if (!r.empty()) fail("relation", {{}, x}, C.str(r));
    }
    for (int d = 1; d <= dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            ++rep.tuples_checked;
            Element r = relation_residual(C, t);
            if (!r.empty()) fail("relation", {t, -1}, C.str(r));
        });
    return rep;
}

// ---------------------------------------------------------------- views

/// Gr(C): only weight-preserving terms of the operations survive; mu0 = 0.
class GrView : public CAinfCategory {
public:
    explicit GrView(const CAinfCategory& base) : base_(base) {
        coeff = base.coeff;
        cutoff = base.cutoff;
        epsilon = base.epsilon;
    }
    std::vector<int> objects() const override { return base_.objects(); }
    std::string object_name(int x) const override { return base_.object_name(x); }
    const std::vector<int>& hom(int x, int y) const override { return base_.hom(x, y); }
    const Gen& gen(int g) const override { return base_.gen(g); }
    Element unit(int x) const override { return base_.unit(x); }
    Element mu(const std::vector<int>& gens) const override {
        Rational w(0);
        for (int g : gens) w += base_.gen(g).weight;
        Element out;
        for (auto& [t, c] : base_.mu(gens))
            if (base_.term_weight(t) == w) out[t] = c;
        return out;
    }
    Element mu0(int) const override { return {}; }

private:
    const CAinfCategory& base_;
};

/// Full subcategory on a subset of objects (ids kept).
class FullSubcategory : public CAinfCategory {
public:
    FullSubcategory(const CAinfCategory& base, std::vector<int> objects) : base_(base), objects_(std::move(objects)) {
        coeff = base.coeff;
        cutoff = base.cutoff;
        epsilon = base.epsilon;
    }
    std::vector<int> objects() const override { return objects_; }
    std::string object_name(int x) const override { return base_.object_name(x); }
    const std::vector<int>& hom(int x, int y) const override { return base_.hom(x, y); }
    const Gen& gen(int g) const override { return base_.gen(g); }
    Element unit(int x) const override { return base_.unit(x); }
    Element mu(const std::vector<int>& gens) const override { return base_.mu(gens); }
    Element mu0(int x) const override { return base_.mu0(x); }

private:
    const CAinfCategory& base_;
    std::vector<int> objects_;
};

/// The flat part: objects with mu0 = 0 exactly (not modulo the cutoff).
inline std::vector<int> flat_objects(const CAinfCategory& C) {
    std::vector<int> out;
    for (int x : C.objects())
        if (C.mu0(x).empty()) out.push_back(x);
    return out;
}

inline FullSubcategory flat(const CAinfCategory& C) { return FullSubcategory(C, flat_objects(C)); }

/// Table copy of any category restricted to its listed generators, with mu
/// evaluated on all tuples up to dmax. Used to compare constructions.
inline std::map<RelationKey, Element> mu_table(const CAinfCategory& C, int dmax) {
    std::map<RelationKey, Element> out;
    for (int x : C.objects()) {
        Element m = C.mu0(x);
        if (!m.empty()) out[{{}, x}] = m;
    }
    for (int d = 1; d <= dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            Element m = C.mu(t);
            if (!m.empty()) out[{t, -1}] = m;
        });
    return out;
}

// ---------------------------------------------------------------- functors

class CAinfFunctor {
public:
    virtual ~CAinfFunctor() = default;
    virtual const CAinfCategory& source() const = 0;
    virtual const CAinfCategory& target() const = 0;
    virtual int on_object(int x) const = 0;
    virtual Element phi(const std::vector<int>& gens) const = 0;  // d >= 1
    virtual Element phi0(int x) const = 0;

    Element phi_elements(const std::vector<Element>& args) const {
        Element out;
        std::vector<int> gens(args.size());
        source().expand(args, 0, gens, 1, Rational(0), Rational(0), [&](const std::vector<int>& g, int64_t c, const Rational& s) {
            target().add_into(out, phi(g), c, s);
        });
        return out;
    }
};

class TableFunctor : public CAinfFunctor {
public:
    TableFunctor(const CAinfCategory& src, const CAinfCategory& tgt, std::map<int, int> objects)
        : src_(src), tgt_(tgt), objects_(std::move(objects)) {}

    void set_phi(const std::vector<int>& gens, Element v) { phi_[gens] = std::move(v); }
    void set_phi0(int x, Element v) { phi0_[x] = std::move(v); }

    const CAinfCategory& source() const override { return src_; }
    const CAinfCategory& target() const override { return tgt_; }
    int on_object(int x) const override { return objects_.at(x); }
    Element phi(const std::vector<int>& gens) const override {
        auto it = phi_.find(gens);
        return it == phi_.end() ? Element{} : it->second;
    }
    Element phi0(int x) const override {
        auto it = phi0_.find(x);
        return it == phi0_.end() ? Element{} : it->second;
    }

private:
    const CAinfCategory& src_;
    const CAinfCategory& tgt_;
    std::map<int, int> objects_;
    std::map<std::vector<int>, Element> phi_;
    std::map<int, Element> phi0_;
};

/// The identity functor of C.
class IdentityFunctor : public CAinfFunctor {
public:
    explicit IdentityFunctor(const CAinfCategory& C) : C_(C) {}
    const CAinfCategory& source() const override { return C_; }
    const CAinfCategory& target() const override { return C_; }
    int on_object(int x) const override { return x; }
    Element phi(const std::vector<int>& gens) const override { return gens.size() == 1 ? C_.generator(gens[0]) : Element{}; }
    Element phi0(int) const override { return {}; }

private:
    const CAinfCategory& C_;
};

/// mu0(Phi) on one tuple:
///   sum_{i<=j} (-1)^{s_i} Phi(x1..xi, mu_C(x_{i+1}..x_j), ..)
///   - sum_{r>=0} sum mu_D^r(Phi(block_1), .., Phi(block_r)),
/// where blocks cover the tuple in order and empty blocks stand for Phi^0.
inline Element functor_curvature_at(const CAinfFunctor& F, const std::vector<int>& t, int object = -1) {
    const CAinfCategory& C = F.source();
    const CAinfCategory& D = F.target();
    const size_t d = t.size();
    Element out;
    int64_t shifted = 0;
    for (size_t i = 0; i <= d; ++i) {
        if (i > 0) shifted += C.gen(t[i - 1]).degree - 1;
        for (size_t j = i; j <= d; ++j) {
            Element inner = j == i ? C.mu0(detail::object_before(C, t, i, object))
                                   : C.mu(std::vector<int>(t.begin() + i, t.begin() + j));
            if (inner.empty()) continue;
            std::vector<Element> args;
            for (size_t k = 0; k < i; ++k) args.push_back(C.generator(t[k]));
            args.push_back(inner);
            for (size_t k = j; k < d; ++k) args.push_back(C.generator(t[k]));
            D.add_into(out, F.phi_elements(args), C.sign(shifted));
        }
    }
    // composite side
    std::vector<Element> blocks;
    std::function<void(size_t)> rec = [&](size_t pos) {
        Rational w(0);
        for (auto& b : blocks) w += D.min_weight(b);
        if (w >= D.cutoff) return;
        if (pos == d) {
            if (blocks.empty())
                D.add_into(out, D.mu0(F.on_object(detail::object_before(C, t, 0, object))), -1);
            else
                D.add_into(out, D.mu_elements(blocks), -1);
        }
        Element p0 = F.phi0(detail::object_before(C, t, pos, object));
        if (!p0.empty()) {
            blocks.push_back(p0);
            rec(pos);
            blocks.pop_back();
        }
        for (size_t k = pos + 1; k <= d; ++k) {
            Element b = F.phi(std::vector<int>(t.begin() + pos, t.begin() + k));
            if (b.empty()) continue;
            blocks.push_back(b);
            rec(k);
            blocks.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Nonzero curvature components for all tuples of length <= dmax.
inline std::map<RelationKey, Element> functor_curvature(const CAinfFunctor& F, int dmax) {
    std::map<RelationKey, Element> out;
    const CAinfCategory& C = F.source();
    for (int x : C.objects()) {
        Element r = functor_curvature_at(F, {}, x);
        if (!r.empty()) out[{{}, x}] = r;
    }
    for (int d = 1; d <= dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            Element r = functor_curvature_at(F, t);
            if (!r.empty()) out[{t, -1}] = r;
        });
    return out;
}

/// Unit axioms of a pre-functor: Phi1(e) = e, Phi^d(.., e, ..) = 0 for d >= 2
/// (tuples up to dmax), Phi0 of weight >= eps.
inline std::vector<std::string> check_functor_units(const CAinfFunctor& F, int dmax) {
    std::vector<std::string> out;
    const CAinfCategory& C = F.source();
    const CAinfCategory& D = F.target();
    for (int x : C.objects()) {
        if (F.phi_elements({C.unit(x)}) != D.unit(F.on_object(x))) out.push_back("Phi1(e) != e at " + C.object_name(x));
        if (!F.phi0(x).empty() && D.min_weight(F.phi0(x)) < D.epsilon) out.push_back("Phi0 below eps at " + C.object_name(x));
    }
    for (int d = 1; d < dmax; ++d)
        detail::for_each_tuple(C, d, [&](const std::vector<int>& t) {
            for (size_t i = 0; i <= t.size(); ++i) {
                std::vector<Element> args;
                for (size_t k = 0; k < i; ++k) args.push_back(C.generator(t[k]));
                args.push_back(C.unit(detail::object_before(C, t, i, -1)));
                for (size_t k = i; k < t.size(); ++k) args.push_back(C.generator(t[k]));
                if (!F.phi_elements(args).empty()) out.push_back("Phi with a unit inserted on " + key_str(C, {t, -1}));
            }
        });
    return out;
}

// ---------------------------------------------------------------- Yoneda

/// The module X |-> C(X, Y) with structure maps mu^{d+1}(x1, .., xd, m).
struct YonedaModule {
    const CAinfCategory* C = nullptr;
    int Y = 0;

    const std::vector<int>& value(int X) const { return C->hom(X, Y); }
    Element differential(int m) const { return C->mu({m}); }
};

inline YonedaModule yoneda(const CAinfCategory& C, int Y) { return {&C, Y}; }

struct YonedaReport {
    size_t equations = 0;
    std::vector<std::string> mismatches;  // module residual != right multiplication by mu0(Y)
    bool flat = true;                     // all module residuals vanish
    bool ok() const { return mismatches.empty(); }
};

/// Module equations on (x1, .., xd, m), d < dmax: their residual must be
/// -(-1)^{s} mu^{d+2}(x1, .., xd, m, mu0(Y)).
inline YonedaReport check_yoneda(const YonedaModule& M, int dmax) {
    const CAinfCategory& C = *M.C;
    YonedaReport rep;
    Element w = C.mu0(M.Y);
    for (int d = 0; d < dmax; ++d) {
        auto visit = [&](const std::vector<int>& t) {
            int X = t.empty() ? -1 : C.gen(t.back()).tgt;
            std::vector<int> xs = t;
            for (int Xd : (t.empty() ? C.objects() : std::vector<int>{X}))
                for (int m : C.hom(Xd, M.Y)) {
                    xs.push_back(m);
                    ++rep.equations;
                    Element res = relation_residual(C, xs, -1, true);
                    Element expect;
                    if (!w.empty()) {
                        int64_t s = 0;
                        for (int g : xs) s += C.gen(g).degree - 1;
                        std::vector<Element> args;
                        for (int g : xs) args.push_back(C.generator(g));
                        args.push_back(w);
                        C.add_into(expect, C.mu_elements(args), -C.sign(s));
                    }
                    if (!res.empty()) rep.flat = false;
                    if (res != expect) rep.mismatches.push_back("module equation on " + key_str(C, {xs, -1}));
                    xs.pop_back();
                }
        };
        if (d == 0)
            visit({});
        else
            detail::for_each_tuple(C, d, visit);
    }
    return rep;
}

}  // namespace pogcat
