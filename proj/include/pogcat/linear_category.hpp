#pragma once

// Finite Z-linear categories presented by a basis of arrows and a
// composition table. Composition is written diagrammatically: compose(f, g)
// is "f then g" for f : x -> y, g : y -> z. Each object has a designated
// identity arrow; composites with identities are never stored.
//
// Optionally the homs are graded by a pog and carry a Z[P+]-action
// (enrichment over P-graded Z[P+]-modules).

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pogcat/pog.hpp"

namespace pogcat {

using Vec = std::map<int, int64_t>;  // basis arrow -> coefficient, no zeros stored

inline void vec_add(Vec& v, int k, int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = v.try_emplace(k, c);
    if (!fresh) {
        it->second = detail::checked_add(it->second, c);
        if (it->second == 0) v.erase(it);
    }
}

inline Vec vec_scale(const Vec& v, int64_t c) {
    Vec out;
    for (auto& [k, x] : v) vec_add(out, k, detail::checked_mul(x, c));
    return out;
}

inline std::string vec_str(const Vec& v, const std::function<std::string(int)>& name) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : v) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << name(k);
        first = false;
    }
    return os.str();
}

struct Arrow {
    int src = 0, tgt = 0;
    Rational grade{0};
    std::string name;
};

class LinearCategory {
public:
    LinearCategory() = default;
    explicit LinearCategory(std::optional<Pog> grading) : grading_(std::move(grading)) {}

    const std::optional<Pog>& grading() const { return grading_; }

    int add_object(const std::string& name) {
        int id = static_cast<int>(objects_.size());
        objects_.push_back(name);
        identity_.push_back(-1);
        identity_[id] = add_arrow(id, id, Rational(0), "1_" + name);
        return id;
    }

    int add_arrow(int src, int tgt, const Rational& grade, const std::string& name) {
        check_object(src);
        check_object(tgt);
        Rational g = grading_ ? grading_->normalize(grade) : Rational(0);
        int id = static_cast<int>(arrows_.size());
        arrows_.push_back({src, tgt, g, name});
        homs_[{src, tgt}].push_back(id);
        return id;
    }

    /// compose(f, g) := value; f then g.
    void set_comp(int f, int g, Vec value) {
        if (arrows_.at(f).tgt != arrows_.at(g).src) throw std::invalid_argument("set_comp: arrows not composable");
        if (is_identity(f) || is_identity(g)) throw std::invalid_argument("set_comp: identity composites are implicit");
        for (auto& [k, c] : value) {
            if (arrows_.at(k).src != arrows_[f].src || arrows_.at(k).tgt != arrows_[g].tgt)
                throw std::invalid_argument("set_comp: result has wrong endpoints");
        }
        if (value.empty())
            comp_.erase({f, g});
        else
            comp_[{f, g}] = std::move(value);
    }

    size_t num_objects() const { return objects_.size(); }
    size_t num_arrows() const { return arrows_.size(); }
    const std::string& object_name(int x) const { return objects_.at(x); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    int identity(int x) const { return identity_.at(x); }
    bool is_identity(int a) const { return identity_.at(arrows_.at(a).src) == a; }

    std::optional<int> find_object(const std::string& name) const {
        for (size_t i = 0; i < objects_.size(); ++i)
            if (objects_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    const std::vector<int>& hom(int x, int y) const {
        static const std::vector<int> empty;
        auto it = homs_.find({x, y});
        return it == homs_.end() ? empty : it->second;
    }

    /// Basis arrows of hom(x, y) in grade g.
    std::vector<int> hom_in_grade(int x, int y, const Rational& g) const {
        std::vector<int> out;
        Rational n = grading_ ? grading_->normalize(g) : g;
        for (int a : hom(x, y))
            if (arrows_[a].grade == n) out.push_back(a);
        return out;
    }

    Vec compose(int f, int g) const {
        if (arrows_.at(f).tgt != arrows_.at(g).src)
            throw std::invalid_argument("compose: " + arrows_[f].name + " and " + arrows_[g].name + " not composable");
        if (is_identity(f)) return {{g, 1}};
        if (is_identity(g)) return {{f, 1}};
        auto it = comp_.find({f, g});
        return it == comp_.end() ? Vec{} : it->second;
    }

    Vec compose(const Vec& a, const Vec& b) const {
        Vec out;
        for (auto& [f, x] : a)
            for (auto& [g, y] : b)
                for (auto& [h, z] : compose(f, g)) vec_add(out, h, detail::checked_mul(detail::checked_mul(x, y), z));
        return out;
    }

    const std::map<std::pair<int, int>, Vec>& table() const { return comp_; }

    /// Z[P+]-action on homs: rho . arrow, an element of the same hom in grade
    /// grade(arrow) + rho. Absent means the category is not enriched.
    std::function<Vec(const Rational&, int)> module_action;

    Vec act(const Rational& rho, const Vec& v) const {
        if (!module_action) throw std::logic_error("category carries no Z[P+]-action");
        Vec out;
        for (auto& [a, c] : v)
            for (auto& [b, d] : module_action(rho, a)) vec_add(out, b, detail::checked_mul(c, d));
        return out;
    }

    std::string arrow_name(int a) const { return arrows_.at(a).name; }
    std::string str(const Vec& v) const {
        return vec_str(v, [this](int a) { return arrows_[a].name; });
    }

private:
    void check_object(int x) const {
        if (x < 0 || static_cast<size_t>(x) >= objects_.size()) throw std::out_of_range("no object " + std::to_string(x));
    }

    std::optional<Pog> grading_;
    std::vector<std::string> objects_;
    std::vector<int> identity_;
    std::vector<Arrow> arrows_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    std::map<std::pair<int, int>, Vec> comp_;
};

struct CategoryViolation {
    std::string law;
    std::string witness;
};

struct CategoryCheckReport {
    size_t checked = 0;
    std::vector<CategoryViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Associativity on every composable basis triple; grades add; the
/// Z[P+]-action (when present) is unital, additive in rho on `rhos`, and
/// commutes with composition on both sides.
inline CategoryCheckReport check_category(const LinearCategory& C, const std::vector<Rational>& rhos = {}) {
    CategoryCheckReport rep;
    const int n = static_cast<int>(C.num_arrows());
    for (int f = 0; f < n; ++f) {
        int y = C.arrow(f).tgt;
        for (int z = 0; z < static_cast<int>(C.num_objects()); ++z)
            for (int g : C.hom(y, z)) {
                Vec fg = C.compose(f, g);
                if (C.grading())
                    for (auto& [h, c] : fg)
                        if (C.arrow(h).grade != C.grading()->normalize(C.arrow(f).grade + C.arrow(g).grade))
                            rep.violations.push_back({"grading", C.arrow_name(f) + " ; " + C.arrow_name(g)});
                for (int w = 0; w < static_cast<int>(C.num_objects()); ++w)
                    for (int h : C.hom(z, w)) {
                        ++rep.checked;
                        Vec lhs = C.compose(fg, Vec{{h, 1}});
                        Vec rhs = C.compose(Vec{{f, 1}}, C.compose(g, h));
                        if (lhs != rhs)
                            rep.violations.push_back({"associativity", C.arrow_name(f) + " ; " + C.arrow_name(g) + " ; " +
                                                                           C.arrow_name(h)});
                    }
            }
    }
    if (C.module_action) {
        for (int f = 0; f < n; ++f) {
            ++rep.checked;
            if (C.module_action(Rational(0), f) != Vec{{f, 1}})
                rep.violations.push_back({"unit action", C.arrow_name(f)});
            for (auto& r1 : rhos) {
                for (auto& [h, c] : C.module_action(r1, f))
                    if (C.arrow(h).grade != C.grading()->normalize(C.arrow(f).grade + r1))
                        rep.violations.push_back({"action grading", C.arrow_name(f) + " by " + r1.str()});
                for (auto& r2 : rhos) {
                    ++rep.checked;
                    if (C.act(r2, C.act(r1, Vec{{f, 1}})) != C.act(r1 + r2, Vec{{f, 1}}))
                        rep.violations.push_back({"action composition", C.arrow_name(f)});
                }
                int y = C.arrow(f).tgt;
                for (int z = 0; z < static_cast<int>(C.num_objects()); ++z)
                    for (int g : C.hom(y, z)) {
                        ++rep.checked;
                        Vec base = C.act(r1, C.compose(f, g));
                        if (C.compose(C.act(r1, Vec{{f, 1}}), Vec{{g, 1}}) != base ||
                            C.compose(Vec{{f, 1}}, C.act(r1, Vec{{g, 1}})) != base)
                            rep.violations.push_back({"action bilinearity", C.arrow_name(f) + " ; " + C.arrow_name(g)});
                    }
            }
        }
    }
    return rep;
}

}  // namespace pogcat
