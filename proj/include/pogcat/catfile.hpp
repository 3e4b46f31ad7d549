#pragma once

// Text format for finite curved categories.
//
//   # comment
//   kind curved          (optional: curved or graded)
//   pog Z/2
//   coeff z              (z or f2)
//   cutoff 2
//   eps 1/2
//   dmax 4
//   lmax 2
//   objects X A
//   hom X A
//     f 1 0              (name degree weight)
//   unit X eX
//   mu 2: (f, g) -> 2 T^1/2 h - k
//   mu 0: (A) -> w
//   sub A                (optional: the subcategory for quotients)
//   arrow m: X -> X = t  (optional: named elements, e.g. for cones)
//   step X Y             (optional: one step of the pog moves X to Y)
//
// The six header keys are mandatory. Generator names are global. A unit is
// a generator (`unit X e`) or an element (`unit X = e1 + e2`); products with
// a single-generator unit that are not listed follow the unit laws.
//
// A graded file describes a pog-graded linear category: weights are grades,
// units are identities and `mu 2` is composition.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pogcat/cainf.hpp"
#include "pogcat/pog.hpp"

namespace pogcat {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line, column;
};

struct NamedArrow {
    std::string name;
    int src = 0, tgt = 0;
    Element value;
};

enum class FileKind { curved, graded };

struct CategoryFile {
    FileKind kind = FileKind::curved;
    Pog pog = Pog::integers();
    Coeff coeff = Coeff::Z;
    Rational cutoff, eps;
    int dmax = 0, lmax = 0;
    TableCategory cat;
    std::vector<int> subcategory;
    std::vector<NamedArrow> arrows;
    std::vector<std::pair<std::string, std::string>> steps;

    const NamedArrow* find_arrow(const std::string& name) const {
        for (auto& a : arrows)
            if (a.name == name) return &a;
        return nullptr;
    }
};

namespace detail {

class LineCursor {
public:
    LineCursor(const std::string& s, int line) : s_(s), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, static_cast<int>(i_) + 1, msg); }
    [[noreturn]] void fail_at(size_t col, const std::string& msg) const { throw ParseError(line_, static_cast<int>(col) + 1, msg); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    size_t pos() {
        skip_ws();
        return i_;
    }
    bool accept(std::string_view t) {
        skip_ws();
        if (s_.compare(i_, t.size(), t) != 0) return false;
        i_ += t.size();
        return true;
    }
    void expect(std::string_view t) {
        if (!accept(t)) fail("expected '" + std::string(t) + "'");
    }
    bool peek_name() {
        skip_ws();
        return i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '*');
    }
    // digits followed by a space or '*'
    bool peek_coefficient() {
        skip_ws();
        size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        return j > i_ && j < s_.size() && (std::isspace(static_cast<unsigned char>(s_[j])) || s_[j] == '*');
    }
    std::string name() {
        if (!peek_name()) fail("expected a name");
        size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || std::string_view("_'./*@[]|").find(s_[i_]) != std::string_view::npos))
            ++i_;
        return s_.substr(b, i_ - b);
    }
    // a whitespace-delimited word
    std::string word() {
        skip_ws();
        if (i_ >= s_.size()) fail("unexpected end of line");
        size_t b = i_;
        while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        return s_.substr(b, i_ - b);
    }
    int64_t integer() {
        skip_ws();
        size_t b = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string t = s_.substr(b, i_ - b);
        if (t.empty() || t == "-") fail_at(b, "expected an integer");
        try {
            return std::stoll(t);
        } catch (const std::out_of_range&) {
            fail_at(b, "integer out of range");
        }
    }
    Rational rational() {
        skip_ws();
        size_t b = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
        try {
            return Rational::parse(s_.substr(b, i_ - b));
        } catch (const std::exception&) {
            fail_at(b, "bad rational '" + s_.substr(b, i_ - b) + "'");
        }
    }
    bool rest_is(std::string_view t) {
        skip_ws();
        std::string_view r(s_);
        r.remove_prefix(i_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.remove_suffix(1);
        if (r != t) return false;
        i_ = s_.size();
        return true;
    }
    void end() {
        if (!at_end()) fail("unexpected '" + s_.substr(i_) + "'");
    }

private:
    const std::string& s_;
    int line_;
    size_t i_ = 0;
};

}  // namespace detail

class CategoryFileParser {
public:
    CategoryFile parse(std::istream& in) {
        std::string raw;
        int line = 0;
        bool in_hom = false;
        int hom_src = 0, hom_tgt = 0;
        while (std::getline(in, raw)) {
            ++line;
            if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            detail::LineCursor c(raw, line);
            if (c.at_end()) continue;
            bool indented = std::isspace(static_cast<unsigned char>(raw[0]));
            if (indented && in_hom) {
                size_t col = c.pos();
                std::string n = c.name();
                int deg = static_cast<int>(c.integer());
                size_t wcol = c.pos();
                Rational w = c.rational();
                c.end();
                if (gen_ids_.count(n)) c.fail_at(col, "duplicate generator " + n);
                if (w.sign() < 0) c.fail_at(wcol, "negative weight");
                if (!f_.pog.base().contains(w)) c.fail_at(wcol, "weight " + w.str() + " is not in " + f_.pog.str());
                gen_ids_[n] = f_.cat.add_gen(n, hom_src, hom_tgt, deg, w);
                continue;
            }
            in_hom = false;
            if (indented) c.fail("indented line outside a hom block");
            size_t kcol = c.pos();
            std::string key = c.name();
            if (key == "pog") {
                once(c, kcol, key);
                size_t col = c.pos();
                std::string spec = c.word();
                try {
                    f_.pog = Pog::parse(spec);
                } catch (const std::exception& e) {
                    c.fail_at(col, e.what());
                }
                c.end();
            } else if (key == "kind") {
                once(c, kcol, key);
                size_t col = c.pos();
                std::string v = c.word();
                if (v == "curved")
                    f_.kind = FileKind::curved;
                else if (v == "graded")
                    f_.kind = FileKind::graded;
                else
                    c.fail_at(col, "kind must be curved or graded");
                c.end();
            } else if (key == "coeff") {
                once(c, kcol, key);
                size_t col = c.pos();
                std::string v = c.word();
                if (v == "z" || v == "Z")
                    f_.coeff = Coeff::Z;
                else if (v == "f2" || v == "F2")
                    f_.coeff = Coeff::F2;
                else
                    c.fail_at(col, "coeff must be z or f2");
                c.end();
            } else if (key == "cutoff" || key == "eps") {
                once(c, kcol, key);
                size_t col = c.pos();
                Rational v = c.rational();
                if (v.sign() <= 0) c.fail_at(col, key + " must be positive");
                c.end();
                (key == "cutoff" ? f_.cutoff : f_.eps) = v;
            } else if (key == "dmax" || key == "lmax") {
                once(c, kcol, key);
                size_t col = c.pos();
                int64_t v = c.integer();
                if (v < 0 || v > 16) c.fail_at(col, key + " must be in 0..16");
                c.end();
                (key == "dmax" ? f_.dmax : f_.lmax) = static_cast<int>(v);
            } else if (key == "objects") {
                once(c, kcol, key);
                require_header(c, kcol);
                f_.cat.coeff = f_.coeff;
                f_.cat.cutoff = f_.cutoff;
                f_.cat.epsilon = f_.eps;
                while (!c.at_end()) {
                    size_t col = c.pos();
                    std::string n = c.name();
                    if (obj_ids_.count(n)) c.fail_at(col, "duplicate object " + n);
                    obj_ids_[n] = f_.cat.add_object(n);
                }
                units_.assign(obj_ids_.size(), false);
            } else if (key == "hom") {
                require_objects(c, kcol);
                hom_src = object(c);
                hom_tgt = object(c);
                c.end();
                in_hom = true;
            } else if (key == "unit") {
                require_objects(c, kcol);
                int x = object(c);
                size_t col = c.pos();
                Element u;
                if (c.accept("="))
                    u = terms(c);
                else
                    u = f_.cat.generator(generator(c));
                c.end();
                for (auto& [t, k] : u) {
                    const Gen& e = f_.cat.gen(t.first);
                    if (e.src != x || e.tgt != x || e.degree != 0 || !(e.weight + t.second).is_zero())
                        c.fail_at(col, "unit of " + f_.cat.object_name(x) + " must be an endomorphism of degree 0 and weight 0");
                }
                if (units_[x]) c.fail_at(kcol, "second unit for " + f_.cat.object_name(x));
                units_[x] = true;
                f_.cat.set_unit(x, u);
            } else if (key == "mu") {
                require_objects(c, kcol);
                size_t dcol = c.pos();
                int64_t d = c.integer();
                c.expect(":");
                c.expect("(");
                if (d == 0) {
                    int x = object(c);
                    c.expect(")");
                    c.expect("->");
                    Element v = terms(c);
                    if (mu0_seen_.count(x)) c.fail_at(kcol, "mu 0 of " + f_.cat.object_name(x) + " given twice");
                    mu0_seen_.insert(x);
                    f_.cat.set_mu0(x, v);
                    continue;
                }
                std::vector<int> tuple;
                std::vector<size_t> cols;
                do {
                    cols.push_back(c.pos());
                    tuple.push_back(generator(c));
                } while (c.accept(","));
                c.expect(")");
                if (static_cast<int64_t>(tuple.size()) != d) c.fail_at(dcol, "arity " + std::to_string(d) + " but " + std::to_string(tuple.size()) + " inputs");
                for (size_t i = 0; i + 1 < tuple.size(); ++i)
                    if (f_.cat.gen(tuple[i]).tgt != f_.cat.gen(tuple[i + 1]).src) c.fail_at(cols[i + 1], "inputs are not composable");
                c.expect("->");
                Element v = terms(c);
                if (mu_seen_.count(tuple)) c.fail_at(kcol, "mu of this tuple given twice");
                mu_seen_.insert(tuple);
                for (auto& [t, k] : v) {
                    const Gen& o = f_.cat.gen(t.first);
                    if (o.src != f_.cat.gen(tuple.front()).src || o.tgt != f_.cat.gen(tuple.back()).tgt)
                        c.fail_at(kcol, "output " + o.name + " has the wrong endpoints");
                }
                f_.cat.set_mu(tuple, v);
            } else if (key == "sub") {
                require_objects(c, kcol);
                while (!c.at_end()) f_.subcategory.push_back(object(c));
            } else if (key == "arrow") {
                require_objects(c, kcol);
                NamedArrow a;
                size_t ncol = c.pos();
                a.name = c.name();
                if (f_.find_arrow(a.name)) c.fail_at(ncol, "duplicate arrow " + a.name);
                c.expect(":");
                a.src = object(c);
                c.expect("->");
                a.tgt = object(c);
                c.expect("=");
                a.value = terms(c);
                for (auto& [t, k] : a.value) {
                    const Gen& o = f_.cat.gen(t.first);
                    if (o.src != a.src || o.tgt != a.tgt) c.fail_at(ncol, "arrow " + a.name + ": term " + o.name + " has the wrong endpoints");
                }
                f_.arrows.push_back(std::move(a));
            } else if (key == "step") {
                require_objects(c, kcol);
                std::string a = c.name(), b = c.name();
                c.end();
                f_.steps.push_back({a, b});
            } else {
                c.fail_at(kcol, "unknown key '" + key + "'");
            }
        }
        finish(line);
        return std::move(f_);
    }

private:
    void once(detail::LineCursor& c, size_t col, const std::string& key) {
        if (seen_.count(key)) c.fail_at(col, "'" + key + "' given twice");
        seen_.insert(key);
    }
    void require_header(detail::LineCursor& c, size_t col) {
        for (const char* k : {"pog", "coeff", "cutoff", "eps", "dmax", "lmax"})
            if (!seen_.count(k)) c.fail_at(col, std::string("'") + k + "' must come before the objects");
    }
    void require_objects(detail::LineCursor& c, size_t col) {
        if (!seen_.count("objects")) c.fail_at(col, "'objects' must come first");
    }
    int object(detail::LineCursor& c) {
        size_t col = c.pos();
        std::string n = c.name();
        auto it = obj_ids_.find(n);
        if (it == obj_ids_.end()) c.fail_at(col, "unknown object " + n);
        return it->second;
    }
    int generator(detail::LineCursor& c) {
        size_t col = c.pos();
        std::string n = c.name();
        auto it = gen_ids_.find(n);
        if (it == gen_ids_.end()) c.fail_at(col, "unknown generator " + n);
        return it->second;
    }

    // ["-"] term {("+"|"-") term} or "0"; term := [INT ["*"]] ["T^" RAT] NAME
    Element terms(detail::LineCursor& c) {
        Element out;
        if (c.rest_is("0")) return out;
        bool first = true;
        for (;;) {
            int64_t s = 1;
            if (c.accept("-"))
                s = -1;
            else if (!first)
                c.expect("+");
            first = false;
            int64_t k = 1;
            if (c.peek_coefficient()) {
                k = c.integer();
                c.accept("*");
            }
            Rational shift(0);
            if (c.accept("T^")) {
                size_t col = c.pos();
                shift = c.rational();
                if (shift.sign() < 0) c.fail_at(col, "negative shift");
                if (!f_.pog.base().contains(shift)) c.fail_at(col, "shift " + shift.str() + " is not in " + f_.pog.str());
            }
            int g = generator(c);
            f_.cat.add_term(out, {g, shift}, detail::checked_mul(s, k));
            if (c.at_end()) return out;
        }
    }

    void finish(int line) {
        for (const char* k : {"pog", "coeff", "cutoff", "eps", "dmax", "lmax", "objects"})
            if (!seen_.count(k)) throw ParseError(line + 1, 1, std::string("missing '") + k + "'");
        for (int x : f_.cat.objects())
            if (!units_[x]) throw ParseError(line + 1, 1, "object " + f_.cat.object_name(x) + " has no unit");
        for (auto& [a, b] : f_.steps)
            if (!obj_ids_.count(a) && !gen_ids_.count(a))
                throw ParseError(line + 1, 1, "step: unknown object or generator " + a);
        f_.cat.autounits();
    }

    CategoryFile f_;
    std::set<std::string> seen_;
    std::map<std::string, int> obj_ids_, gen_ids_;
    std::vector<bool> units_;
    std::set<int> mu0_seen_;
    std::set<std::vector<int>> mu_seen_;
};

inline CategoryFile parse_category(std::istream& in) { return CategoryFileParser().parse(in); }

inline CategoryFile parse_category(const std::string& text) {
    std::istringstream in(text);
    return parse_category(in);
}

inline CategoryFile load_category(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_category(in);
}

namespace detail {

inline std::string terms_str(const CAinfCategory& C, const Element& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [t, k] : e) {
        int64_t a = k < 0 ? -k : k;
        out += first ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + ");
        first = false;
        if (a != 1) out += std::to_string(a) + " ";
        if (!t.second.is_zero()) out += "T^" + t.second.str() + " ";
        out += C.gen(t.first).name;
    }
    return out;
}

}  // namespace detail

/// Writes every stored entry, so the result parses back to the same tables.
inline std::string write_category(const CategoryFile& f) {
    const TableCategory& C = f.cat;
    std::ostringstream out;
    if (f.kind == FileKind::graded) out << "kind graded\n";
    out << "pog " << f.pog.str() << "\ncoeff " << (f.coeff == Coeff::Z ? "z" : "f2") << "\ncutoff " << f.cutoff.str()
        << "\neps " << f.eps.str() << "\ndmax " << f.dmax << "\nlmax " << f.lmax << "\nobjects";
    for (int x : C.objects()) out << " " << C.object_name(x);
    out << "\n";
    for (int x : C.objects())
        for (int y : C.objects()) {
            if (C.hom(x, y).empty()) continue;
            out << "hom " << C.object_name(x) << " " << C.object_name(y) << "\n";
            for (int g : C.hom(x, y)) out << "  " << C.gen(g).name << " " << C.gen(g).degree << " " << C.gen(g).weight.str() << "\n";
        }
    for (int x : C.objects()) {
        int e = C.single_unit(x);
        out << "unit " << C.object_name(x) << (e >= 0 ? " " + C.gen(e).name : " = " + detail::terms_str(C, C.unit(x))) << "\n";
    }
    for (auto& [x, v] : C.mu0_table()) out << "mu 0: (" << C.object_name(x) << ") -> " << detail::terms_str(C, v) << "\n";
    for (auto& [t, v] : C.mu_table()) {
        out << "mu " << t.size() << ": (";
        for (size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << C.gen(t[i]).name;
        out << ") -> " << detail::terms_str(C, v) << "\n";
    }
    if (!f.subcategory.empty()) {
        out << "sub";
        for (int a : f.subcategory) out << " " << C.object_name(a);
        out << "\n";
    }
    for (auto& a : f.arrows)
        out << "arrow " << a.name << ": " << C.object_name(a.src) << " -> " << C.object_name(a.tgt) << " = "
            << detail::terms_str(C, a.value) << "\n";
    for (auto& [a, b] : f.steps) out << "step " << a << " " << b << "\n";
    return out.str();
}

}  // namespace pogcat
