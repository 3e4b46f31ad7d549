#pragma once

// Graded category files <-> LinearCategory, and the step action they declare.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pogcat/catfile.hpp"
#include "pogcat/linear_category.hpp"
#include "pogcat/orbit.hpp"

namespace pogcat {

struct LinearFile {
    LinearCategory cat;
    std::map<int, int> arrow_of;  // file generator -> arrow
};

/// The category of a graded file; with `graded` false the grades are dropped.
inline LinearFile to_linear(const CategoryFile& f, bool graded = true) {
    const TableCategory& C = f.cat;
    LinearFile out{LinearCategory(graded ? std::optional<Pog>(f.pog) : std::nullopt), {}};
    for (int x : C.objects()) {
        int e = C.single_unit(x);
        if (e < 0) throw CategoryError("graded file: the unit of " + C.object_name(x) + " must be a generator");
        out.arrow_of[e] = out.cat.identity(out.cat.add_object(C.object_name(x)));
    }
    for (int x : C.objects())
        for (int y : C.objects())
            for (int g : C.hom(x, y)) {
                const Gen& a = C.gen(g);
                if (a.degree != 0) throw CategoryError("graded file: " + a.name + " has nonzero degree");
                if (!out.arrow_of.count(g)) out.arrow_of[g] = out.cat.add_arrow(x, y, a.weight, a.name);
            }
    if (!C.mu0_table().empty()) throw CategoryError("graded file: mu 0 is not allowed");
    for (auto& [t, v] : C.mu_table()) {
        if (t.size() != 2) throw CategoryError("graded file: only mu 2 is allowed");
        int a = out.arrow_of.at(t[0]), b = out.arrow_of.at(t[1]);
        if (out.cat.is_identity(a) || out.cat.is_identity(b)) {
            Vec expect = out.cat.compose(a, b), got;
            for (auto& [term, k] : v) vec_add(got, out.arrow_of.at(term.first), k);
            if (got != expect) throw CategoryError("graded file: product with an identity is not the other factor");
            continue;
        }
        Vec value;
        for (auto& [term, k] : v) {
            if (!term.second.is_zero()) throw CategoryError("graded file: shifts are not allowed");
            int r = out.arrow_of.at(term.first);
            if (graded && f.pog.normalize(out.cat.arrow(a).grade + out.cat.arrow(b).grade) != out.cat.arrow(r).grade)
                throw CategoryError("graded file: " + C.gen(t[0]).name + " then " + C.gen(t[1]).name + " does not add grades");
            vec_add(value, r, k);
        }
        out.cat.set_comp(a, b, value);
    }
    return out;
}

/// The action of the file's pog in which one step moves objects and arrows
/// as listed by its `step` lines (unlisted ones are fixed). For a quotient
/// pog the step action of the base is pushed down.
inline CategoryAction file_action(const CategoryFile& f, const LinearFile& L) {
    std::vector<int> objs(L.cat.num_objects()), arrows(L.cat.num_arrows());
    for (size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<int>(i);
    for (size_t i = 0; i < arrows.size(); ++i) arrows[i] = static_cast<int>(i);
    for (auto& [a, b] : f.steps) {
        auto oa = L.cat.find_object(a), ob = L.cat.find_object(b);
        if (oa && ob) {
            objs[*oa] = *ob;
            continue;
        }
        int ga = -1, gb = -1;
        for (auto& [g, arr] : L.arrow_of) {
            if (f.cat.gen(g).name == a) ga = arr;
            if (f.cat.gen(g).name == b) gb = arr;
        }
        if (ga < 0 || gb < 0) throw CategoryError("step " + a + " " + b + ": not two objects or two generators");
        arrows[ga] = gb;
    }
    std::vector<bool> hit(objs.size());
    for (int o : objs) hit[o] = true;
    std::vector<bool> hit_a(arrows.size());
    for (int a : arrows) hit_a[a] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end() || std::find(hit_a.begin(), hit_a.end(), false) != hit_a.end())
        throw CategoryError("step lines do not define a permutation");
    for (int x = 0; x < static_cast<int>(objs.size()); ++x) arrows[L.cat.identity(x)] = L.cat.identity(objs[x]);
    CategoryAction A = step_action(L.cat, f.pog.base(), objs, arrows, std::nullopt);
    if (f.pog.is_quotient()) A = quotient_action(L.cat, A, f.pog.period());
    return A;
}

/// A graded file for a linear category over `pog` (grades become weights).
inline CategoryFile from_linear(const LinearCategory& D, const Pog& pog) {
    CategoryFile f;
    f.kind = FileKind::graded;
    f.pog = pog;
    f.cutoff = Rational(1000);
    f.eps = Rational(1);
    f.dmax = 2;
    f.lmax = 0;
    std::map<int, int> gen_of;
    for (int x = 0; x < static_cast<int>(D.num_objects()); ++x) f.cat.add_object(D.object_name(x));
    for (int x = 0; x < static_cast<int>(D.num_objects()); ++x)
        for (int y = 0; y < static_cast<int>(D.num_objects()); ++y)
            for (int a : D.hom(x, y))
                gen_of[a] = f.cat.add_gen(D.is_identity(a) ? "e_" + D.object_name(x) : D.arrow_name(a), x, y, 0, D.arrow(a).grade);
    for (int x = 0; x < static_cast<int>(D.num_objects()); ++x) f.cat.set_unit(x, f.cat.generator(gen_of[D.identity(x)]));
    f.cat.autounits();
    for (auto& [fg, v] : D.table()) {
        Element e;
        for (auto& [r, k] : v) f.cat.add_term(e, {gen_of[r], Rational(0)}, k);
        f.cat.set_mu({gen_of[fg.first], gen_of[fg.second]}, e);
    }
    return f;
}

}  // namespace pogcat
