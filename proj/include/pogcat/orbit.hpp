#pragma once

// Orbit categories C[G] and unorbit categories D#G for pog actions, with the
// enriched (continuation) and quotient-by-kernel variants.
//
// Infinite groups are handled through finite windows: an orbit category keeps
// only the grades in its window (composites leaving the window are dropped
// and counted), and an unorbit category keeps only the objects (d, g) with g
// in its window. For a finite quotient pog the window is the whole group.
// Actions and continuations built here refer to the input category, which
// must outlive the result.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pogcat/int_matrix.hpp"
#include "pogcat/linear_category.hpp"

namespace pogcat {

struct KernelViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A (possibly partial) action of a pog on a linear category by basis
/// permutations, with optional continuation data c_rho(y) in C(y, rho.y).
struct CategoryAction {
    Pog pog;
    std::function<std::optional<int>(const Rational&, int)> on_object;
    std::function<std::optional<int>(const Rational&, int)> on_arrow;
    std::function<Vec(const Rational&, int)> continuation;  // empty: plain action
};

/// Action generated by one step s of a discrete pog: s acts by the given
/// permutations and c_s(y) = step_continuation[y]. Negative multiples use the
/// inverse permutation; c_{ks} is the k-fold composite.
inline CategoryAction step_action(const LinearCategory& C, const Pog& pog, std::vector<int> object_perm,
                                  std::vector<int> arrow_perm, std::optional<std::vector<Vec>> step_continuation) {
    if (!pog.is_discrete()) throw std::invalid_argument("step_action needs a discrete pog");
    if (object_perm.size() != C.num_objects() || arrow_perm.size() != C.num_arrows())
        throw std::invalid_argument("step_action: permutation sizes do not match the category");
    Rational step = pog.step();
    auto inverse = [](const std::vector<int>& p) {
        std::vector<int> q(p.size());
        for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
        return q;
    };
    auto oinv = inverse(object_perm), ainv = inverse(arrow_perm);
    auto power = [step](const std::vector<int>& fwd, const std::vector<int>& bwd, const Rational& g, int i) {
        int64_t k = (g / step).num();
        const auto& p = k >= 0 ? fwd : bwd;
        for (int64_t j = 0; j < (k >= 0 ? k : -k); ++j) i = p[i];
        return i;
    };
    CategoryAction act{pog, {}, {}, {}};
    act.on_object = [=](const Rational& g, int x) -> std::optional<int> { return power(object_perm, oinv, g, x); };
    act.on_arrow = [=](const Rational& g, int a) -> std::optional<int> { return power(arrow_perm, ainv, g, a); };
    if (step_continuation) {
        const LinearCategory* cat = &C;
        auto cs = *step_continuation;
        auto perm = object_perm;
        act.continuation = [cat, cs, perm, step](const Rational& rho, int y) {
            int64_t k = (rho / step).num();
            if (k < 0) throw std::invalid_argument("continuation by a negative element");
            Vec out{{cat->identity(y), 1}};
            int cur = y;
            for (int64_t j = 0; j < k; ++j) {
                out = cat->compose(out, cs[cur]);
                cur = perm[cur];
            }
            return out;
        };
    }
    return act;
}

namespace detail {

inline std::string grade_tag(const Rational& g) { return "@" + g.str(); }

inline std::vector<Rational> normalized_window(const Pog& pog, const std::vector<Rational>& window) {
    std::set<Rational> s;
    for (auto& g : window) s.insert(pog.normalize(g));
    return {s.begin(), s.end()};
}

inline Vec act_vec(const CategoryAction& A, const Rational& g, const Vec& v) {
    Vec out;
    for (auto& [a, c] : v) {
        auto b = A.on_arrow(g, a);
        if (!b) return {};
        vec_add(out, *b, c);
    }
    return out;
}

}  // namespace detail

/// C[G]: same objects, hom(x, y) = sum over g in the window of C(x, g.y).
/// With `objects` given, only the full subcategory on those objects is built.
struct OrbitCategory {
    LinearCategory cat;
    std::vector<std::pair<Rational, int>> origin;  // orbit arrow -> (g, arrow of C)
    std::vector<int> object_origin;                // orbit object -> object of C
    size_t dropped_composites = 0;
};

inline OrbitCategory orbit(const LinearCategory& C, const CategoryAction& A, const std::vector<Rational>& window,
                           std::optional<std::vector<int>> objects = std::nullopt) {
    const Pog& G = A.pog;
    auto W = detail::normalized_window(G, window);
    if (!std::binary_search(W.begin(), W.end(), Rational(0))) throw std::invalid_argument("orbit: window must contain 0");
    auto in_window = [&](const Rational& g) { return std::binary_search(W.begin(), W.end(), G.normalize(g)); };
    if (!objects) {
        objects.emplace();
        for (int x = 0; x < static_cast<int>(C.num_objects()); ++x) objects->push_back(x);
    }

    OrbitCategory out{LinearCategory(G), {}, *objects, 0};
    LinearCategory& O = out.cat;
    std::map<std::pair<Rational, int>, int> index;
    for (int x : *objects) {
        int x2 = O.add_object(C.object_name(x));
        out.origin.push_back({Rational(0), C.identity(x)});
        index[{Rational(0), C.identity(x)}] = O.identity(x2);
    }
    for (int i = 0; i < static_cast<int>(objects->size()); ++i)
        for (int j = 0; j < static_cast<int>(objects->size()); ++j)
            for (auto& g : W) {
                auto gy = A.on_object(g, (*objects)[j]);
                if (!gy) continue;
                for (int f : C.hom((*objects)[i], *gy)) {
                    if (index.count({g, f})) continue;
                    int id = O.add_arrow(i, j, g, C.arrow_name(f) + detail::grade_tag(g));
                    out.origin.push_back({g, f});
                    index[{g, f}] = id;
                }
            }
    // (g, f) then (h, k) = (g + h, f then g.k)
    for (int a = 0; a < static_cast<int>(O.num_arrows()); ++a) {
        if (O.is_identity(a)) continue;
        auto [g, f] = out.origin[a];
        for (int z = 0; z < static_cast<int>(O.num_objects()); ++z)
            for (int b : O.hom(O.arrow(a).tgt, z)) {
                if (O.is_identity(b)) continue;
                auto [h, k] = out.origin[b];
                auto gk = A.on_arrow(g, k);
                if (!gk) continue;
                Vec prod = C.compose(f, *gk);
                if (prod.empty()) continue;
                Rational gh = G.normalize(g + h);
                if (!in_window(gh)) {
                    ++out.dropped_composites;
                    continue;
                }
                Vec res;
                for (auto& [r, c] : prod) vec_add(res, index.at({gh, r}), c);
                O.set_comp(a, b, std::move(res));
            }
    }
    if (A.continuation) {
        // rho . (g, f) = (g + rho, f then c_rho(g.y))
        auto origin = out.origin;
        const LinearCategory* base = &C;
        O.module_action = [origin, index, base, A, G, W](const Rational& rho, int a) {
            if (rho.is_zero()) return Vec{{a, 1}};
            auto [g, f] = origin[a];
            int gy = base->arrow(f).tgt;
            Rational t = G.normalize(g + rho);
            if (!std::binary_search(W.begin(), W.end(), t)) return Vec{};
            Vec prod = base->compose(Vec{{f, 1}}, A.continuation(rho, gy));
            Vec res;
            for (auto& [r, c] : prod) vec_add(res, index.at({t, r}), c);
            return res;
        };
    }
    return out;
}

/// D#G: objects (d, g) for g in the window, hom((d,g),(c,h)) = D(d,c)_{h-g}.
struct UnorbitCategory {
    LinearCategory cat;
    CategoryAction action;
    std::vector<std::pair<int, Rational>> object_origin;  // (d, g)
    std::vector<int> arrow_origin;                        // arrow of D
};

inline UnorbitCategory unorbit(const LinearCategory& D, const std::vector<Rational>& window) {
    if (!D.grading()) throw std::invalid_argument("unorbit needs a graded category");
    const Pog G = *D.grading();
    auto W = detail::normalized_window(G, window);

    UnorbitCategory result;
    UnorbitCategory* out = &result;
    LinearCategory& U = out->cat;
    std::map<std::pair<int, Rational>, int> obj;
    std::map<std::pair<int, int>, int> arr;  // (D arrow, U source) -> U arrow
    for (int d = 0; d < static_cast<int>(D.num_objects()); ++d)
        for (auto& g : W) {
            int u = U.add_object(D.object_name(d) + detail::grade_tag(g));
            obj[{d, g}] = u;
            out->object_origin.push_back({d, g});
        }
    out->arrow_origin.assign(U.num_arrows(), -1);
    for (auto& [key, u] : obj) {
        out->arrow_origin[U.identity(u)] = D.identity(key.first);
        arr[{D.identity(key.first), u}] = U.identity(u);
    }
    for (auto& [ks, us] : obj)
        for (auto& [kt, ut] : obj)
            for (int a : D.hom_in_grade(ks.first, kt.first, kt.second - ks.second)) {
                if (D.is_identity(a) && us == ut) continue;
                int id = U.add_arrow(us, ut, Rational(0), D.arrow_name(a) + detail::grade_tag(ks.second));
                out->arrow_origin.push_back(a);
                arr[{a, us}] = id;
            }
    for (int a = 0; a < static_cast<int>(U.num_arrows()); ++a)
        for (int z = 0; z < static_cast<int>(U.num_objects()); ++z)
            for (int b : U.hom(U.arrow(a).tgt, z)) {
                if (U.is_identity(a) || U.is_identity(b)) continue;
                Vec prod = D.compose(out->arrow_origin[a], out->arrow_origin[b]);
                Vec res;
                for (auto& [r, c] : prod) vec_add(res, arr.at({r, U.arrow(a).src}), c);
                U.set_comp(a, b, std::move(res));
            }

    CategoryAction& act = out->action;
    act.pog = G;
    auto origin = out->object_origin;
    auto arrow_origin = out->arrow_origin;
    std::vector<int> arrow_src(U.num_arrows());
    for (int a = 0; a < static_cast<int>(U.num_arrows()); ++a) arrow_src[a] = U.arrow(a).src;
    act.on_object = [obj, origin, G](const Rational& k, int u) -> std::optional<int> {
        auto [d, g] = origin[u];
        auto it = obj.find({d, G.normalize(g + k)});
        if (it == obj.end()) return std::nullopt;
        return it->second;
    };
    act.on_arrow = [obj, arr, origin, arrow_origin, arrow_src, G](const Rational& k, int a) -> std::optional<int> {
        auto [d, g] = origin[arrow_src[a]];
        auto it = obj.find({d, G.normalize(g + k)});
        if (it == obj.end()) return std::nullopt;
        auto jt = arr.find({arrow_origin[a], it->second});
        if (jt == arr.end()) return std::nullopt;
        return jt->second;
    };
    if (D.module_action) {
        // c_rho(d, g) = rho . 1_d, an arrow (d, g) -> (d, g + rho)
        const LinearCategory* base = &D;
        act.continuation = [base, obj, arr, origin, G](const Rational& rho, int u) {
            auto [d, g] = origin[u];
            if (!obj.count({d, G.normalize(g + rho)})) return Vec{};
            Vec res;
            for (auto& [r, c] : base->act(rho, Vec{{base->identity(d), 1}})) vec_add(res, arr.at({r, u}), c);
            return res;
        };
    }
    return result;
}

/// The induced action of P/P0 (P0 = period Z), after checking that P0 acts
/// trivially on objects and arrows.
inline CategoryAction quotient_action(const LinearCategory& C, const CategoryAction& A, const Rational& period) {
    for (int x = 0; x < static_cast<int>(C.num_objects()); ++x) {
        auto y = A.on_object(period, x);
        if (!y || *y != x)
            throw KernelViolation("quotient action: " + period.str() + " moves object " + C.object_name(x));
    }
    for (int a = 0; a < static_cast<int>(C.num_arrows()); ++a) {
        auto b = A.on_arrow(period, a);
        if (!b || *b != a) throw KernelViolation("quotient action: " + period.str() + " moves arrow " + C.arrow_name(a));
    }
    CategoryAction qa = A;
    qa.pog = Pog::quotient(A.pog, period);
    return qa;
}

/// C[P/P0], graded by the quotient with the whole group as window.
inline OrbitCategory orbit_quotient(const LinearCategory& C, const CategoryAction& A, const Rational& period) {
    CategoryAction qa = quotient_action(C, A, period);
    return orbit(C, qa, qa.pog.elements_in(Rational(0), Rational(0)));
}

/// D#(P/P0): all of the finite quotient as window.
inline UnorbitCategory unorbit_quotient(const LinearCategory& D) {
    if (!D.grading() || !D.grading()->order()) throw std::invalid_argument("unorbit_quotient needs a finite quotient grading");
    return unorbit(D, D.grading()->elements_in(Rational(0), Rational(0)));
}

struct ComparisonReport {
    size_t homs_compared = 0;
    size_t arrows_compared = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// C -> C[G] -> C[G]#G compared with C through (x, g) |-> g.x. The orbit
/// window must contain all differences of the object window.
inline ComparisonReport check_orbit_unorbit(const LinearCategory& C, const CategoryAction& A,
                                            const std::vector<Rational>& object_window,
                                            const std::vector<Rational>& orbit_window,
                                            const std::vector<Rational>& rhos = {}) {
    ComparisonReport rep;
    OrbitCategory O = orbit(C, A, orbit_window);
    UnorbitCategory U = unorbit(O.cat, object_window);
    const Pog& G = A.pog;

    auto phi_obj = [&](int u) {
        auto [x, g] = U.object_origin[u];
        return A.on_object(g, x);
    };
    auto phi_arrow = [&](int a) -> std::optional<int> {
        auto [x, g] = U.object_origin[U.cat.arrow(a).src];
        auto [k, f] = O.origin[U.arrow_origin[a]];
        (void)k;
        return A.on_arrow(g, f);
    };
    auto phi_vec = [&](const Vec& v) {
        Vec out;
        for (auto& [a, c] : v) vec_add(out, *phi_arrow(a), c);
        return out;
    };
    for (int u = 0; u < static_cast<int>(U.cat.num_objects()); ++u)
        for (int v = 0; v < static_cast<int>(U.cat.num_objects()); ++v) {
            ++rep.homs_compared;
            auto pu = phi_obj(u), pv = phi_obj(v);
            if (!pu || !pv) {
                rep.mismatches.push_back("object outside the action domain: " + U.cat.object_name(u));
                continue;
            }
            std::vector<int> img;
            for (int a : U.cat.hom(u, v)) {
                auto b = phi_arrow(a);
                if (!b || C.arrow(*b).src != *pu || C.arrow(*b).tgt != *pv) {
                    rep.mismatches.push_back("arrow " + U.cat.arrow_name(a) + " not sent into the expected hom");
                    continue;
                }
                img.push_back(*b);
            }
            auto expect = C.hom(*pu, *pv);
            std::sort(img.begin(), img.end());
            std::sort(expect.begin(), expect.end());
            rep.arrows_compared += expect.size();
            if (img != expect)
                rep.mismatches.push_back("hom(" + U.cat.object_name(u) + ", " + U.cat.object_name(v) +
                                         ") is not in bijection with its image");
        }
    for (int a = 0; a < static_cast<int>(U.cat.num_arrows()); ++a)
        for (int z = 0; z < static_cast<int>(U.cat.num_objects()); ++z)
            for (int b : U.cat.hom(U.cat.arrow(a).tgt, z)) {
                Vec lhs = phi_vec(U.cat.compose(a, b));
                Vec rhs = C.compose(Vec{{*phi_arrow(a), 1}}, Vec{{*phi_arrow(b), 1}});
                if (lhs != rhs)
                    rep.mismatches.push_back("composition " + U.cat.arrow_name(a) + " ; " + U.cat.arrow_name(b));
            }
    if (A.continuation && U.action.continuation) {
        for (int u = 0; u < static_cast<int>(U.cat.num_objects()); ++u)
            for (auto& rho : rhos) {
                Vec cu = U.action.continuation(rho, u);
                if (cu.empty() && !U.action.on_object(rho, u)) continue;  // leaves the window
                auto [x, g] = U.object_origin[u];
                Vec expect = detail::act_vec(A, g, A.continuation(rho, x));
                if (phi_vec(cu) != expect)
                    rep.mismatches.push_back("continuation at " + U.cat.object_name(u) + " by " + rho.str());
            }
    }
    (void)G;
    return rep;
}

/// D -> D#G -> (D#G)[G], compared with D on the objects (d, 0): the hom
/// ((d,0),(c,0)) in grade k must be D(d,c)_k whenever k lies in both windows.
inline ComparisonReport check_unorbit_orbit(const LinearCategory& D, const std::vector<Rational>& object_window,
                                            const std::vector<Rational>& orbit_window,
                                            const std::vector<Rational>& rhos = {}) {
    ComparisonReport rep;
    UnorbitCategory U = unorbit(D, object_window);
    std::vector<int> base_objects;
    for (int u = 0; u < static_cast<int>(U.cat.num_objects()); ++u)
        if (U.object_origin[u].second.is_zero()) base_objects.push_back(u);
    OrbitCategory O = orbit(U.cat, U.action, orbit_window, base_objects);
    const Pog& G = *D.grading();
    auto Wo = detail::normalized_window(G, orbit_window);
    auto Wu = detail::normalized_window(G, object_window);
    std::map<int, int> zero_obj;  // d -> orbit object over (d, 0)
    for (int i = 0; i < static_cast<int>(base_objects.size()); ++i) zero_obj[U.object_origin[base_objects[i]].first] = i;
    auto to_D = [&](int a) { return U.arrow_origin[O.origin[a].second]; };
    auto to_D_vec = [&](const Vec& v) {
        Vec out;
        for (auto& [a, c] : v) vec_add(out, to_D(a), c);
        return out;
    };
    auto visible = [&](const Rational& k) {
        return std::binary_search(Wo.begin(), Wo.end(), k) && std::binary_search(Wu.begin(), Wu.end(), k);
    };
    for (auto& [d, u] : zero_obj)
        for (auto& [c, v] : zero_obj) {
            ++rep.homs_compared;
            std::vector<int> img, expect;
            for (int a : O.cat.hom(u, v)) {
                if (O.cat.arrow(a).grade != D.arrow(to_D(a)).grade)
                    rep.mismatches.push_back("grade mismatch on " + O.cat.arrow_name(a));
                img.push_back(to_D(a));
            }
            for (int a : D.hom(d, c))
                if (visible(D.arrow(a).grade)) expect.push_back(a);
            std::sort(img.begin(), img.end());
            std::sort(expect.begin(), expect.end());
            rep.arrows_compared += expect.size();
            if (img != expect)
                rep.mismatches.push_back("hom(" + D.object_name(d) + ", " + D.object_name(c) + ") differs");
        }
    for (auto& [d, u] : zero_obj)
        for (auto& [c, v] : zero_obj)
            for (int a : O.cat.hom(u, v))
                for (auto& [e, w] : zero_obj)
                    for (int b : O.cat.hom(v, w)) {
                        Rational k = G.normalize(O.cat.arrow(a).grade + O.cat.arrow(b).grade);
                        if (!visible(k)) continue;
                        if (to_D_vec(O.cat.compose(a, b)) != D.compose(to_D(a), to_D(b)))
                            rep.mismatches.push_back("composition " + O.cat.arrow_name(a) + " ; " + O.cat.arrow_name(b));
                    }
    if (D.module_action && O.cat.module_action)
        for (auto& [d, u] : zero_obj)
            for (auto& [c, v] : zero_obj)
                for (int a : O.cat.hom(u, v))
                    for (auto& rho : rhos) {
                        if (!visible(G.normalize(O.cat.arrow(a).grade + rho))) continue;
                        if (to_D_vec(O.cat.act(rho, Vec{{a, 1}})) != D.act(rho, Vec{{to_D(a), 1}}))
                            rep.mismatches.push_back("action by " + rho.str() + " on " + O.cat.arrow_name(a));
                    }
    return rep;
}

/// Arrows of D whose grade lies in `sub`, graded by `sub` (change of
/// enrichment D|_P; with a larger pog this only widens the grading).
inline LinearCategory restrict_category(const LinearCategory& D, const Pog& sub) {
    if (!D.grading()) throw std::invalid_argument("restrict_category needs a graded category");
    if (sub.period() != D.grading()->period())
        throw UnsupportedInclusion(sub.str() + " and " + D.grading()->str() + " have different periods");
    LinearCategory R(sub);
    std::vector<int> to_new(D.num_arrows(), -1);
    std::vector<int> to_old;
    for (int x = 0; x < static_cast<int>(D.num_objects()); ++x) {
        int y = R.add_object(D.object_name(x));
        to_new[D.identity(x)] = R.identity(y);
        to_old.resize(R.num_arrows());
        to_old[R.identity(y)] = D.identity(x);
    }
    for (int a = 0; a < static_cast<int>(D.num_arrows()); ++a) {
        if (D.is_identity(a) || !sub.contains(D.arrow(a).grade)) continue;
        to_new[a] = R.add_arrow(D.arrow(a).src, D.arrow(a).tgt, D.arrow(a).grade, D.arrow_name(a));
        to_old.push_back(a);
    }
    auto conv = [to_new](const Vec& v) {
        Vec out;
        for (auto& [a, c] : v) vec_add(out, to_new[a], c);
        return out;
    };
    for (auto& [key, val] : D.table())
        if (to_new[key.first] >= 0 && to_new[key.second] >= 0) R.set_comp(to_new[key.first], to_new[key.second], conv(val));
    if (D.module_action) {
        const LinearCategory* base = &D;
        R.module_action = [base, to_new, to_old, conv](const Rational& rho, int a) { return conv(base->module_action(rho, to_old[a])); };
    }
    return R;
}

/// D|_P # P -> D # Q on a window of P: identity on (d, p) and on arrows.
/// Checks functoriality, equivariance under shifts by `shifts`, and that
/// continuations go to continuations.
inline ComparisonReport check_change_of_enrichment(const LinearCategory& D, const Pog& sub,
                                                   const std::vector<Rational>& window,
                                                   const std::vector<Rational>& shifts) {
    ComparisonReport rep;
    LinearCategory R = restrict_category(D, sub);
    UnorbitCategory small = unorbit(R, window);
    UnorbitCategory big = unorbit(D, window);
    std::map<std::pair<int, Rational>, int> big_obj;
    for (int u = 0; u < static_cast<int>(big.cat.num_objects()); ++u) big_obj[big.object_origin[u]] = u;
    std::map<std::pair<int, int>, int> big_arr;
    for (int a = 0; a < static_cast<int>(big.cat.num_arrows()); ++a) big_arr[{big.arrow_origin[a], big.cat.arrow(a).src}] = a;
    // arrows of R are indexed differently from D; match by name and endpoints
    auto r_to_d = [&](int a) {
        for (int b : D.hom(R.arrow(a).src, R.arrow(a).tgt))
            if (D.arrow_name(b) == R.arrow_name(a)) return b;
        throw std::logic_error("restricted arrow without origin");
    };
    auto F_obj = [&](int u) { return big_obj.at({small.object_origin[u].first, D.grading()->normalize(small.object_origin[u].second)}); };
    auto F_arr = [&](int a) { return big_arr.at({r_to_d(small.arrow_origin[a]), F_obj(small.cat.arrow(a).src)}); };
    auto F_vec = [&](const Vec& v) {
        Vec out;
        for (auto& [a, c] : v) vec_add(out, F_arr(a), c);
        return out;
    };
    for (int a = 0; a < static_cast<int>(small.cat.num_arrows()); ++a) {
        ++rep.arrows_compared;
        int b = F_arr(a);
        if (big.cat.arrow(b).tgt != F_obj(small.cat.arrow(a).tgt)) rep.mismatches.push_back("target of " + small.cat.arrow_name(a));
        for (int z = 0; z < static_cast<int>(small.cat.num_objects()); ++z)
            for (int c : small.cat.hom(small.cat.arrow(a).tgt, z))
                if (F_vec(small.cat.compose(a, c)) != big.cat.compose(Vec{{b, 1}}, Vec{{F_arr(c), 1}}))
                    rep.mismatches.push_back("functoriality at " + small.cat.arrow_name(a) + " ; " + small.cat.arrow_name(c));
        for (auto& s : shifts) {
            auto sa = small.action.on_arrow(s, a);
            if (!sa) continue;
            auto ba = big.action.on_arrow(s, b);
            if (!ba || *ba != F_arr(*sa)) rep.mismatches.push_back("equivariance of " + small.cat.arrow_name(a) + " under " + s.str());
        }
    }
    if (small.action.continuation && big.action.continuation)
        for (int u = 0; u < static_cast<int>(small.cat.num_objects()); ++u)
            for (auto& s : shifts) {
                if (!sub.base().cone_contains(s) || !small.action.on_object(s, u)) continue;
                ++rep.homs_compared;
                if (F_vec(small.action.continuation(s, u)) != big.action.continuation(s, F_obj(u)))
                    rep.mismatches.push_back("continuation at " + small.cat.object_name(u) + " by " + s.str());
            }
    return rep;
}

enum class CheckStatus { pass, fail, inconclusive };

inline const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

struct ReconstructionReport {
    CheckStatus status = CheckStatus::pass;
    std::vector<size_t> stage_ranks;  // total hom rank of each stage on the window
    size_t colimit_rank = 0, direct_rank = 0;
    size_t objects_covered = 0, objects_total = 0;
    bool orbit_recovers = false;  // (colim)[Q/P0] agrees with D on the covered grades
    std::vector<std::string> notes;
};

inline size_t total_hom_rank(const LinearCategory& C) {
    size_t n = 0;
    for (int x = 0; x < static_cast<int>(C.num_objects()); ++x)
        for (int y = 0; y < static_cast<int>(C.num_objects()); ++y) n += C.hom(x, y).size();
    return n;
}

/// Colimit of D|_{P_i/P0} # P_i/P0 along an exhaustion, compared with
/// D # Q/P0 on the given object window. Each stage is built on its own
/// finite group; the colimit is the union of the images of the stages.
inline ReconstructionReport reconstruct(const LinearCategory& D, const std::vector<Pog>& chain,
                                        const std::vector<Rational>& window) {
    ReconstructionReport rep;
    const Pog& Q = *D.grading();
    UnorbitCategory direct = unorbit(D, window);
    rep.direct_rank = total_hom_rank(direct.cat);
    rep.objects_total = direct.cat.num_objects();
    std::map<std::pair<int, Rational>, int> dobj;
    for (int u = 0; u < static_cast<int>(direct.cat.num_objects()); ++u) dobj[direct.object_origin[u]] = u;
    std::map<std::pair<std::string, int>, int> darr;  // (D arrow name, direct source) -> direct arrow
    for (int a = 0; a < static_cast<int>(direct.cat.num_arrows()); ++a)
        darr[{D.arrow_name(direct.arrow_origin[a]), direct.cat.arrow(a).src}] = a;

    std::set<int> covered_obj, covered_arr;
    for (auto& P : chain) {
        LinearCategory R = restrict_category(D, P);
        UnorbitCategory stage = unorbit_quotient(R);
        rep.stage_ranks.push_back(total_hom_rank(stage.cat));
        std::vector<int> fobj(stage.cat.num_objects(), -1);
        for (int u = 0; u < static_cast<int>(stage.cat.num_objects()); ++u) {
            auto it = dobj.find({stage.object_origin[u].first, Q.normalize(stage.object_origin[u].second)});
            if (it == dobj.end()) continue;  // outside the comparison window
            fobj[u] = it->second;
            covered_obj.insert(it->second);
        }
        auto farr = [&](int a) -> int {
            int s = fobj[stage.cat.arrow(a).src];
            if (s < 0 || fobj[stage.cat.arrow(a).tgt] < 0) return -1;
            return darr.at({R.arrow_name(stage.arrow_origin[a]), s});
        };
        for (int a = 0; a < static_cast<int>(stage.cat.num_arrows()); ++a) {
            int b = farr(a);
            if (b < 0) continue;
            covered_arr.insert(b);
            for (int z = 0; z < static_cast<int>(stage.cat.num_objects()); ++z)
                for (int c : stage.cat.hom(stage.cat.arrow(a).tgt, z)) {
                    int d2 = farr(c);
                    if (d2 < 0) continue;
                    Vec img;
                    for (auto& [r, k] : stage.cat.compose(a, c)) vec_add(img, farr(r), k);
                    if (img != direct.cat.compose(Vec{{b, 1}}, Vec{{d2, 1}})) {
                        rep.status = CheckStatus::fail;
                        rep.notes.push_back("stage " + P.str() + " is not functorial at " + stage.cat.arrow_name(a));
                    }
                }
        }
    }
    rep.objects_covered = covered_obj.size();
    rep.colimit_rank = 0;
    for (int a : covered_arr)
        if (covered_obj.count(direct.cat.arrow(a).src) && covered_obj.count(direct.cat.arrow(a).tgt)) ++rep.colimit_rank;
    if (rep.status == CheckStatus::fail) return rep;
    if (rep.objects_covered < rep.objects_total) {
        rep.status = CheckStatus::inconclusive;
        for (int u = 0; u < static_cast<int>(direct.cat.num_objects()); ++u)
            if (!covered_obj.count(u)) {
                rep.notes.push_back("window object " + direct.cat.object_name(u) + " is not reached by the exhaustion");
                break;
            }
        return rep;
    }
    if (rep.colimit_rank != rep.direct_rank) {
        rep.status = CheckStatus::fail;
        rep.notes.push_back("colimit hom rank " + std::to_string(rep.colimit_rank) + " != " + std::to_string(rep.direct_rank));
        return rep;
    }
    // second comparison: orbit of the colimit recovers D in the grades of the last stage
    LinearCategory last = restrict_category(D, chain.back());
    auto group = chain.back().elements_in(Rational(0), Rational(0));
    auto cmp = check_unorbit_orbit(last, group, group);
    rep.orbit_recovers = cmp.ok();
    if (!cmp.ok()) {
        rep.status = CheckStatus::fail;
        rep.notes.insert(rep.notes.end(), cmp.mismatches.begin(), cmp.mismatches.end());
    }
    return rep;
}

/// F^{>=c} C(X, Y): the image of postcomposition with c_c(tau_{-c} Y), as
/// a Z-lattice inside the basis of C(X, Y) (columns).
inline IntMatrix filtration_lattice(const LinearCategory& C, const CategoryAction& A, int X, int Y, const Rational& c) {
    const auto& basis = C.hom(X, Y);
    std::map<int, size_t> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::vector<std::vector<int64_t>> cols;
    auto Ym = A.on_object(-c, Y);
    if (Ym) {
        Vec cont = A.continuation(c, *Ym);
        for (int f : C.hom(X, *Ym)) {
            std::vector<int64_t> col(basis.size(), 0);
            for (auto& [h, k] : C.compose(Vec{{f, 1}}, cont)) col[pos.at(h)] += k;
            cols.push_back(col);
        }
    }
    return IntMatrix::from_columns(basis.size(), cols);
}

struct FiltrationReport {
    size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// F^{>=c} decreasing in c and F^{>=a} o F^{>=b} inside F^{>=a+b}, for the
/// given levels (cone elements, ascending).
inline FiltrationReport check_filtration(const LinearCategory& C, const CategoryAction& A, const std::vector<Rational>& levels) {
    FiltrationReport rep;
    if (!A.continuation) throw std::invalid_argument("check_filtration needs continuation data");
    const int n = static_cast<int>(C.num_objects());
    auto lattice_contains = [](const IntMatrix& big, const IntMatrix& small) {
        for (size_t j = 0; j < small.cols(); ++j)
            if (!in_lattice(big, small.column(j))) return false;
        return true;
    };
    for (int X = 0; X < n; ++X)
        for (int Y = 0; Y < n; ++Y)
            for (size_t i = 0; i + 1 < levels.size(); ++i) {
                ++rep.checks;
                if (!lattice_contains(filtration_lattice(C, A, X, Y, levels[i]), filtration_lattice(C, A, X, Y, levels[i + 1])))
                    rep.violations.push_back("F^{>=" + levels[i + 1].str() + "} not inside F^{>=" + levels[i].str() + "} on (" +
                                             C.object_name(X) + ", " + C.object_name(Y) + ")");
            }
    for (int X = 0; X < n; ++X)
        for (int Y = 0; Y < n; ++Y)
            for (int Z = 0; Z < n; ++Z)
                for (auto& a : levels)
                    for (auto& b : levels) {
                        ++rep.checks;
                        IntMatrix Fa = filtration_lattice(C, A, X, Y, a), Fb = filtration_lattice(C, A, Y, Z, b);
                        IntMatrix Fab = filtration_lattice(C, A, X, Z, a + b);
                        const auto& bxy = C.hom(X, Y);
                        const auto& byz = C.hom(Y, Z);
                        const auto& bxz = C.hom(X, Z);
                        std::map<int, size_t> pos;
                        for (size_t i = 0; i < bxz.size(); ++i) pos[bxz[i]] = i;
                        for (size_t i = 0; i < Fa.cols(); ++i)
                            for (size_t j = 0; j < Fb.cols(); ++j) {
                                Vec u, v;
                                for (size_t k = 0; k < bxy.size(); ++k) vec_add(u, bxy[k], Fa(k, i));
                                for (size_t k = 0; k < byz.size(); ++k) vec_add(v, byz[k], Fb(k, j));
                                std::vector<int64_t> col(bxz.size(), 0);
                                for (auto& [h, c] : C.compose(u, v)) col[pos.at(h)] += c;
                                if (!in_lattice(Fab, col)) {
                                    rep.violations.push_back("composition leaves F^{>=" + (a + b).str() + "} on (" +
                                                             C.object_name(X) + ", " + C.object_name(Y) + ", " +
                                                             C.object_name(Z) + ")");
                                    goto next;
                                }
                            }
                    next:;
                    }
    return rep;
}

}  // namespace pogcat
