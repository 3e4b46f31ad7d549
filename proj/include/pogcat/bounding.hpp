#pragma once

// Bounding cochains and the comparison Tw(C^bc) = flat part of cTw(C).
//
// A bounding cochain on X is b in C(X, X) of degree 1 and weight >= eps
// with sum_{k>=0} mu^k(b, .., b) = 0 modulo the cutoff. Candidates are F2
// combinations of terms T^s g with g of degree 1 and s a multiple of eps.
//
// The solver goes through the weight strata of the candidate terms in
// increasing order. Terms of the residual below the next stratum only see
// components already chosen, so each stratum is settled before moving on.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pogcat/twisted.hpp"

namespace pogcat {

/// sum_k mu^k(delta, .., delta) entrywise, for a twisted object over C.
inline std::map<std::pair<int, int>, Element> twisted_curvature(const CAinfCategory& C, const TwistedObject& T) {
    std::map<std::pair<int, int>, Element> out;
    std::vector<Element> args;
    std::function<void(int, int, Rational)> rec = [&](int start, int cur, Rational w) {
        if (w >= C.cutoff) return;
        Element r = args.empty() ? C.mu0(T.entries[start].first) : C.mu_elements(args);
        if (!r.empty()) C.add_into(out[{start, cur}], r, C.sign(T.entries[start].second));
        for (auto& [ij, e] : T.delta) {
            if (ij.first != cur) continue;
            args.push_back(e);
            rec(start, ij.second, w + C.min_weight(e));
            args.pop_back();
        }
    };
    for (int a = 0; a < static_cast<int>(T.entries.size()); ++a) rec(a, a, Rational(0));
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

inline Element mc_residual(const CAinfCategory& C, int X, const Element& b) {
    if (!b.empty() && C.min_weight(b) <= Rational(0))
        throw std::invalid_argument("mc_residual: the cochain must have positive weight");
    TwistedObject T{"", {{X, 0}}, {}};
    if (!b.empty()) T.delta[{0, 0}] = b;
    auto r = twisted_curvature(C, T);
    return r.count({0, 0}) ? r.at({0, 0}) : Element{};
}

inline bool is_bounding_cochain(const CAinfCategory& C, int X, const Element& b) {
    for (auto& [t, c] : b) {
        const Gen& g = C.gen(t.first);
        if (g.src != X || g.tgt != X || g.degree != 1 || C.term_weight(t) < C.epsilon) return false;
    }
    return mc_residual(C, X, b).empty();
}

/// Terms T^s g of C(src, tgt) with |g| = degree, s in {0, eps, 2 eps, ..}
/// and weight in [min_weight, cutoff).
inline std::vector<Term> candidate_terms(const CAinfCategory& C, int src, int tgt, int degree, const Rational& min_weight,
                                         int max_shift_steps) {
    std::vector<Term> out;
    for (int g : C.hom(src, tgt)) {
        if (C.gen(g).degree != degree) continue;
        for (int s = 0; s <= max_shift_steps; ++s) {
            Term t{g, C.epsilon * Rational(s)};
            Rational w = C.term_weight(t);
            if (w >= min_weight && w < C.cutoff) out.push_back(t);
        }
    }
    return out;
}

inline Element element_of(const CAinfCategory& C, const std::vector<Term>& terms, uint64_t mask) {
    Element e;
    for (size_t i = 0; i < terms.size(); ++i)
        if ((mask >> i) & 1) C.add_term(e, terms[i], 1);
    return e;
}

struct BoundingSearch {
    std::vector<Term> candidates;
    std::vector<Element> solutions;
    size_t evaluations = 0;
};

/// All F2 bounding cochains on X among combinations of candidate terms,
/// solved stratum by stratum in weight.
inline BoundingSearch bounding_cochains_f2(const CAinfCategory& C, int X, int max_shift_steps) {
    if (C.coeff != Coeff::F2) throw std::invalid_argument("bounding_cochains_f2 needs an F2 category");
    BoundingSearch out;
    out.candidates = candidate_terms(C, X, X, 1, C.epsilon, max_shift_steps);
    std::map<Rational, std::vector<Term>> strata;
    for (auto& t : out.candidates) strata[C.term_weight(t)].push_back(t);
    std::vector<std::pair<Rational, std::vector<Term>>> levels(strata.begin(), strata.end());
    Element b;
    std::function<void(size_t)> rec = [&](size_t level) {
        Rational bound = level < levels.size() ? levels[level].first : C.cutoff;
        ++out.evaluations;
        for (auto& [t, c] : mc_residual(C, X, b))
            if (C.term_weight(t) < bound) return;
        if (level == levels.size()) {
            out.solutions.push_back(b);
            return;
        }
        const auto& terms = levels[level].second;
        if (terms.size() > 20) throw std::invalid_argument("bounding_cochains_f2: stratum too large");
        for (uint64_t mask = 0; mask < (uint64_t{1} << terms.size()); ++mask) {
            Element saved = b;
            C.add_into(b, element_of(C, terms, mask));
            rec(level + 1);
            b = saved;
        }
    };
    rec(0);
    return out;
}

/// The same set by brute force over every combination of candidates.
inline std::vector<Element> bounding_cochains_exhaustive(const CAinfCategory& C, int X, int max_shift_steps) {
    auto cands = candidate_terms(C, X, X, 1, C.epsilon, max_shift_steps);
    if (cands.size() > 20) throw std::invalid_argument("bounding_cochains_exhaustive: too many candidates");
    std::vector<Element> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << cands.size()); ++mask) {
        Element b = element_of(C, cands, mask);
        if (mc_residual(C, X, b).empty()) out.push_back(b);
    }
    return out;
}

/// Objects (X, 0) twisted by each bounding cochain found for X.
inline std::vector<TwistedObject> bc_objects(const CAinfCategory& C, int max_shift_steps) {
    std::vector<TwistedObject> out;
    for (int X : C.objects()) {
        int n = 0;
        for (auto& b : bounding_cochains_f2(C, X, max_shift_steps).solutions) {
            TwistedObject T{C.object_name(X) + "#" + std::to_string(n++), {{X, 0}}, {}};
            if (!b.empty()) T.delta[{0, 0}] = b;
            out.push_back(T);
        }
    }
    return out;
}

// ---------------------------------------------------------------- windows

struct TwistedWindow {
    int max_entries = 2;
    std::vector<int> shifts{0, 1};
    int diagonal_shift_steps = 2;  // candidate shifts for diagonal entries
    int upper_shift_steps = 0;     // candidate shifts for off-diagonal entries
};

namespace detail {

// Every twisted object over C in the window (no Maurer-Cartan condition).
inline void for_each_twisted(const CAinfCategory& C, const TwistedWindow& W, const std::vector<int>& objects,
                             const std::function<void(const TwistedObject&)>& f) {
    std::vector<std::pair<int, int>> entries;
    std::function<void()> grow = [&]() {
        if (!entries.empty()) {
            // slots (i, j), i <= j, each with its candidate terms
            std::vector<std::tuple<int, int, std::vector<Term>>> slots;
            for (int i = 0; i < static_cast<int>(entries.size()); ++i)
                for (int j = i; j < static_cast<int>(entries.size()); ++j) {
                    int deg = 1 + entries[j].second - entries[i].second;
                    auto terms = i == j ? candidate_terms(C, entries[i].first, entries[j].first, deg, C.epsilon, W.diagonal_shift_steps)
                                        : candidate_terms(C, entries[i].first, entries[j].first, deg, Rational(0), W.upper_shift_steps);
                    if (terms.size() > 16) throw std::invalid_argument("twisted window: too many candidates in one slot");
                    if (!terms.empty()) slots.emplace_back(i, j, std::move(terms));
                }
            TwistedObject T{"", entries, {}};
            std::function<void(size_t)> fill = [&](size_t s) {
                if (s == slots.size()) {
                    f(T);
                    return;
                }
                auto& [i, j, terms] = slots[s];
                for (uint64_t mask = 0; mask < (uint64_t{1} << terms.size()); ++mask) {
                    Element e = element_of(C, terms, mask);
                    if (e.empty())
                        T.delta.erase({i, j});
                    else
                        T.delta[{i, j}] = e;
                    fill(s + 1);
                }
                T.delta.erase({i, j});
            };
            fill(0);
        }
        if (static_cast<int>(entries.size()) == W.max_entries) return;
        for (int X : objects)
            for (int k : W.shifts) {
                entries.push_back({X, k});
                grow();
                entries.pop_back();
            }
    };
    grow();
}

using TwistedKey = std::pair<std::vector<std::pair<int, int>>, std::map<std::pair<int, int>, Element>>;

}  // namespace detail

struct BcComparison {
    size_t flat_twisted = 0;   // objects of the flat part of cTw(C) in the window
    size_t bc_twisted = 0;     // objects of Tw(C^bc) in the window
    size_t matched = 0;
    size_t tables_compared = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty() && flat_twisted == bc_twisted && matched == flat_twisted; }
};

/// Enumerates both windows over F2, matches objects through
/// (X_i, k_i; delta) <-> ((X_i, delta_ii), k_i; strict part of delta), and
/// compares mu tables up to dmax on the first `sample` matched objects.
inline BcComparison compare_bc_flat_twisted(const CAinfCategory& C, const TwistedWindow& W, int dmax, size_t sample) {
    if (C.coeff != Coeff::F2) throw std::invalid_argument("compare_bc_flat_twisted needs an F2 category");
    BcComparison rep;
    auto bcs = bc_objects(C, W.diagonal_shift_steps);
    TwistedCategory Cbc(C, bcs);
    std::map<std::pair<int, Element>, int> bc_index;  // (X, b) -> object of Cbc
    for (int p = 0; p < static_cast<int>(bcs.size()); ++p) {
        auto it = bcs[p].delta.find({0, 0});
        bc_index[{bcs[p].entries[0].first, it == bcs[p].delta.end() ? Element{} : it->second}] = p;
    }

    // flat part of cTw(C), keyed by its image on the other side
    std::map<detail::TwistedKey, TwistedObject> flat;
    detail::for_each_twisted(C, W, C.objects(), [&](const TwistedObject& T) {
        if (!twisted_curvature(C, T).empty()) return;
        ++rep.flat_twisted;
        detail::TwistedKey key;
        for (int i = 0; i < static_cast<int>(T.entries.size()); ++i) {
            auto it = T.delta.find({i, i});
            Element b = it == T.delta.end() ? Element{} : it->second;
            auto bi = bc_index.find({T.entries[i].first, b});
            if (bi == bc_index.end()) {
                rep.mismatches.push_back("diagonal entry is not a bounding cochain found by the solver");
                return;
            }
            key.first.push_back({bi->second, T.entries[i].second});
        }
        for (auto& [ij, e] : T.delta)
            if (ij.first != ij.second) key.second[ij] = e;
        flat[key] = T;
    });

    // Tw(C^bc): strictly upper twisting with vanishing curvature
    std::vector<std::pair<TwistedObject, TwistedObject>> pairs;
    TwistedWindow Wbc = W;
    Wbc.diagonal_shift_steps = -1;
    detail::for_each_twisted(Cbc, Wbc, Cbc.objects(), [&](const TwistedObject& T) {
        if (!twisted_curvature(Cbc, T).empty()) return;
        ++rep.bc_twisted;
        detail::TwistedKey key;
        key.first = T.entries;
        for (auto& [ij, e] : T.delta) {
            Element base;
            for (auto& [t, c] : e) C.add_term(base, {Cbc.decode(t.first).g, t.second}, c);
            key.second[ij] = base;
        }
        auto it = flat.find(key);
        if (it == flat.end()) {
            rep.mismatches.push_back("object of Tw(C^bc) with no flat twisted partner");
            return;
        }
        ++rep.matched;
        if (pairs.size() < sample) pairs.push_back({it->second, T});
    });

    // mu tables on the sample
    std::vector<TwistedObject> left, right;
    for (auto& [a, b] : pairs) {
        left.push_back(a);
        right.push_back(b);
    }
    TwistedCategory T1(C, left), T2(Cbc, right);
    auto translate = [&](int g1) {
        auto d = T1.decode(g1);
        int P = right[d.P].entries[d.i].first, Q = right[d.Q].entries[d.j].first;
        int h = Cbc.generator_of(P, Q, 0, 0, d.g);
        return T2.generator_of(d.P, d.Q, d.i, d.j, h);
    };
    auto t1 = mu_table(T1, dmax);
    auto t2 = mu_table(T2, dmax);
    std::map<RelationKey, Element> mapped;
    for (auto& [k, e] : t1) {
        RelationKey k2{{}, k.object};
        for (int g : k.tuple) k2.tuple.push_back(translate(g));
        Element e2;
        for (auto& [t, c] : e) T2.add_term(e2, {translate(t.first), t.second}, c);
        mapped[k2] = e2;
        ++rep.tables_compared;
    }
    if (mapped != t2) rep.mismatches.push_back("mu tables differ between Tw(C^bc) and the flat part of cTw(C)");
    for (int p : T1.objects())
        for (int q : T1.objects())
            for (int g : T1.hom(p, q))
                if (T1.gen(g).degree != T2.gen(translate(g)).degree) rep.mismatches.push_back("hom degrees differ");
    return rep;
}

}  // namespace pogcat
