#pragma once

// Twisted complexes over a curved category.
//
// An object is a list of entries (X_i, k_i) with an upper-triangular matrix
// delta of elements delta_ij in C(X_i, X_j) of degree 1 + k_j - k_i;
// diagonal entries must have weight >= eps. A morphism generator is a
// matrix unit: a generator x of C(X_i, Y_j) placed at (i, j), of degree
// |x| + k_i - l_j.
//
// Shifted objects follow the additive enlargement: mu on a tuple whose
// first source entry has shift k carries the sign (-1)^k, and the unit of
// (X, k) is (-1)^k e_X. mu of twisted complexes inserts any number of delta
// entries in every slot:
//   mu^d(x_1, .., x_d) = sum mu_C(delta, .., delta, x_1, delta, .., x_d, delta, ..).

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pogcat/cainf.hpp"

namespace pogcat {

struct MaurerCartanError : CategoryError {
    using CategoryError::CategoryError;
};

struct TwistedObject {
    std::string name;
    std::vector<std::pair<int, int>> entries;  // (object of C, shift)
    std::map<std::pair<int, int>, Element> delta;
};

/// ((X1, 1), (X2, 0)) with delta = m.
inline TwistedObject cone(const std::string& name, int X1, int X2, const Element& m) {
    TwistedObject T{name, {{X1, 1}, {X2, 0}}, {}};
    if (!m.empty()) T.delta[{0, 1}] = m;
    return T;
}

/// (X, 0) with no twisting.
inline TwistedObject single(const std::string& name, int X) { return {name, {{X, 0}}, {}}; }

class TwistedCategory : public CAinfCategory {
public:
    struct Decoded {
        int P, Q, i, j, g;  // twisted objects, entry indices, base generator
    };

    /// With `check_mc` the curvature of every object must have weight >= eps.
    TwistedCategory(const CAinfCategory& base, std::vector<TwistedObject> objs, bool check_mc = true)
        : base_(base), objs_(std::move(objs)) {
        coeff = base.coeff;
        cutoff = base.cutoff;
        epsilon = base.epsilon;
        for (int p = 0; p < static_cast<int>(objs_.size()); ++p) validate(p);
        for (int p = 0; p < static_cast<int>(objs_.size()); ++p)
            for (int q = 0; q < static_cast<int>(objs_.size()); ++q) {
                auto& h = homs_[{p, q}];
                const auto& E = objs_[p].entries;
                const auto& F = objs_[q].entries;
                for (int i = 0; i < static_cast<int>(E.size()); ++i)
                    for (int j = 0; j < static_cast<int>(F.size()); ++j)
                        for (int g : base.hom(E[i].first, F[j].first)) {
                            const Gen& b = base.gen(g);
                            Gen t{b.name + "[" + std::to_string(i) + std::to_string(j) + "]", p, q,
                                  b.degree + E[i].second - F[j].second, b.weight};
                            if (objs_.size() > 1) t.name = objs_[p].name + ">" + objs_[q].name + ":" + t.name;
                            gens_.push_back(t);
                            decoded_.push_back({p, q, i, j, g});
                            int id = static_cast<int>(gens_.size()) - 1;
                            index_[{p, q, i, j, g}] = id;
                            h.push_back(id);
                        }
            }
        if (check_mc)
            for (int p = 0; p < static_cast<int>(objs_.size()); ++p)
                for (auto& [t, c] : mu0(p))
                    if (term_weight(t) < epsilon)
                        throw MaurerCartanError("Maurer-Cartan residual of " + objs_[p].name + " below eps: " + gens_[t.first].name);
    }

    const CAinfCategory& base() const { return base_; }
    const TwistedObject& object(int p) const { return objs_.at(p); }
    const Decoded& decode(int g) const { return decoded_.at(g); }
    int generator_of(int P, int Q, int i, int j, int g) const { return index_.at({P, Q, i, j, g}); }

    std::vector<int> objects() const override {
        std::vector<int> out(objs_.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
        return out;
    }
    std::string object_name(int p) const override { return objs_.at(p).name; }
    const std::vector<int>& hom(int p, int q) const override { return homs_.at({p, q}); }
    const Gen& gen(int g) const override { return gens_.at(g); }

    Element unit(int p) const override {
        Element out;
        const auto& E = objs_.at(p).entries;
        for (int i = 0; i < static_cast<int>(E.size()); ++i)
            for (auto& [t, c] : base_.unit(E[i].first))
                add_term(out, {index_.at({p, p, i, i, t.first}), t.second}, c * sign(E[i].second));
        return out;
    }

    Element mu0(int p) const override { return evaluate({}, p); }

    Element mu(const std::vector<int>& gens) const override {
        auto it = cache_.find(gens);
        if (it != cache_.end()) return it->second;
        Element out = evaluate(gens, decoded_.at(gens.front()).P);
        cache_[gens] = out;
        return out;
    }

private:
    void validate(int p) const {
        const TwistedObject& T = objs_[p];
        auto objs = base_.objects();
        for (auto& [X, k] : T.entries)
            if (std::find(objs.begin(), objs.end(), X) == objs.end()) throw CategoryError(T.name + ": unknown object");
        for (auto& [ij, e] : T.delta) {
            auto [i, j] = ij;
            if (i < 0 || j < 0 || i >= static_cast<int>(T.entries.size()) || j >= static_cast<int>(T.entries.size()))
                throw CategoryError(T.name + ": delta index out of range");
            if (i > j) throw CategoryError(T.name + ": delta is not upper triangular at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (auto& [t, c] : e) {
                const Gen& g = base_.gen(t.first);
                if (g.src != T.entries[i].first || g.tgt != T.entries[j].first)
                    throw CategoryError(T.name + ": delta entry " + g.name + " has the wrong endpoints");
                if (g.degree != 1 + T.entries[j].second - T.entries[i].second)
                    throw CategoryError(T.name + ": delta entry " + g.name + " has the wrong degree");
                if (i == j && base_.term_weight(t) < epsilon)
                    throw CategoryError(T.name + ": diagonal delta entry " + g.name + " has weight below eps");
            }
        }
    }

    // Walk the slots: in slot m at entry `cur` of object P_m, either insert a
    // delta entry or, when cur is the row of input m, take the input.
    Element evaluate(const std::vector<int>& gens, int P0) const {
        Element out;
        const size_t d = gens.size();
        std::vector<Element> args;
        std::function<void(size_t, int, int, int, Rational)> rec = [&](size_t slot, int P, int cur, int start, Rational w) {
            if (w >= cutoff) return;
            if (slot == d) {
                Element r = args.empty() ? base_.mu0(objs_[P].entries[cur].first) : base_.mu_elements(args);
                int Q = P;
                int64_t s = sign(objs_[P0].entries[start].second);
                for (auto& [t, c] : r) {
                    auto it = index_.find({P0, Q, start, cur, t.first});
                    if (it == index_.end()) throw CategoryError("twisted mu: output outside the hom basis");
                    add_term(out, {it->second, t.second}, detail::checked_mul(c, s));
                }
            }
            const TwistedObject& T = objs_[P];
            for (auto& [ij, e] : T.delta) {
                if (ij.first != cur) continue;
                args.push_back(e);
                rec(slot, P, ij.second, start, w + base_.min_weight(e));
                args.pop_back();
            }
            if (slot < d) {
                const Decoded& x = decoded_[gens[slot]];
                if (x.P == P && x.i == cur) {
                    args.push_back(base_.generator(x.g));
                    rec(slot + 1, x.Q, x.j, start, w + base_.gen(x.g).weight);
                    args.pop_back();
                }
            }
        };
        for (int a = 0; a < static_cast<int>(objs_[P0].entries.size()); ++a) rec(0, P0, a, a, Rational(0));
        return out;
    }

    const CAinfCategory& base_;
    std::vector<TwistedObject> objs_;
    std::deque<Gen> gens_;
    std::vector<Decoded> decoded_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    std::map<std::tuple<int, int, int, int, int>, int> index_;
    mutable std::map<std::vector<int>, Element> cache_;
};

}  // namespace pogcat
