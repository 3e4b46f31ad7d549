#pragma once

// Generators for small categories with a pog action, used by the demos and
// the tests.
//
// A path category: a quiver Q on n vertices with an automorphism sigma, and
// C(x, y) spanned by pairs (k, p) with p a path from sigma^k x to y and
// k + len(p) <= L. Composition is (k1, p1) then (k2, p2) =
// (k1 + k2, sigma^{k2}(p1) p2), zero past length L. The step of a discrete
// pog acts by sigma, with continuation (1, e_{sigma y}) : y -> sigma y.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "pogcat/orbit.hpp"

namespace pogcat {

struct PathCategory {
    LinearCategory cat;
    std::vector<int> sigma;        // on vertices
    std::vector<int> sigma_arrow;  // on basis arrows of cat
    std::vector<Vec> step_continuation;
    int sigma_order = 1;
    int quiver_arrows = 0;
};

struct PathCategoryParams {
    int max_vertices = 3;
    int max_generators = 6;  // quiver arrows, counted with their sigma-orbits
    int max_length = 2;      // L
    int sigma_order_divides = 0;  // 0: any
};

namespace detail {

struct Quiver {
    int n = 0;
    std::vector<int> src, tgt, sigma_arrow;
    std::vector<std::string> name;
};

inline std::vector<std::vector<int>> quiver_paths(const Quiver& q, int max_len) {
    std::vector<std::vector<int>> out, frontier;
    for (int a = 0; a < static_cast<int>(q.src.size()); ++a) frontier.push_back({a});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (auto& p : frontier) {
            out.push_back(p);
            if (len == max_len) continue;
            for (int a = 0; a < static_cast<int>(q.src.size()); ++a)
                if (q.src[a] == q.tgt[p.back()]) {
                    auto e = p;
                    e.push_back(a);
                    next.push_back(e);
                }
        }
        frontier = std::move(next);
    }
    return out;
}

// (k, p) with the start vertex of p kept for the empty path
struct PathKey {
    int k;
    int start;
    std::vector<int> p;
    bool operator<(const PathKey& o) const { return std::tie(k, start, p) < std::tie(o.k, o.start, o.p); }
};

}  // namespace detail

inline PathCategory path_category(std::mt19937_64& rng, const PathCategoryParams& params) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    detail::Quiver q;
    q.n = uniform(1, params.max_vertices);
    std::vector<int> sigma(q.n);
    int order = 1;
    for (;;) {
        for (int i = 0; i < q.n; ++i) sigma[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        order = 1;
        std::vector<int> p = sigma;
        auto is_id = [&](const std::vector<int>& v) {
            for (int i = 0; i < q.n; ++i)
                if (v[i] != i) return false;
            return true;
        };
        while (!is_id(p)) {
            std::vector<int> nxt(q.n);
            for (int i = 0; i < q.n; ++i) nxt[i] = sigma[p[i]];
            p = nxt;
            ++order;
        }
        if (params.sigma_order_divides == 0 || params.sigma_order_divides % order == 0) break;
    }

    int budget = uniform(0, params.max_generators);
    while (budget >= order) {
        int u = uniform(0, q.n - 1), v = uniform(0, q.n - 1);
        int first = static_cast<int>(q.src.size());
        for (int j = 0; j < order; ++j) {
            q.src.push_back(u);
            q.tgt.push_back(v);
            q.name.push_back("a" + std::to_string(first + j));
            q.sigma_arrow.push_back(first + (j + 1) % order);
            u = sigma[u];
            v = sigma[v];
        }
        budget -= order;
    }

    PathCategory out;
    out.sigma = sigma;
    out.sigma_order = order;
    out.quiver_arrows = static_cast<int>(q.src.size());
    LinearCategory& C = out.cat;
    for (int x = 0; x < q.n; ++x) C.add_object("v" + std::to_string(x));

    using Key = detail::PathKey;
    std::map<std::pair<int, Key>, int> index;  // (source x, (k, p)) -> arrow
    std::vector<std::pair<int, Key>> origin(C.num_arrows());
    auto sigma_pow = [&](int x, int k) {
        for (int j = 0; j < k; ++j) x = sigma[x];
        return x;
    };
    auto path_name = [&](const Key& key) {
        std::string s = "t" + std::to_string(key.k) + ".";
        if (key.p.empty()) return s + "e" + std::to_string(key.start);
        for (size_t i = 0; i < key.p.size(); ++i) s += q.name[key.p[i]];
        return s;
    };
    auto paths = detail::quiver_paths(q, params.max_length);
    const int L = params.max_length;
    for (int x = 0; x < q.n; ++x) {
        Key id{0, x, {}};
        index[{x, id}] = C.identity(x);
        origin[C.identity(x)] = {x, id};
        for (int k = 0; k <= L; ++k) {
            int s = sigma_pow(x, k);
            if (k > 0) {
                Key e{k, s, {}};
                index[{x, e}] = C.add_arrow(x, s, Rational(0), path_name(e));
                origin.push_back({x, e});
            }
            for (auto& p : paths) {
                if (q.src[p.front()] != s || k + static_cast<int>(p.size()) > L) continue;
                Key key{k, s, p};
                index[{x, key}] = C.add_arrow(x, q.tgt[p.back()], Rational(0), path_name(key));
                origin.push_back({x, key});
            }
        }
    }
    auto act_path = [&](const Key& key, int j) {
        Key r = key;
        r.start = sigma_pow(key.start, j);
        for (auto& a : r.p)
            for (int i = 0; i < j; ++i) a = q.sigma_arrow[a];
        return r;
    };
    for (int a = 0; a < static_cast<int>(C.num_arrows()); ++a)
        for (int z = 0; z < q.n; ++z)
            for (int b : C.hom(C.arrow(a).tgt, z)) {
                if (C.is_identity(a) || C.is_identity(b)) continue;
                auto [x, ka] = origin[a];
                auto kb = origin[b].second;
                Key moved = act_path(ka, kb.k);
                Key r{ka.k + kb.k, moved.start, moved.p};
                r.p.insert(r.p.end(), kb.p.begin(), kb.p.end());
                if (r.k + static_cast<int>(r.p.size()) > L) continue;
                C.set_comp(a, b, Vec{{index.at({x, r}), 1}});
            }
    out.sigma_arrow.resize(C.num_arrows());
    for (int a = 0; a < static_cast<int>(C.num_arrows()); ++a) {
        auto [x, key] = origin[a];
        out.sigma_arrow[a] = index.at({sigma[x], act_path(key, 1)});
    }
    for (int y = 0; y < q.n; ++y) {
        if (L >= 1)
            out.step_continuation.push_back(Vec{{index.at({y, Key{1, sigma[y], {}}}), 1}});
        else
            out.step_continuation.push_back(Vec{});
    }
    return out;
}

/// The action of `pog` (discrete, step acting by sigma) on a path category.
inline CategoryAction path_action(const PathCategory& P, const Pog& pog, bool with_continuation = true) {
    std::optional<std::vector<Vec>> cont;
    if (with_continuation) cont = P.step_continuation;
    return step_action(P.cat, pog.base(), P.sigma, P.sigma_arrow, cont);
}

/// The one-object category BZ: a single object with only its identity.
inline LinearCategory b_integers(std::optional<Pog> grading = std::nullopt) {
    LinearCategory C(std::move(grading));
    C.add_object("*");
    return C;
}

/// B(Z[G]) on a window: one object, an arrow g for each window element,
/// g then h = g + h when it stays in the window.
inline LinearCategory b_group_ring(const Pog& G, const std::vector<Rational>& window) {
    LinearCategory C(G);
    C.add_object("*");
    std::map<Rational, int> arrow{{Rational(0), C.identity(0)}};
    for (auto& g : window) {
        Rational n = G.normalize(g);
        if (!arrow.count(n)) arrow[n] = C.add_arrow(0, 0, n, "g" + n.str());
    }
    for (auto& [g, a] : arrow)
        for (auto& [h, b] : arrow) {
            if (C.is_identity(a) || C.is_identity(b)) continue;
            auto it = arrow.find(G.normalize(g + h));
            if (it != arrow.end()) C.set_comp(a, b, Vec{{it->second, 1}});
        }
    return C;
}

/// The trivial action of G on any category.
inline CategoryAction trivial_action(const Pog& G) {
    return CategoryAction{G, [](const Rational&, int x) -> std::optional<int> { return x; },
                          [](const Rational&, int a) -> std::optional<int> { return a; }, {}};
}

}  // namespace pogcat
