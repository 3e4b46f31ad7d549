#pragma once

// Quotients C/A of curved categories by a full subcategory A.
//
// A generator of C/A(X, Y) is a word x^0 | x^1 | ... | x^p of generators of
// C passing through objects of A at each bar: x^0 : X -> A_1, ...,
// x^p : A_p -> Y. Its degree is sum |x^k| - p and its weight sum wt(x^k).
//
// mu^d of words concatenates their letters and applies mu_C to one block of
// consecutive letters that swallows every junction between input words;
// for d = 1 any block may be chosen, including an empty one at an interior
// bar (which inserts mu0 of that object of A). The sign is
// (-1)^{sum (|x| - 1)} over the letters before the block.
//
// The basis of each hom lists words with at most `max_bars` bars. Outputs
// may be longer (mu0 insertions add a bar); such words are kept and counted
// in overflow_words() rather than dropped.

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pogcat/cainf.hpp"

namespace pogcat {

class QuotientCategory : public CAinfCategory {
public:
    QuotientCategory(const CAinfCategory& base, std::vector<int> subcategory, int max_bars)
        : base_(base), max_bars_(max_bars) {
        coeff = base.coeff;
        cutoff = base.cutoff;
        epsilon = base.epsilon;
        if (max_bars < 0) throw std::invalid_argument("quotient: max_bars must be >= 0");
        for (int a : subcategory) in_A_.insert(a);
        for (int x : base.objects())
            for (int y : base.objects()) homs_[{x, y}];
        std::vector<int> word;
        std::function<void(int, int)> rec = [&](int start, int cur) {
            for (int g : base.out_gens(cur)) {
                word.push_back(g);
                int nxt = base.gen(g).tgt;
                Gen probe = make_gen(word);
                if (probe.weight < cutoff) {
                    homs_[{start, nxt}].push_back(intern(word));
                    if (static_cast<int>(word.size()) <= max_bars && in_A_.count(nxt)) rec(start, nxt);
                }
                word.pop_back();
            }
        };
        for (int x : base.objects()) rec(x, x);
    }

    const CAinfCategory& base() const { return base_; }
    bool in_subcategory(int x) const { return in_A_.count(x) > 0; }
    int max_bars() const { return max_bars_; }
    const std::vector<int>& letters(int g) const { return words_.at(g); }
    size_t overflow_words() const { return overflow_; }

    /// Id of a word (interned on first use).
    int intern(const std::vector<int>& word) const {
        auto it = ids_.find(word);
        if (it != ids_.end()) return it->second;
        for (size_t k = 0; k + 1 < word.size(); ++k) {
            int a = base_.gen(word[k]).tgt;
            if (a != base_.gen(word[k + 1]).src || !in_A_.count(a)) throw CategoryError("not a word of the quotient");
        }
        gens_.push_back(make_gen(word));
        words_.push_back(word);
        int id = static_cast<int>(gens_.size()) - 1;
        ids_[word] = id;
        if (static_cast<int>(word.size()) > max_bars_ + 1) ++overflow_;
        return id;
    }

    std::vector<int> objects() const override { return base_.objects(); }
    std::string object_name(int x) const override { return base_.object_name(x); }
    const std::vector<int>& hom(int x, int y) const override { return homs_.at({x, y}); }
    const Gen& gen(int g) const override { return gens_.at(g); }

    Element unit(int x) const override { return lift(base_.unit(x), {}, {}); }
    Element mu0(int x) const override { return lift(base_.mu0(x), {}, {}); }

    Element mu(const std::vector<int>& gens) const override {
        auto it = cache_.find(gens);
        if (it != cache_.end()) return it->second;
        std::vector<int> s;
        size_t first_end = 0, last_start = 0;
        for (size_t k = 0; k < gens.size(); ++k) {
            if (k + 1 == gens.size()) last_start = s.size();
            const auto& w = words_.at(gens[k]);
            s.insert(s.end(), w.begin(), w.end());
            if (k == 0) first_end = s.size();
        }
        const size_t n = s.size();
        Element out;
        int64_t shifted = 0;
        for (size_t a = 0; a < n; ++a) {
            if (a > 0) shifted += base_.gen(s[a - 1]).degree - 1;
            if (gens.size() > 1 && a >= first_end) break;
            std::vector<int> prefix(s.begin(), s.begin() + a);
            if (gens.size() == 1 && a > 0) {
                std::vector<int> suffix(s.begin() + a, s.end());
                add_into(out, lift(base_.mu0(base_.gen(s[a]).src), prefix, suffix), sign(shifted));
            }
            for (size_t b = a + 1; b <= n; ++b) {
                if (gens.size() > 1 && b <= last_start) continue;
                std::vector<int> block(s.begin() + a, s.begin() + b);
                Element m = base_.mu(block);
                if (m.empty()) continue;
                add_into(out, lift(m, prefix, std::vector<int>(s.begin() + b, s.end())), sign(shifted));
            }
        }
        cache_[gens] = out;
        return out;
    }

    /// prefix | e | suffix for each term of a base element.
    Element lift(const Element& e, const std::vector<int>& prefix, const std::vector<int>& suffix) const {
        Element out;
        for (auto& [t, c] : e) {
            std::vector<int> w = prefix;
            w.push_back(t.first);
            w.insert(w.end(), suffix.begin(), suffix.end());
            Gen probe = make_gen(w);
            if (probe.weight + t.second >= cutoff) continue;
            add_term(out, {intern(w), t.second}, c);
        }
        return out;
    }

private:
    Gen make_gen(const std::vector<int>& word) const {
        Gen g;
        g.src = base_.gen(word.front()).src;
        g.tgt = base_.gen(word.back()).tgt;
        g.degree = -static_cast<int>(word.size()) + 1;
        for (size_t k = 0; k < word.size(); ++k) {
            const Gen& x = base_.gen(word[k]);
            g.degree += x.degree;
            g.weight += x.weight;
            g.name += (k ? "|" : "") + x.name;
        }
        return g;
    }

    const CAinfCategory& base_;
    int max_bars_;
    std::set<int> in_A_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    mutable std::deque<Gen> gens_;
    mutable std::deque<std::vector<int>> words_;
    mutable std::map<std::vector<int>, int> ids_;
    mutable std::map<std::vector<int>, Element> cache_;
    mutable size_t overflow_ = 0;
};

/// C -> C/A: a generator goes to the one-letter word.
class CanonicalQuotientFunctor : public CAinfFunctor {
public:
    CanonicalQuotientFunctor(const CAinfCategory& C, const QuotientCategory& Q) : C_(C), Q_(Q) {}
    const CAinfCategory& source() const override { return C_; }
    const CAinfCategory& target() const override { return Q_; }
    int on_object(int x) const override { return x; }
    Element phi(const std::vector<int>& gens) const override {
        if (gens.size() != 1) return {};
        return Q_.lift(C_.generator(gens[0]), {}, {});
    }
    Element phi0(int) const override { return {}; }

private:
    const CAinfCategory& C_;
    const QuotientCategory& Q_;
};

/// The functor C/A -> D/B induced by a strict functor Phi : C -> D sending
/// A into B: the letters of the input words are cut into consecutive
/// nonempty blocks, never at a junction between words, and
///   Phi~(w_0, .., w_{d-1}) = sum Phi(block_1) | ... | Phi(block_r).
class InducedQuotientFunctor : public CAinfFunctor {
public:
    InducedQuotientFunctor(const CAinfFunctor& phi, const QuotientCategory& CA, const QuotientCategory& DB)
        : phi_(phi), CA_(CA), DB_(DB) {
        for (int x : CA.objects())
            if (CA.in_subcategory(x) && !DB.in_subcategory(phi.on_object(x)))
                throw CategoryError("induced functor: Phi does not send A into B");
        for (int x : phi.source().objects())
            if (!phi.phi0(x).empty()) throw CategoryError("induced functor: Phi must be strict");
    }
    const CAinfCategory& source() const override { return CA_; }
    const CAinfCategory& target() const override { return DB_; }
    int on_object(int x) const override { return phi_.on_object(x); }
    Element phi0(int) const override { return {}; }

    Element phi(const std::vector<int>& gens) const override {
        std::vector<int> s;
        std::set<size_t> junction;  // positions after which a cut is forbidden
        for (size_t k = 0; k < gens.size(); ++k) {
            const auto& w = CA_.letters(gens[k]);
            s.insert(s.end(), w.begin(), w.end());
            if (k + 1 < gens.size()) junction.insert(s.size());
        }
        Element out;
        std::vector<Element> blocks;
        std::function<void(size_t)> rec = [&](size_t pos) {
            if (pos == s.size()) {
                emit(blocks, out);
                return;
            }
            for (size_t b = pos + 1; b <= s.size(); ++b) {
                if (b < s.size() && junction.count(b)) continue;
                Element e = phi_.phi(std::vector<int>(s.begin() + pos, s.begin() + b));
                if (e.empty()) continue;
                blocks.push_back(std::move(e));
                rec(b);
                blocks.pop_back();
            }
        };
        rec(0);
        return out;
    }

private:
    // tensor product of the block images, as words of D/B
    void emit(const std::vector<Element>& blocks, Element& out) const {
        const CAinfCategory& D = phi_.target();
        std::vector<int> word;
        std::function<void(size_t, int64_t, Rational)> rec = [&](size_t i, int64_t c, Rational shift) {
            if (i == blocks.size()) {
                Element one;
                one[{word.back(), shift}] = c;
                std::vector<int> prefix(word.begin(), word.end() - 1);
                DB_.add_into(out, DB_.lift(one, prefix, {}));
                return;
            }
            for (auto& [t, k] : blocks[i]) {
                if (i > 0 && D.gen(word.back()).tgt != D.gen(t.first).src) continue;
                word.push_back(t.first);
                rec(i + 1, detail::checked_mul(c, k), shift + t.second);
                word.pop_back();
            }
        };
        rec(0, 1, Rational(0));
    }

    const CAinfFunctor& phi_;
    const QuotientCategory& CA_;
    const QuotientCategory& DB_;
};

}  // namespace pogcat
