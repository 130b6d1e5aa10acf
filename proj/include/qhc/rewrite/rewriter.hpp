#pragma once

#include "qhc/rewrite/spec.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qhc {

struct NonTermination : std::runtime_error {
    Word word;
    NonTermination(const std::string& what, Word w) : std::runtime_error(what), word(std::move(w)) {}
};

enum class Strategy { Leftmost, Rightmost };

// Normal forms over a coefficient type K. The rules of an AlgebraSpec are
// specialized once through `conv`.
//
// The fast engine builds NF(word) right to left with memoized left
// multiplication by a letter on normal words; it relies on every lhs having
// length at most two. The reference engine is a plain max-first reducer with
// a step budget and a strict-descent guard.
template <class K>
class Rewriter {
public:
    using Poly = NcPolyT<K>;
    using Terms = std::vector<std::pair<Word, K>>;

    Rewriter(const AlgebraSpec& spec, const std::function<K(const RatCoeff&)>& conv)
        : spec_(spec), alpha_(spec.alphabet()) {
        rule1_.assign(alpha_->size(), -1);
        rule2_.assign(alpha_->size() * alpha_->size(), -1);
        for (auto& r : spec.rules()) {
            Terms rhs;
            for (auto& [w, c] : r.rhs.terms()) {
                K v = conv(c);
                if (!coeff_is_zero(v)) rhs.emplace_back(w, std::move(v));
            }
            int idx = int(rhs_.size());
            rhs_.push_back(std::move(rhs));
            lhs_.push_back(r.lhs);
            if (r.lhs.size() == 1) rule1_[r.lhs[0]] = idx;
            else if (r.lhs.size() == 2) rule2_[r.lhs[0] * alpha_->size() + r.lhs[1]] = idx;
            else throw std::logic_error("lhs longer than two letters");
        }
    }

    const AlgebraSpec& spec() const { return spec_; }
    const AlphaPtr& alphabet() const { return alpha_; }

    int rule_at(const Word& w, size_t pos, size_t len) const {
        if (len == 1) return rule1_[w[pos]];
        return rule2_[w[pos] * alpha_->size() + w[pos + 1]];
    }

    bool is_normal(const Word& w) const {
        for (size_t i = 0; i < w.size(); ++i) {
            if (rule1_[w[i]] >= 0) return false;
            if (i + 1 < w.size() && rule2_[w[i] * alpha_->size() + w[i + 1]] >= 0) return false;
        }
        return true;
    }

    // (position, rule index) of the leftmost or rightmost redex.
    std::optional<std::pair<size_t, int>> find_redex(const Word& w, Strategy s) const {
        std::optional<std::pair<size_t, int>> best;
        for (size_t i = 0; i < w.size(); ++i) {
            int r = rule1_[w[i]];
            if (r < 0 && i + 1 < w.size()) r = rule2_[w[i] * alpha_->size() + w[i + 1]];
            if (r < 0) continue;
            best = {i, r};
            if (s == Strategy::Leftmost) return best;
        }
        return best;
    }

    const Terms& rule_rhs(int idx) const { return rhs_[idx]; }
    const Word& rule_lhs(int idx) const { return lhs_[idx]; }

    // NF(x * w) for a normal word w.
    std::shared_ptr<const Terms> mul_letter(Letter x, const Word& w) const {
        Word key;
        key.reserve(w.size() + 1);
        key.push_back(x);
        key += w;
        {
            std::shared_lock lk(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        Accum<K> acc;
        int r1 = rule1_[x];
        if (r1 >= 0) {
            for (auto& [u, c] : rhs_[r1]) fold(u, w, c, acc);
        } else if (!w.empty() && rule2_[x * alpha_->size() + w[0]] >= 0) {
            Word tail = w.substr(1);
            for (auto& [u, c] : rhs_[rule2_[x * alpha_->size() + w[0]]]) fold(u, tail, c, acc);
        } else {
            acc.add(key, K(1));
        }
        Poly p = acc.finish(alpha_);
        auto out = std::make_shared<Terms>(p.terms().begin(), p.terms().end());
        std::unique_lock lk(mu_);
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

    // acc += c * NF(u * w) for a normal word w.
    void fold(const Word& u, const Word& w, const K& c, Accum<K>& acc) const {
        if (u.empty()) {
            acc.add(w, c);
            return;
        }
        Terms cur{{w, c}};
        for (size_t i = u.size(); i-- > 1;) {
            Accum<K> next;
            for (auto& [v, a] : cur)
                for (auto& [v2, b] : *mul_letter(u[i], v)) next.add(v2, a * b);
            Poly p = next.finish(alpha_);
            cur.assign(p.terms().begin(), p.terms().end());
        }
        for (auto& [v, a] : cur)
            for (auto& [v2, b] : *mul_letter(u[0], v)) acc.add(v2, a * b);
    }

    Poly nf_word(const Word& w) const {
        Accum<K> acc;
        fold(w, Word(), K(1), acc);
        return acc.finish(alpha_);
    }

    Poly normal_form(const Poly& p) const {
        Poly::check_same(alpha_, p.alphabet());
        Accum<K> acc;
        for (auto& [w, c] : p.terms()) fold(w, Word(), c, acc);
        return acc.finish(alpha_);
    }

    // NF(a * b) for normal a, b.
    Poly mul(const Poly& a, const Poly& b) const {
        Poly::check_same(alpha_, a.alphabet());
        Poly::check_same(alpha_, b.alphabet());
        Accum<K> acc;
        for (auto& [u, ca] : a.terms())
            for (auto& [v, cb] : b.terms()) fold(u, v, ca * cb, acc);
        return acc.finish(alpha_);
    }

    // Exhaustive reduction choosing the largest remaining word each step and
    // its leftmost or rightmost redex. `first` optionally forces the first
    // rewrite to a given redex (used by straighten_trace).
    Poly reduce_reference(const Poly& p, Strategy s, size_t budget = 1000000,
                          std::optional<std::pair<size_t, int>> first = std::nullopt) const {
        auto cmp = [this](const Word& a, const Word& b) { return spec_.compare(a, b) < 0; };
        std::map<Word, K, decltype(cmp)> work(cmp);
        auto add = [&](const Word& w, const K& c) {
            if (coeff_is_zero(c)) return;
            auto [it, fresh] = work.try_emplace(w, c);
            if (fresh) return;
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) work.erase(it);
        };
        for (auto& [w, c] : p.terms()) add(w, c);
        Accum<K> done;
        size_t steps = 0;
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Word w = it->first;
            K c = it->second;
            work.erase(it);
            auto red = first ? first : find_redex(w, s);
            first.reset();
            if (!red) {
                done.add(w, c);
                continue;
            }
            if (++steps > budget)
                throw NonTermination(spec_.id() + ": step budget exceeded at " + spec_.str(w), w);
            auto [pos, ri] = *red;
            size_t len = lhs_[ri].size();
            Word pre = w.substr(0, pos), post = w.substr(pos + len);
            for (auto& [u, a] : rhs_[ri]) {
                Word nw = pre + u + post;
                if (spec_.compare(nw, w) >= 0)
                    throw NonTermination(spec_.id() + ": rewriting " + spec_.str(w) + " does not descend (" +
                                             spec_.str(nw) + ")",
                                         w);
                add(nw, c * a);
            }
        }
        return done.finish(alpha_);
    }

    size_t cache_size() const {
        std::shared_lock lk(mu_);
        return cache_.size();
    }
    void clear_cache() const {
        std::unique_lock lk(mu_);
        cache_.clear();
    }

private:
    AlgebraSpec spec_;
    AlphaPtr alpha_;
    std::vector<Terms> rhs_;
    std::vector<Word> lhs_;
    std::vector<int> rule1_, rule2_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Word, std::shared_ptr<const Terms>> cache_;
};

using RatRewriter = Rewriter<RatCoeff>;

inline RatCoeff identity_coeff(const RatCoeff& c) { return c; }

}  // namespace qhc
