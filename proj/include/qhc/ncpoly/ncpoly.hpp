#pragma once

#include "qhc/coeff/fp.hpp"
#include "qhc/coeff/ratcoeff.hpp"
#include "qhc/ncpoly/alphabet.hpp"

#include <map>
#include <unordered_map>
#include <utility>

namespace qhc {

// Word order used for storage: length first, then letter precedence.
struct GradedLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool coeff_is_zero(const RatCoeff& c) { return c.is_zero(); }
inline bool coeff_is_zero(Fp c) { return c.is_zero(); }
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }

// Sign and printable magnitude of a coefficient; body "1" is omitted before a
// word.
inline std::pair<bool, std::string> coeff_split(const RatCoeff& c) {
    if (c.is_laurent() && c.num().size() == 1) {
        const Integer& v = c.num().terms()[0].second;
        if (v.sign() < 0) return {true, (-c).str()};
        return {false, c.str()};
    }
    if (c.is_laurent()) return {false, "(" + c.str() + ")"};
    return {false, c.str()};
}
inline std::pair<bool, std::string> coeff_split(Fp c) { return {false, c.str()}; }
inline std::pair<bool, std::string> coeff_split(const Rational& c) {
    if (sgn(c) < 0) return {true, Rational(-c).get_str()};
    return {false, c.get_str()};
}

template <class K>
class NcPolyT {
public:
    using Map = std::map<Word, K, GradedLex>;

    NcPolyT() = default;
    explicit NcPolyT(AlphaPtr a) : alpha_(std::move(a)) {}
    static NcPolyT scalar(AlphaPtr a, const K& c) { return monomial(std::move(a), Word(), c); }
    static NcPolyT monomial(AlphaPtr a, const Word& w, const K& c = K(1)) {
        NcPolyT p(std::move(a));
        if (!coeff_is_zero(c)) p.terms_.emplace(w, c);
        return p;
    }
    static NcPolyT letter(AlphaPtr a, const std::string& name) {
        Word w(1, a->at(name));
        return monomial(std::move(a), w);
    }

    const AlphaPtr& alphabet() const { return alpha_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Word& w, const K& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (fresh) return;
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    NcPolyT& operator+=(const NcPolyT& o) {
        adopt(o);
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPolyT& operator-=(const NcPolyT& o) {
        adopt(o);
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NcPolyT operator+(NcPolyT a, const NcPolyT& b) { return a += b; }
    friend NcPolyT operator-(NcPolyT a, const NcPolyT& b) { return a -= b; }
    NcPolyT operator-() const {
        NcPolyT r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    NcPolyT scaled(const K& s) const {
        NcPolyT r(alpha_);
        if (coeff_is_zero(s)) return r;
        for (auto& [w, c] : terms_) {
            K v = c * s;
            if (!coeff_is_zero(v)) r.terms_.emplace_hint(r.terms_.end(), w, std::move(v));
        }
        return r;
    }
    friend NcPolyT operator*(const K& s, const NcPolyT& p) { return p.scaled(s); }

    // Free-algebra product: concatenation, no reduction.
    friend NcPolyT operator*(const NcPolyT& a, const NcPolyT& b) {
        NcPolyT r(a.alpha_);
        r.adopt(b);
        std::unordered_map<Word, K> acc;
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) {
                K v = ca * cb;
                auto [it, fresh] = acc.try_emplace(wa + wb, v);
                if (!fresh) it->second = it->second + v;
            }
        for (auto& [w, c] : acc)
            if (!coeff_is_zero(c)) r.terms_.emplace(w, std::move(c));
        return r;
    }

    friend bool operator==(const NcPolyT& a, const NcPolyT& b) {
        if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
        check_same(a.alpha_, b.alpha_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPolyT& a, const NcPolyT& b) { return !(a == b); }

    struct Grading {
        enum Kind { Any, Homogeneous, Mixed } kind;
        Bideg deg;
    };
    Grading bidegree_of() const {
        if (terms_.empty()) return {Grading::Any, {}};
        Bideg d = alpha_->degree(terms_.begin()->first);
        for (auto& [w, c] : terms_)
            if (!(alpha_->degree(w) == d)) return {Grading::Mixed, {}};
        return {Grading::Homogeneous, d};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms_) {
            auto [neg, body] = coeff_split(c);
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            if (w.empty()) {
                s += body;
            } else {
                if (body != "1") s += body + "*";
                s += alpha_->str(w);
            }
        }
        return s;
    }

    template <class F>
    auto map_coeffs(F f) const -> NcPolyT<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        NcPolyT<K2> r(alpha_);
        for (auto& [w, c] : terms_) r.add_term(w, f(c));
        return r;
    }

    static void check_same(const AlphaPtr& a, const AlphaPtr& b) {
        if (a && b && a != b && a->id() != b->id()) throw AlgebraMismatch(a->id(), b->id());
    }

    // Moves sorted terms in directly; used by accumulators.
    static NcPolyT from_map(AlphaPtr a, Map m) {
        NcPolyT p(std::move(a));
        p.terms_ = std::move(m);
        return p;
    }

private:
    void adopt(const NcPolyT& o) {
        check_same(alpha_, o.alpha_);
        if (!alpha_) alpha_ = o.alpha_;
    }

    AlphaPtr alpha_;
    Map terms_;
};

using NcPoly = NcPolyT<RatCoeff>;

// Hash-map accumulator for hot loops; converted to sorted storage once.
template <class K>
class Accum {
public:
    void add(const Word& w, const K& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = m_.try_emplace(w, c);
        if (!fresh) it->second = it->second + c;
    }
    void add(const NcPolyT<K>& p, const K& s) {
        for (auto& [w, c] : p.terms()) add(w, c * s);
    }
    void add(const NcPolyT<K>& p) {
        for (auto& [w, c] : p.terms()) add(w, c);
    }
    NcPolyT<K> finish(AlphaPtr a) {
        typename NcPolyT<K>::Map out;
        for (auto& [w, c] : m_)
            if (!coeff_is_zero(c)) out.emplace(w, std::move(c));
        m_.clear();
        return NcPolyT<K>::from_map(std::move(a), std::move(out));
    }
    bool empty() const { return m_.empty(); }

private:
    std::unordered_map<Word, K> m_;
};

}  // namespace qhc
