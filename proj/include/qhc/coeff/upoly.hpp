#pragma once

#include "qhc/coeff/integer.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qhc {

// Dense univariate polynomial over a gcd domain R. Used recursively
// (Z[q][t]) for gcd computations only; c[i] is the coefficient of x^i and
// the top coefficient is nonzero.
template <class R>
struct UPoly {
    std::vector<R> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const R& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && is_zero_r(c.back())) c.pop_back();
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

inline bool is_zero_r(const Integer& a) { return a.is_zero(); }
template <class R>
bool is_zero_r(const UPoly<R>& a) { return a.is_zero(); }

inline int sign_r(const Integer& a) { return a.sign(); }
template <class R>
int sign_r(const UPoly<R>& a) { return a.is_zero() ? 0 : sign_r(a.lc()); }

inline Integer one_r(const Integer*) { return Integer(1); }
template <class R>
UPoly<R> one_r(const UPoly<R>*) { return UPoly<R>{{one_r(static_cast<const R*>(nullptr))}}; }

inline Integer neg_r(const Integer& a) { return -a; }
template <class R>
UPoly<R> neg_r(const UPoly<R>& a) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = neg_r(x);
    return r;
}

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
        else r.c[i] = i < a.c.size() ? a.c[i] : b.c[i];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) {
    return a + neg_r(b);
}

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero_r(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (is_zero_r(b.c[j])) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> scale(const UPoly<R>& a, const R& s) {
    UPoly<R> r;
    r.c.reserve(a.c.size());
    for (auto& x : a.c) r.c.push_back(x * s);
    r.trim();
    return r;
}

inline Integer gcd_r(const Integer& a, const Integer& b) { return Integer::gcd(a, b); }
inline Integer divexact_r(const Integer& a, const Integer& b) {
    Integer q, r;
    Integer::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact integer division");
    return q;
}

template <class R>
UPoly<R> divexact_r(const UPoly<R>& a, const UPoly<R>& b);
template <class R>
UPoly<R> gcd_r(const UPoly<R>& a, const UPoly<R>& b);

template <class R>
UPoly<R> scale_div(const UPoly<R>& a, const R& s) {
    UPoly<R> r;
    r.c.reserve(a.c.size());
    for (auto& x : a.c) r.c.push_back(divexact_r(x, s));
    return r;
}

template <class R>
R content(const UPoly<R>& a) {
    R g{};
    for (auto& x : a.c) {
        g = gcd_r(g, x);
    }
    return g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
template <class R>
UPoly<R> prem(UPoly<R> a, const UPoly<R>& b) {
    const R& l = b.lc();
    int db = b.deg();
    while (!a.is_zero() && a.deg() >= db) {
        R la = a.lc();
        int shift = a.deg() - db;
        for (auto& x : a.c) x = x * l;
        for (int i = 0; i <= db; ++i) a.c[i + shift] = a.c[i + shift] - la * b.c[i];
        a.trim();
    }
    return a;
}

// Exact quotient a / b; throws if b does not divide a.
template <class R>
UPoly<R> divexact_r(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly<R> q, r = a;
    if (a.is_zero()) return q;
    if (a.deg() < b.deg()) throw std::logic_error("inexact polynomial division");
    q.c.resize(a.deg() - b.deg() + 1);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        R f = divexact_r(r.lc(), b.lc());
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] = r.c[i + shift] - f * b.c[i];
        q.c[shift] = std::move(f);
        r.trim();
    }
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    q.trim();
    return q;
}

template <class R>
UPoly<R> primitive(const UPoly<R>& a) {
    if (a.is_zero()) return a;
    R g = content(a);
    if (sign_r(a.lc()) < 0) g = neg_r(g);
    return scale_div(a, g);
}

// gcd normalised so the leading coefficient is positive (recursively).
template <class R>
UPoly<R> gcd_r(const UPoly<R>& a0, const UPoly<R>& b0) {
    if (a0.is_zero()) return sign_r(b0) < 0 ? neg_r(b0) : b0;
    if (b0.is_zero()) return sign_r(a0) < 0 ? neg_r(a0) : a0;
    R g = gcd_r(content(a0), content(b0));
    UPoly<R> a = primitive(a0), b = primitive(b0);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.deg() == 0) {
            a = one_r(static_cast<const UPoly<R>*>(nullptr));
            break;
        }
        UPoly<R> r = prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    UPoly<R> res = scale(primitive(a), g);
    if (sign_r(res) < 0) res = neg_r(res);
    return res;
}

}  // namespace qhc
