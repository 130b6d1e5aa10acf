#include "qhc/coeff/ratcoeff.hpp"

#include "qhc/coeff/upoly.hpp"

#include <algorithm>
#include <optional>

namespace qhc {

namespace {

using QPoly = UPoly<Integer>;
using TQPoly = UPoly<QPoly>;  // outer variable t, inner q

TQPoly to_dense(const Laurent& p) {
    TQPoly r;
    if (p.is_zero()) return r;
    r.c.resize(p.max_te() + 1);
    for (auto& [k, c] : p.terms()) {
        int qe = MonoKey::qe(k), te = MonoKey::te(k);
        auto& inner = r.c[te].c;
        if (int(inner.size()) <= qe) inner.resize(qe + 1);
        inner[qe] = c;
    }
    for (auto& x : r.c) x.trim();
    r.trim();
    return r;
}

Laurent from_dense(const TQPoly& d) {
    std::vector<Laurent::Term> terms;
    for (size_t te = 0; te < d.c.size(); ++te)
        for (size_t qe = 0; qe < d.c[te].c.size(); ++qe)
            if (!d.c[te].c[qe].is_zero()) terms.emplace_back(MonoKey::pack(int(qe), int(te)), d.c[te].c[qe]);
    return Laurent::from_sorted(std::move(terms));
}

// Strip the monomial factor; returns the polynomial part.
Laurent demonomial(const Laurent& p, int& qe, int& te) {
    qe = p.min_qe();
    te = p.min_te();
    return p.shifted(-qe, -te);
}

// gcd of a Laurent polynomial with a polynomial free of monomial factors.
Laurent gcd_with_den(const Laurent& num, const Laurent& den) {
    if (den.is_one() || num.is_one()) return Laurent(1);
    int qe, te;
    Laurent p = demonomial(num, qe, te);
    return poly_gcd(p, den);
}

std::optional<Laurent> try_divexact(const Laurent& a, const Laurent& b) {
    try {
        return poly_divexact(a, b);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

void fix_sign(Laurent& num, Laurent& den) {
    if (den.leading().second.sign() < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b.is_zero() ? Laurent() : (b.leading().second.sign() < 0 ? -b : b);
    if (b.is_zero()) return a.leading().second.sign() < 0 ? -a : a;
    if (a.is_constant() || b.is_constant()) return Laurent(Integer::gcd(a.content(), b.content()));
    if (a == b) return a.leading().second.sign() < 0 ? -a : a;
    Laurent g = from_dense(gcd_r(to_dense(a), to_dense(b)));
    if (g.leading().second.sign() < 0) g = -g;
    return g;
}

Laurent poly_divexact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_one()) return a;
    if (b.is_constant()) {
        const Integer& c = b.terms()[0].second;
        for (auto& [k, v] : a.terms()) {
            Integer qq, rr;
            Integer::divmod(v, c, qq, rr);
            if (!rr.is_zero()) throw std::logic_error("inexact polynomial division");
        }
        return a.divexact(c);
    }
    if (a == b) return Laurent(1);
    return from_dense(divexact_r(to_dense(a), to_dense(b)));
}

RatCoeff RatCoeff::fraction(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw DivisionByZero();
    RatCoeff r;
    if (num.is_zero()) return r;
    int dq, dt;
    Laurent d = demonomial(den, dq, dt);
    Laurent n = num.shifted(-dq, -dt);
    if (d.is_constant()) {
        Integer c = d.terms()[0].second;
        Integer g = Integer::gcd(n.content(), c);
        if (c.sign() < 0) g = -g;
        r.num_ = n.divexact(g);
        r.den_ = Laurent(Integer::divexact(c, g));
        return r;
    }
    Laurent g = gcd_with_den(n, d);
    if (!g.is_one()) {
        n = poly_divexact(n.shifted(-n.min_qe(), -n.min_te()), g).shifted(n.min_qe(), n.min_te());
        d = poly_divexact(d, g);
    }
    fix_sign(n, d);
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

RatCoeff RatCoeff::operator-() const {
    RatCoeff r = *this;
    r.num_ = -r.num_;
    return r;
}

RatCoeff operator+(const RatCoeff& a, const RatCoeff& b) {
    if (a.is_laurent() && b.is_laurent()) return RatCoeff(a.num_ + b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatCoeff::fraction(a.num_ + b.num_, a.den_);
    if (a.is_laurent()) return RatCoeff::fraction(a.num_ * b.den_ + b.num_, b.den_);
    if (b.is_laurent()) return RatCoeff::fraction(a.num_ + b.num_ * a.den_, a.den_);
    Laurent g = poly_gcd(a.den_, b.den_);
    Laurent ad = poly_divexact(a.den_, g), bd = poly_divexact(b.den_, g);
    return RatCoeff::fraction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatCoeff operator-(const RatCoeff& a, const RatCoeff& b) { return a + (-b); }

RatCoeff operator*(const RatCoeff& a, const RatCoeff& b) {
    if (a.is_zero() || b.is_zero()) return RatCoeff();
    if (a.is_laurent() && b.is_laurent()) return RatCoeff(a.num_ * b.num_);
    // Cross-cancel: each input is already reduced.
    Laurent an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    auto cancel = [](Laurent& n, Laurent& d) {
        if (d.is_one()) return;
        Laurent g = gcd_with_den(n, d);
        if (g.is_one()) return;
        int qe = n.min_qe(), te = n.min_te();
        n = poly_divexact(n.shifted(-qe, -te), g).shifted(qe, te);
        d = poly_divexact(d, g);
    };
    cancel(an, bd);
    cancel(bn, ad);
    RatCoeff r;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    if (r.den_.is_constant()) return RatCoeff::fraction(r.num_, r.den_);
    fix_sign(r.num_, r.den_);
    return r;
}

RatCoeff RatCoeff::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return fraction(den_, num_);
}

RatCoeff operator/(const RatCoeff& a, const RatCoeff& b) { return a * b.inverse(); }

RatCoeff RatCoeff::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatCoeff r(1), b = *this;
    unsigned e = unsigned(n);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string RatCoeff::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.size() == 1 ? num_.str() : "(" + num_.str() + ")";
    std::string d = den_.size() == 1 ? den_.str() : "(" + den_.str() + ")";
    if (n.front() == '-') n = "(" + n + ")";
    return n + "/" + d;
}

RatCoeff coeff_arith(const RatCoeff& a, const RatCoeff& b, CoeffOp op) {
    switch (op) {
    case CoeffOp::Add: return a + b;
    case CoeffOp::Sub: return a - b;
    case CoeffOp::Mul: return a * b;
    case CoeffOp::Div: return a / b;
    }
    throw std::logic_error("bad op");
}

namespace {

Rational rat_pow(const Rational& x, int e) {
    Rational base = e < 0 ? Rational(1) / x : x;
    unsigned n = unsigned(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

Rational eval_laurent(const Laurent& p, const Rational& q0, const Rational& t0) {
    Rational s = 0;
    for (auto& [k, c] : p.terms()) {
        int qe = MonoKey::qe(k), te = MonoKey::te(k);
        if (qe < 0 && q0 == 0) throw EvalError("q");
        if (te < 0 && t0 == 0) throw EvalError("t");
        s += Rational(c.to_mpz()) * rat_pow(q0, qe) * rat_pow(t0, te);
    }
    return s;
}

Rational coeff_eval(const RatCoeff& a, const Rational& q0, const Rational& t0) {
    Rational n = eval_laurent(a.num(), q0, t0);
    Rational d = eval_laurent(a.den(), q0, t0);
    if (d == 0) {
        DenomProfile pr = denom_profile(a);
        if (pr.t2plus1_power > 0 && t0 * t0 + 1 == 0) throw EvalError("1+t^2");
        throw EvalError(pr.residual.str());
    }
    return n / d;
}

DenomProfile denom_profile(const RatCoeff& a) {
    DenomProfile p;
    p.q_power = std::max(0, -a.num().min_qe());
    p.t_power = std::max(0, -a.num().min_te());
    Laurent d = a.den();
    const Laurent f = Laurent(1) + Laurent::t(2);
    while (!d.is_constant()) {
        auto qd = try_divexact(d, f);
        if (!qd) break;
        d = std::move(*qd);
        ++p.t2plus1_power;
    }
    p.residual = d;
    return p;
}

}  // namespace qhc
