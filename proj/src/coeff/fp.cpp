#include "qhc/coeff/fp.hpp"

namespace qhc {

Fp Fp::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Fp r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        b *= b;
    }
    return r;
}

Fp Fp::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return pow(int64_t(P) - 2);
}

Fp to_fp(const Integer& c) { return Fp::raw(c.mod(Fp::P)); }

Fp eval_fp(const Laurent& p, Fp q0, Fp t0) {
    Fp s;
    for (auto& [k, c] : p.terms()) {
        int qe = MonoKey::qe(k), te = MonoKey::te(k);
        if (qe < 0 && q0.is_zero()) throw EvalError("q");
        if (te < 0 && t0.is_zero()) throw EvalError("t");
        s += to_fp(c) * q0.pow(qe) * t0.pow(te);
    }
    return s;
}

Fp eval_fp(const RatCoeff& c, Fp q0, Fp t0) {
    Fp n = eval_fp(c.num(), q0, t0);
    if (c.is_laurent()) return n;
    Fp d = eval_fp(c.den(), q0, t0);
    if (d.is_zero()) throw EvalError(denom_profile(c).residual.str());
    return n / d;
}

}  // namespace qhc
