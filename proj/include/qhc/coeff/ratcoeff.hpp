#pragma once

#include "qhc/coeff/laurent.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qhc {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised when a specialization hits a vanishing denominator. `factor` is one
// of "q", "t", "1+t^2" or the printed residual factor.
struct EvalError : std::domain_error {
    std::string factor;
    explicit EvalError(std::string f)
        : std::domain_error("denominator vanishes at the given point (factor " + f + ")"), factor(std::move(f)) {}
};

struct DenomProfile {
    int q_power = 0;
    int t_power = 0;
    int t2plus1_power = 0;
    Laurent residual{1};
};

// Element of Q(q,t) held as num/den with num a Laurent polynomial and den a
// polynomial with no monomial factor, coprime to num, and with positive
// leading coefficient (graded-lex, q < t).
class RatCoeff {
public:
    RatCoeff() = default;
    RatCoeff(int64_t c) : num_(c) {}  // NOLINT
    RatCoeff(const Integer& c) : num_(c) {}  // NOLINT
    RatCoeff(Laurent n) : num_(std::move(n)) {}  // NOLINT
    // Builds num/den and canonicalizes.
    static RatCoeff fraction(const Laurent& num, const Laurent& den);
    static RatCoeff q(int e = 1) { return RatCoeff(Laurent::q(e)); }
    static RatCoeff t(int e = 1) { return RatCoeff(Laurent::t(e)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatCoeff operator-() const;
    friend RatCoeff operator+(const RatCoeff& a, const RatCoeff& b);
    friend RatCoeff operator-(const RatCoeff& a, const RatCoeff& b);
    friend RatCoeff operator*(const RatCoeff& a, const RatCoeff& b);
    friend RatCoeff operator/(const RatCoeff& a, const RatCoeff& b);
    RatCoeff& operator+=(const RatCoeff& o) { return *this = *this + o; }
    RatCoeff& operator-=(const RatCoeff& o) { return *this = *this - o; }
    RatCoeff& operator*=(const RatCoeff& o) { return *this = *this * o; }
    RatCoeff inverse() const;
    RatCoeff pow(int n) const;

    friend bool operator==(const RatCoeff& a, const RatCoeff& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatCoeff& a, const RatCoeff& b) { return !(a == b); }
    size_t hash() const { return num_.hash() * 31 + den_.hash(); }

    // "num" when den = 1, else "(num)/(den)"; parses back to the same value.
    std::string str() const;

    // Re-derives the canonical form from scratch; used to check idempotence.
    RatCoeff recanonicalized() const { return fraction(num_, den_); }

private:
    Laurent num_;
    Laurent den_{1};
};

enum class CoeffOp { Add, Sub, Mul, Div };
RatCoeff coeff_arith(const RatCoeff& a, const RatCoeff& b, CoeffOp op);

using Rational = mpq_class;
Rational coeff_eval(const RatCoeff& a, const Rational& q0, const Rational& t0);
Rational eval_laurent(const Laurent& p, const Rational& q0, const Rational& t0);
DenomProfile denom_profile(const RatCoeff& a);

// Polynomial gcd in Z[q,t]; inputs must have nonnegative exponents.
Laurent poly_gcd(const Laurent& a, const Laurent& b);
// Exact quotient in Z[q,t]; throws if not exact.
Laurent poly_divexact(const Laurent& a, const Laurent& b);

}  // namespace qhc

template <>
struct std::hash<qhc::RatCoeff> {
    size_t operator()(const qhc::RatCoeff& c) const { return c.hash(); }
};
