#include "doctest.h"
#include "gen.hpp"

#include "qhc/coeff/fp.hpp"
#include "qhc/coeff/parse.hpp"
#include "qhc/coeff/upoly.hpp"

using namespace qhc;

namespace {

RatCoeff C(const char* s) { return parse_coeff(s); }

// Oracle: evaluate a coefficient expression string at a rational point with
// plain mpq arithmetic, bypassing RatCoeff entirely.
Rational horner_q(const Rational& q0, int e) {
    Rational r = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= q0;
    return e < 0 ? Rational(1 / r) : r;
}

}  // namespace

TEST_CASE("integer overflow promotes to mpz and demotes back") {
    Integer a(INT64_MAX);
    Integer b = a + Integer(1);
    CHECK_FALSE(b.is_small());
    CHECK((b - Integer(1)).is_small());
    CHECK(b - Integer(1) == a);
    Integer m = a * a;
    CHECK(Integer::divexact(m, a) == a);
    CHECK((-Integer(INT64_MIN)).str() == "9223372036854775808");
    CHECK(Integer::gcd(Integer(INT64_MIN), Integer(6)) == Integer(2));
    CHECK(Integer(-7).mod(5) == 3u);
    CHECK(b.mod(Fp::P) == uint32_t((uint64_t(INT64_MAX) + 1) % Fp::P));
}

TEST_CASE("laurent arithmetic") {
    Laurent q = Laurent::q(), t = Laurent::t();
    Laurent x = q * q.shifted(-3, 0);
    CHECK(x == Laurent::q(-1));
    CHECK((q + t - q) == t);
    CHECK((q - q).is_zero());
    CHECK((Laurent(1) + t).pow(2) == Laurent(1) + Laurent(2) * t + t * t);
    CHECK((q.shifted(-5, 2)).str() == "q^-4*t^2");
    CHECK((Laurent(-3) * q + t.pow(2)).str() == "-3*q + t^2");
}

TEST_CASE("multivariate gcd") {
    Laurent q = Laurent::q(), t = Laurent::t(), one(1);
    Laurent a = (q - one) * (t * t + one) * (q + t);
    Laurent b = (q + t) * (q * q - one);
    Laurent g = poly_gcd(a, b);
    CHECK(g == (q - one) * (q + t));
    CHECK(poly_divexact(a, g) == t * t + one);
    CHECK_THROWS_AS(poly_divexact(a, q * q + one), std::logic_error);
    CHECK(poly_gcd(Laurent(6) * q, Laurent(4)) == Laurent(2));
}

TEST_CASE("coeff_arith examples") {
    // t - t^-1 written over t, times 1/(t^2-1)
    RatCoeff a = RatCoeff::fraction(Laurent::t(2) - Laurent(1), Laurent::t());
    CHECK(a == C("t - t^-1"));
    RatCoeff b = RatCoeff::fraction(Laurent(1), Laurent::t(2) - Laurent(1));
    CHECK(coeff_arith(a, b, CoeffOp::Mul) == RatCoeff::t(-1));

    RatCoeff c = C("1/(1+t^2)"), d = C("t^2/(1+t^2)");
    CHECK(coeff_arith(c, d, CoeffOp::Add) == RatCoeff(1));

    RatCoeff e = coeff_arith(C("q^-2 - 1"), RatCoeff::q(2), CoeffOp::Mul);
    // oracle: compare at several rational points against direct substitution
    for (int k = 2; k < 6; ++k) {
        Rational q0(k, 3);
        q0.canonicalize();
        CHECK(coeff_eval(e, q0, 7) == 1 - q0 * q0);
    }
    CHECK(e == RatCoeff(Laurent(1) - Laurent::q(2)));
    CHECK(e.str() == "1 - q^2");

    CHECK_THROWS_AS(coeff_arith(RatCoeff(1), RatCoeff(), CoeffOp::Div), DivisionByZero);
    CHECK_THROWS_AS(C("1/(q-q)"), ParseError);
}

TEST_CASE("coeff_eval examples") {
    Rational q0 = 2, t0 = 3;
    Rational expect = horner_q(q0, -2) - 1;  // substitute directly
    CHECK(expect == Rational(-3, 4));
    CHECK(coeff_eval(C("q^-2 - 1"), q0, t0) == Rational(-3, 4));
    CHECK(coeff_eval(C("1/(1+t^2)"), 2, 1) == Rational(1, 2));
    CHECK(coeff_eval(RatCoeff(1), 17, Rational(-5, 3)) == 1);

    try {
        coeff_eval(C("1/(q-1)"), 1, 5);
        FAIL("expected an evaluation error");
    } catch (const EvalError& e) {
        CHECK(e.factor == "-1 + q");
    }
    try {
        coeff_eval(C("q^-1"), 0, 5);
        FAIL("expected an evaluation error");
    } catch (const EvalError& e) {
        CHECK(e.factor == "q");
    }
}

TEST_CASE("denom_profile examples") {
    auto p = denom_profile(C("1/(q^2*t*(1+t^2))"));
    CHECK(p.q_power == 2);
    CHECK(p.t_power == 1);
    CHECK(p.t2plus1_power == 1);
    CHECK(p.residual.is_one());

    p = denom_profile(C("t - t^-1"));
    CHECK(p.q_power == 0);
    CHECK(p.t_power == 1);
    CHECK(p.t2plus1_power == 0);
    CHECK(p.residual.is_one());

    p = denom_profile(C("1/(q-1)"));
    CHECK(p.q_power == 0);
    CHECK(p.t_power == 0);
    CHECK(p.t2plus1_power == 0);
    CHECK(p.residual == Laurent::q() - Laurent(1));

    p = denom_profile(C("(q-1)/(1+t^2)^3"));
    CHECK(p.t2plus1_power == 3);
    CHECK(p.residual.is_one());
}

TEST_CASE("coefficient parser and printer") {
    CHECK(C("(q^-2 - 1)/(1 + t^2)").str() == "(q^-2 - 1)/(1 + t^2)");
    CHECK(C("-(q)").str() == "-q");
    CHECK(C("2*q*t - 3").str() == "-3 + 2*q*t");
    CHECK(C("1/(q - q^-1)") == C("q/(q^2-1)"));
    CHECK(C("-1/(1+t^2)").str() == "(-1)/(1 + t^2)");
    CHECK(C("(2/4)") == RatCoeff::fraction(Laurent(1), Laurent(2)));
    try {
        C("q +\n  * t");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
    CHECK_THROWS_AS(C("x"), ParseError);
    CHECK_THROWS_AS(C("(q"), ParseError);
}

TEST_CASE("property: printer round-trips") {
    std::mt19937_64 g(11);
    for (int i = 0; i < 200; ++i) {
        RatCoeff a = testgen::ratcoeff(g);
        CHECK(parse_coeff(a.str()) == a);
    }
}

TEST_CASE("property: field axioms") {
    std::mt19937_64 g(1);
    for (int i = 0; i < 150; ++i) {
        RatCoeff a = testgen::ratcoeff(g), b = testgen::ratcoeff(g), c = testgen::ratcoeff(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RatCoeff());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatCoeff(1));
    }
}

TEST_CASE("property: canonicalization is idempotent and canonical") {
    std::mt19937_64 g(2);
    for (int i = 0; i < 200; ++i) {
        RatCoeff a = testgen::ratcoeff(g);
        CHECK(a.recanonicalized() == a);
        CHECK(a.recanonicalized().recanonicalized() == a.recanonicalized());
        if (a.is_zero()) continue;
        CHECK(a.den().leading().second.sign() > 0);
        CHECK(a.den().min_qe() == 0);
        CHECK(a.den().min_te() == 0);
        // scaling numerator and denominator by the same polynomial is invisible
        Laurent s = Laurent::q() + Laurent(2) * Laurent::t(3) - Laurent(1);
        CHECK(RatCoeff::fraction(a.num() * s, a.den() * s) == a);
        CHECK(RatCoeff::fraction(-a.num(), -a.den()) == a);
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 g(3);
    std::uniform_int_distribution<int> pt(-9, 9);
    for (int i = 0; i < 150; ++i) {
        RatCoeff a = testgen::ratcoeff(g), b = testgen::ratcoeff(g);
        Rational q0(pt(g), 7), t0(pt(g), 5);
        q0.canonicalize();
        t0.canonicalize();
        try {
            Rational ea = coeff_eval(a, q0, t0), eb = coeff_eval(b, q0, t0);
            CHECK(coeff_eval(a * b, q0, t0) == ea * eb);
            CHECK(coeff_eval(a + b, q0, t0) == ea + eb);
        } catch (const EvalError&) {
            // point on a denominator; not part of the claim
        }
        Fp fq = Fp(pt(g) + 20), ft = Fp(pt(g) + 40);
        try {
            CHECK(eval_fp(a * b, fq, ft) == eval_fp(a, fq, ft) * eval_fp(b, fq, ft));
        } catch (const EvalError&) {
        }
    }
}

TEST_CASE("Fp arithmetic") {
    Fp a(123456789), b(-5);
    CHECK(a * a.inverse() == Fp(1));
    CHECK(b + Fp(5) == Fp(0));
    CHECK(Fp(2).pow(31) == Fp(1));
    CHECK(Fp::reduce(uint64_t(Fp::P - 1) * (Fp::P - 1)) == 1u);
    CHECK(eval_fp(C("1/(1+t^2)"), Fp(2), Fp(1)) == Fp(2).inverse());
}
