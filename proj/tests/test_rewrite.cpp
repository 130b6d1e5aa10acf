#include "doctest.h"
#include "series.hpp"

#include "qhc/daha/daha.hpp"
#include "qhc/rewrite/linalg.hpp"
#include "qhc/rewrite/props.hpp"
#include "qhc/simd/modp.hpp"

#include <random>
#include <set>

using namespace qhc;

namespace {

// A two-generator toy with a grading and a plain length-then-lex order.
AlgebraSpec toy_spec() {
    auto al = std::make_shared<Alphabet>(
        "toy", std::vector<Alphabet::Entry>{{"a", {1, 0}, ""}, {"b", {0, 1}, ""}, {"z", {0, 0}, ""}});
    AlgebraSpec s("toy", al);
    s.set_pbw({{al->at("a"), {}, -1}, {al->at("b"), {}, -1}, {al->at("z"), {}, 1}});
    s.set_order({length_component(*al), inversion_component(*al, s.pbw()), lex_component()});
    return s;
}

std::set<std::string> monomials(const Algebra& a, const std::vector<AmbiguityReport>& reps) {
    std::set<std::string> out;
    for (auto& r : reps) out.insert(a.spec().str(r.monomial));
    return out;
}

}  // namespace

TEST_CASE("rule validator") {
    AlgebraSpec s = toy_spec();
    CHECK_NOTHROW(s.add_rule("b*a", "q*a*b", "ba"));
    CHECK_THROWS_AS(s.add_rule("b*a", "a*b", "again"), InvalidRule);      // duplicate lhs
    CHECK_THROWS_AS(s.add_rule("a*b", "b*a", "up"), InvalidRule);         // increases inversions
    CHECK_THROWS_AS(s.add_rule("b*b", "a*b", "deg"), InvalidRule);        // not homogeneous
    CHECK_THROWS_AS(s.add_rule("z*z", "z*z + 1", "self"), InvalidRule);   // lhs in rhs
    CHECK_THROWS_AS(s.add_rule("a*a", "a*a*z", "long"), InvalidRule);     // longer
    CHECK_THROWS_AS(s.add_rule("a*z*z", "a", "three"), InvalidRule);      // lhs too long
    CHECK_NOTHROW(s.add_rule("z*z", "z + 1", "zz"));
}

TEST_CASE("sdaha normal forms") {
    const Algebra& A = sdaha();
    CHECK(A.nf("P1*Q1") == A.parse("Q1*P1 + (q^-2 - 1)*R"));
    CHECK(A.nf("R*Q2") == A.parse("q^-2*Q2*R"));
    CHECK(A.nf("R*R") ==
          A.parse("(1 + t^2)*(q^-2 + t^-2)*Q2*P2 - q^-2*Q2*P1^2 - q^-2*Q1^2*P2 + q^-2*Q1*R*P1"));
    CHECK(A.nf("P2*P2i") == A.one());
    CHECK(A.nf("Q2i*R*Q2") == A.parse("q^-2*R"));
}

TEST_CASE("sdaha ambiguities") {
    const Algebra& A = sdaha();
    auto reps = check_ambiguities(A);
    std::set<std::string> expected = {"P2*P1*R", "P2*P1*Q2", "P2*P1*Q1", "P2*R*Q2", "P2*R*Q1",
                                      "P2*Q2*Q1", "P1*R*Q2", "R^2*Q2",   "P1*Q2*Q1", "R*Q2*Q1",
                                      "P2*R^2",   "P1*R*Q1", "P1*R^2",   "R^2*Q1",   "R^3"};
    CHECK(reps.size() == 15);
    CHECK(monomials(A, reps) == expected);
    for (auto& r : reps) CHECK_MESSAGE(r.resolved, A.spec().str(r.monomial));

    auto all = check_ambiguities(A, true);
    CHECK(all.size() > reps.size());
    for (auto& r : all) CHECK_MESSAGE(r.resolved, A.spec().str(r.monomial));
}

TEST_CASE("straighten_trace of P1 R Q1") {
    const Algebra& A = sdaha();
    Word w = A.spec().word("P1*R*Q1");
    // the printed value keeps R^2 unexpanded; it agrees after normalization
    NcPoly printed = A.parse(
        "q^-4*Q1*R*P1 + q^-2*(1 - q^-2)*Q2*P1^2 + q^-2*(q^-2 - 1)*R^2 + q^-2*(1 - q^-2)*Q1^2*P2");
    NcPoly left = straighten_trace(A, w, Strategy::Leftmost);
    NcPoly right = straighten_trace(A, w, Strategy::Rightmost);
    CHECK(left == right);
    CHECK(left == A.nf(printed));
    CHECK(left.coeff(A.spec().word("Q1*R*P1")) == RatCoeff::q(-6));

    Word normal = A.spec().word("Q1*Q2*R*P1");
    CHECK(straighten_trace(A, normal, Strategy::Leftmost) == NcPoly::monomial(A.alphabet(), normal));
}

TEST_CASE("broken specs") {
    SUBCASE("dropping the R^2 relation removes the R^3 ambiguity and breaks PBW") {
        AlgebraSpec s = sdaha_spec();
        s.drop_rule("R2reln");
        Algebra A(s);
        auto mons = monomials(A, check_ambiguities(A));
        CHECK(mons.count("R^3") == 0);
        CHECK(mons.size() == 10);
        CHECK_FALSE(pbw_mismatches(A, {2, 2}).empty());
    }
    SUBCASE("perturbing a coefficient of the R^2 relation") {
        AlgebraSpec s = sdaha_spec();
        s.replace_rule("R2reln", s.parse("(1 + t^2)*(q^-2 + t^-2)*Q2*P2 - q^-2*Q2*P1^2 - q^-2*Q1^2*P2 + q^-4*Q1*R*P1"));
        Algebra A(s);
        std::set<std::string> bad;
        for (auto& r : check_ambiguities(A))
            if (!r.resolved) bad.insert(A.spec().str(r.monomial));
        CHECK(bad.count("R^2*Q1") == 1);
        CHECK(bad.count("P1*R^2") == 1);
    }
    SUBCASE("the Q2 P2 coefficient of the R^2 relation is not forced by the diamonds") {
        AlgebraSpec s = sdaha_spec();
        s.replace_rule("R2reln", s.parse("5*Q2*P2 - q^-2*Q2*P1^2 - q^-2*Q1^2*P2 + q^-2*Q1*R*P1"));
        Algebra A(s);
        for (auto& r : check_ambiguities(A)) CHECK(r.resolved);
    }
}

TEST_CASE("reference engine guards") {
    const Algebra& A = sdaha();
    NcPoly p = A.parse("R*R*R*Q1");
    CHECK_THROWS_AS(A.rw().reduce_reference(p, Strategy::Leftmost, 3), NonTermination);
    CHECK(A.rw().reduce_reference(p, Strategy::Leftmost) == A.nf(p));
}

TEST_CASE("hilbert tables") {
    const Algebra& A = sdaha();
    HilbertTable h = hilbert_table(A, {6, 6});
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(h.at(m, n) == series::spherical(m, n));
    CHECK(h.at(1, 1) == 2);
    CHECK(h.at(2, 2) == 5);
    CHECK(pbw_mismatches(A, {6, 6}).empty());

    const Algebra& H = daha();
    HilbertTable hd = hilbert_table(H, {4, 4});
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) CHECK(hd.at(m, n) == 2 * (m + 1) * (n + 1));
    CHECK(pbw_mismatches(H, {4, 4}).empty());
}

TEST_CASE("rank_of_family") {
    const Algebra& A = sdaha();
    NcPoly e = daha_idempotent();
    CHECK(rank_of_family({idempotent_sandwich(daha().one())}).rank == 1);
    NcPoly x = phi_apply(A.parse("Q1*P1"));
    RankResult dup = rank_of_family({x, x});
    CHECK(dup.rank == 1);
    CHECK(dup.agreeing == 3);
    RankResult r = phi_rank({2, 2});
    CHECK(r.rank == 5);
    CHECK(r.per_point == std::vector<int>{5, 5, 5});

    NcPoly bad = A.parse("1/(q - 2)*R");
    CHECK_THROWS_AS(rank_of_family({bad}, {{Rational(2), Rational(3)}}), EvalError);
    try {
        rank_of_family({bad}, {{Rational(2), Rational(3)}});
    } catch (const EvalError& err) {
        CHECK(std::string(err.what()).find("q=2") != std::string::npos);
    }
    CHECK(e.size() == 2);
}

TEST_CASE("solve_exact") {
    // x * (1, q) + y * (t, 0) = (1 + t, q)
    std::vector<std::vector<RatCoeff>> cols = {{RatCoeff(1), RatCoeff::q()}, {RatCoeff::t(), RatCoeff(0)}};
    auto sol = solve_exact(cols, {RatCoeff(1) + RatCoeff::t(), RatCoeff::q()});
    REQUIRE(sol);
    CHECK((*sol)[0] == RatCoeff(1));
    CHECK((*sol)[1] == RatCoeff(1));
    CHECK_FALSE(solve_exact({{RatCoeff(1), RatCoeff(1)}}, {RatCoeff(1), RatCoeff(2)}));
}

TEST_CASE("simd kernels agree with the scalar kernel") {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<uint32_t> r(0, Fp::P - 1);
    for (size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 64u, 100u}) {
        std::vector<uint32_t> row(n), piv(n);
        for (auto& v : row) v = r(g);
        for (auto& v : piv) v = r(g);
        for (uint32_t f : {0u, 1u, Fp::P - 1, r(g)}) {
            auto a = row, b = row;
            simd::submul_modp_scalar(a.data(), piv.data(), f, n);
            for (size_t j = 0; j < n; ++j) CHECK(a[j] == (Fp::raw(row[j]) - Fp::raw(f) * Fp::raw(piv[j])).value());
            if (simd::avx2_available()) {
                simd::submul_modp_avx2(b.data(), piv.data(), f, n);
                CHECK(a == b);
            }
        }
    }
    std::vector<NcPoly> fam;
    for (int m = 0; m <= 2; ++m)
        for (auto& w : sdaha().spec().pbw_enumerate({m, 2})) fam.push_back(phi_apply(NcPoly::monomial(sdaha().alphabet(), w)));
    simd::force_isa(simd::Isa::Scalar);
    RankResult scalar = rank_of_family(fam);
    simd::force_isa(simd::Isa::Avx2);
    RankResult vec = rank_of_family(fam);
    CHECK(scalar.per_point == vec.per_point);
}

TEST_CASE("property: engine invariants on sdaha") {
    const Algebra& A = sdaha();
    for (auto rep : {check_strategy_independence(A, 200, 1), check_associativity(A, 200, 2),
                     check_homogeneity(A, 200, 3), check_qcentrality(A, 100, 4),
                     check_specialization(A, 40, 5, consistency_points())}) {
        CHECK_MESSAGE(rep.ok(), rep.name << ": " << rep.first_failure);
    }
}

TEST_CASE("property: engine invariants on daha") {
    const Algebra& H = daha();
    for (auto rep : {check_strategy_independence(H, 200, 6), check_associativity(H, 200, 7),
                     check_homogeneity(H, 200, 8), check_qcentrality(H, 100, 9),
                     check_specialization(H, 40, 10, consistency_points())}) {
        CHECK_MESSAGE(rep.ok(), rep.name << ": " << rep.first_failure);
    }
}
