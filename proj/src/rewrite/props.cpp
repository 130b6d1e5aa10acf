#include "qhc/rewrite/props.hpp"

#include <algorithm>

namespace qhc {

namespace {

void fail(PropReport& r, const std::string& what) {
    if (r.failures++ == 0) r.first_failure = what;
}

}  // namespace

const std::vector<SpecPoint>& consistency_points() {
    static const std::vector<SpecPoint> pts = {{Rational(2), Rational(3)}, {Rational(3), Rational(2)},
                                               {Rational(5), Rational(7)}};
    return pts;
}

Word random_word(const Algebra& a, std::mt19937_64& g, int max_len) {
    std::uniform_int_distribution<int> len(1, std::max(1, max_len)), let(0, int(a.alphabet()->size()) - 1);
    Word w;
    int n = len(g);
    for (int i = 0; i < n; ++i) w.push_back(Letter(let(g)));
    return w;
}

NcPoly random_element(const Algebra& a, std::mt19937_64& g, int terms, int max_len) {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    NcPoly p(a.alphabet());
    for (int i = 0; i < terms; ++i) {
        int k = c(g);
        p.add_term(random_word(a, g, max_len), RatCoeff(Laurent::monomial(Integer(k == 0 ? 1 : k), e(g), e(g))));
    }
    return a.nf(p);
}

NcPoly random_homogeneous(const Algebra& a, std::mt19937_64& g, int terms, int max_len) {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    Word w = random_word(a, g, max_len);
    NcPoly p(a.alphabet());
    for (int i = 0; i < terms; ++i) {
        std::shuffle(w.begin(), w.end(), g);
        int k = c(g);
        p.add_term(w, RatCoeff(Laurent::monomial(Integer(k == 0 ? 1 : k), e(g), e(g))));
    }
    return a.nf(p);
}

PropReport check_strategy_independence(const Algebra& a, int trials, uint64_t seed, int max_len) {
    PropReport r{a.id() + ": strategy independence"};
    std::mt19937_64 g(seed);
    for (int i = 0; i < trials; ++i, ++r.trials) {
        Word w = random_word(a, g, max_len);
        NcPoly p = NcPoly::monomial(a.alphabet(), w);
        NcPoly l = a.rw().reduce_reference(p, Strategy::Leftmost);
        NcPoly rt = a.rw().reduce_reference(p, Strategy::Rightmost);
        if (l != rt || l != a.nf(p)) fail(r, a.spec().str(w));
    }
    return r;
}

PropReport check_associativity(const Algebra& a, int trials, uint64_t seed, int max_len) {
    PropReport r{a.id() + ": associativity"};
    std::mt19937_64 g(seed);
    for (int i = 0; i < trials; ++i, ++r.trials) {
        NcPoly x = random_element(a, g, 2, max_len), y = random_element(a, g, 2, max_len),
               z = random_element(a, g, 2, max_len);
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z))) fail(r, x.str() + " | " + y.str() + " | " + z.str());
    }
    return r;
}

PropReport check_homogeneity(const Algebra& a, int trials, uint64_t seed, int max_len) {
    PropReport r{a.id() + ": homogeneity"};
    std::mt19937_64 g(seed);
    for (int i = 0; i < trials; ++i, ++r.trials) {
        Word w = random_word(a, g, max_len);
        NcPoly p = NcPoly::monomial(a.alphabet(), w);
        auto d = a.nf(p).bidegree_of();
        bool ok = d.kind == NcPoly::Grading::Any ||
                  (d.kind == NcPoly::Grading::Homogeneous && d.deg == a.alphabet()->degree(w));
        if (!ok) fail(r, a.spec().str(w));
    }
    return r;
}

PropReport check_qcentrality(const Algebra& a, int trials, uint64_t seed, int max_len) {
    PropReport r{a.id() + ": q-centrality"};
    std::mt19937_64 g(seed);
    for (auto& qc : a.spec().qcentral()) {
        NcPoly z = NcPoly::monomial(a.alphabet(), qc.elem);
        for (int i = 0; i < trials; ++i, ++r.trials) {
            Word w = random_word(a, g, max_len);
            NcPoly h = a.nf(NcPoly::monomial(a.alphabet(), w));
            Bideg d = a.alphabet()->degree(w);
            NcPoly res = a.mul(z, h) - a.mul(h, z).scaled(RatCoeff::q(pair(qc.kappa, d)));
            if (!a.nf(res).is_zero()) fail(r, a.spec().str(qc.elem) + " vs " + a.spec().str(w));
        }
    }
    return r;
}

PropReport check_specialization(const Algebra& a, int trials, uint64_t seed, const std::vector<SpecPoint>& points,
                                int max_len) {
    PropReport r{a.id() + ": specialization"};
    std::mt19937_64 g(seed);
    for (auto& pt : points) {
        auto ev = [&](const RatCoeff& c) { return coeff_eval(c, pt.q0, pt.t0); };
        Fp q0 = point_fp(pt.q0), t0 = point_fp(pt.t0);
        auto evp = [&](const RatCoeff& c) { return eval_fp(c, q0, t0); };
        Rewriter<Rational> rq(a.spec(), ev);
        Rewriter<Fp> rp(a.spec(), evp);
        for (int i = 0; i < trials; ++i, ++r.trials) {
            NcPoly p(a.alphabet());
            p.add_term(random_word(a, g, max_len), RatCoeff(1));
            p.add_term(random_word(a, g, max_len), RatCoeff::fraction(Laurent::q(1) + Laurent::t(-1), Laurent(1)));
            NcPoly n = a.nf(p);
            bool ok = n.map_coeffs(ev) == rq.normal_form(p.map_coeffs(ev)) &&
                      n.map_coeffs(evp) == rp.normal_form(p.map_coeffs(evp));
            if (!ok) fail(r, p.str() + " at q=" + pt.q0.get_str() + ", t=" + pt.t0.get_str());
        }
    }
    return r;
}

}  // namespace qhc
