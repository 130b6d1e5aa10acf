#include "qhc/qgroup/qgroup.hpp"

namespace qhc {

AlgebraSpec uq_spec() {
    auto al = std::make_shared<Alphabet>("uq", std::vector<Alphabet::Entry>{{"F", {-1, 1}, ""},
                                                                           {"E", {1, -1}, ""},
                                                                           {"K1", {0, 0}, "K1i"},
                                                                           {"K1i", {0, 0}, "K1"},
                                                                           {"K2", {0, 0}, "K2i"},
                                                                           {"K2i", {0, 0}, "K2"}});
    AlgebraSpec s("uq", al);
    std::vector<PbwBlock> pbw = {{al->at("F"), {}, -1},
                                 {al->at("E"), {}, -1},
                                 {al->at("K1"), al->at("K1i"), -1},
                                 {al->at("K2"), al->at("K2i"), -1}};
    s.set_pbw(pbw);
    s.set_order({pair_component(*al, {"F"}, {"E"}, "F-after-E pairs"),
                 pair_component(*al, {"E", "F"}, {"K1", "K1i", "K2", "K2i"}, "E/F-after-K pairs"),
                 length_component(*al), inversion_component(*al, pbw), lex_component()});

    s.add_rule("E*F", "F*E + (K1*K2i - K1i*K2)/(q - q^-1)", "EF");
    s.add_rule("K1*E", "q*E*K1", "K1E");
    s.add_rule("K1i*E", "q^-1*E*K1i", "K1iE");
    s.add_rule("K2*E", "q^-1*E*K2", "K2E");
    s.add_rule("K2i*E", "q*E*K2i", "K2iE");
    s.add_rule("K1*F", "q^-1*F*K1", "K1F");
    s.add_rule("K1i*F", "q*F*K1i", "K1iF");
    s.add_rule("K2*F", "q*F*K2", "K2F");
    s.add_rule("K2i*F", "q^-1*F*K2i", "K2iF");
    s.add_rule("K2*K1", "K1*K2", "K2K1");
    s.add_rule("K2*K1i", "K1i*K2", "K2K1i");
    s.add_rule("K2i*K1", "K1*K2i", "K2iK1");
    s.add_rule("K2i*K1i", "K1i*K2i", "K2iK1i");
    s.add_rule("K1*K1i", "1", "K1K1i");
    s.add_rule("K1i*K1", "1", "K1iK1");
    s.add_rule("K2*K2i", "1", "K2K2i");
    s.add_rule("K2i*K2", "1", "K2iK2");

    s.add_qcentral({Word(1, al->at("K1")), {1, 0}, true});
    s.add_qcentral({Word(1, al->at("K2")), {0, 1}, true});
    return s;
}

const Algebra& uq() {
    static const Algebra a(uq_spec());
    return a;
}

namespace {

NcPoly u(const char* s) { return uq().nf(s); }

}  // namespace

PolyMatrix lplus() {
    PolyMatrix m(2, NcPoly(uq().alphabet()));
    m(0, 0) = u("K1i");
    m(0, 1) = u("(q - q^-1)*K1i*E");
    m(1, 1) = u("K2i");
    return m;
}

PolyMatrix lminus() {
    PolyMatrix m(2, NcPoly(uq().alphabet()));
    m(0, 0) = u("K1");
    m(1, 0) = u("-(q - q^-1)*F*K1");
    m(1, 1) = u("K2");
    return m;
}

std::vector<RelationCheck> lmatrix_check() {
    const Algebra& U = uq();
    PolyMatrix p = lplus(), m = lminus();
    auto mul = [&](const NcPoly& a, const NcPoly& b) { return U.mul(a, b); };
    RatCoeff c = RatCoeff::q() - RatCoeff::q(-1);
    std::vector<RelationCheck> out;
    auto add = [&](std::string tag, const NcPoly& r) { out.push_back({std::move(tag), U.nf(r)}); };

    add("l+11 l-11 = 1", mul(p(0, 0), m(0, 0)) - U.one());
    add("l+22 l-22 = 1", mul(p(1, 1), m(1, 1)) - U.one());
    add("l+11 l+22 commute", mul(p(0, 0), p(1, 1)) - mul(p(1, 1), p(0, 0)));
    add("l-11 l-22 commute", mul(m(0, 0), m(1, 1)) - mul(m(1, 1), m(0, 0)));
    add("l+11 l+12", mul(p(0, 0), p(0, 1)) - mul(p(0, 1), p(0, 0)).scaled(RatCoeff::q(-1)));
    add("l+22 l+12", mul(p(1, 1), p(0, 1)) - mul(p(0, 1), p(1, 1)).scaled(RatCoeff::q()));
    add("l+11 l-21", mul(p(0, 0), m(1, 0)) - mul(m(1, 0), p(0, 0)).scaled(RatCoeff::q()));
    add("l+22 l-21", mul(p(1, 1), m(1, 0)) - mul(m(1, 0), p(1, 1)).scaled(RatCoeff::q(-1)));
    add("l-21 l+12", mul(m(1, 0), p(0, 1)) - mul(p(0, 1), m(1, 0)) -
                         (mul(p(1, 1), m(0, 0)) - mul(p(0, 0), m(1, 1))).scaled(c));

    PolyMatrix r = lift(rmatrix_vector(), U.alphabet());
    auto matrix_eq = [&](const std::string& name, const PolyMatrix& x, const PolyMatrix& y) {
        // X1 Y2 R = R Y2 X1
        PolyMatrix l = matmul(matmul(leg1(x), leg2(y), mul), r, mul);
        PolyMatrix rr = matmul(matmul(r, leg2(y), mul), leg1(x), mul);
        for (size_t i = 0; i < 16; ++i)
            add(name + "[" + std::to_string(i / 4) + "," + std::to_string(i % 4) + "]", l.e[i] - rr.e[i]);
    };
    matrix_eq("L+L+R", p, p);
    matrix_eq("L-L-R", m, m);
    matrix_eq("L-L+R", m, p);
    return out;
}

NcPoly uq_adjoint(UGen g, const NcPoly& y) {
    const Algebra& U = uq();
    auto m3 = [&](const char* a, const NcPoly& x, const char* b) { return U.mul(U.mul(u(a), x), u(b)); };
    switch (g) {
    case UGen::E: return m3("E", y, "K1i*K2") - U.mul(y, u("E*K1i*K2"));
    case UGen::F: return U.mul(u("F"), y) - m3("K1i*K2", y, "K1*K2i*F");
    case UGen::K1: return m3("K1", y, "K1i");
    case UGen::K2: return m3("K2", y, "K2i");
    }
    return y;
}

}  // namespace qhc
