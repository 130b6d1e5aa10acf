#include "qhc/qgroup/qgroup.hpp"

namespace qhc {

AlgebraSpec oq_spec() {
    auto al = std::make_shared<Alphabet>(
        "oq", std::vector<Alphabet::Entry>{{"l11", {1, 0}, ""}, {"l12", {1, 0}, ""}, {"l21", {1, 0}, ""}, {"l22", {1, 0}, ""}});
    AlgebraSpec s("oq", al);
    std::vector<PbwBlock> pbw = {{al->at("l11"), {}, -1}, {al->at("l12"), {}, -1}, {al->at("l21"), {}, -1}, {al->at("l22"), {}, -1}};
    s.set_pbw(pbw);
    // l22 l21 -> q^-2 l21 l22 must rank below l21 l11, so l22 weighs nothing
    s.set_order({additive_component(*al, {{"l11", 1}, {"l12", 1}, {"l21", 1}, {"l22", 0}}, "weight"),
                 inversion_component(*al, pbw), lex_component()});

    s.add_rule("l12*l11", "l11*l12 + (1 - q^-2)*l12*l22", "l12l11");
    s.add_rule("l22*l11", "l11*l22", "l22l11");
    s.add_rule("l21*l11", "l11*l21 - (1 - q^-2)*l22*l21", "l21l11");
    s.add_rule("l22*l12", "q^2*l12*l22", "l22l12");
    s.add_rule("l21*l12", "l12*l21 + (1 - q^-2)*(l11*l22 - l22*l22)", "l21l12");
    s.add_rule("l22*l21", "q^-2*l21*l22", "l22l21");
    return s;
}

const Algebra& oq() {
    static const Algebra a(oq_spec());
    return a;
}

NcPoly oq_trace() { return oq().parse("l11 + q^-2*l22"); }
NcPoly oq_det() { return oq().nf("l11*l22 - q^2*l12*l21"); }

std::shared_ptr<const Localization> oq_loc() {
    static const auto loc = Localization::make(oq(), {{"detL", oq_det(), {2, 0}, {0, 0}}});
    return loc;
}

PolyMatrix oq_matrix() {
    PolyMatrix m(2, NcPoly());
    const char* names[] = {"l11", "l12", "l21", "l22"};
    for (int i = 0; i < 4; ++i) m.e[i] = oq().gen(names[i]);
    return m;
}

std::vector<NcPoly> oq_reflection_entries() {
    PolyMatrix l = oq_matrix();
    PolyMul mul = free_mul();
    const AlphaPtr& al = oq().alphabet();
    PolyMatrix r = lift(rmatrix_vector(), al), r21 = lift(rmatrix_21(), al);
    PolyMatrix lhs = matmul(matmul(matmul(r21, leg1(l), mul), r, mul), leg2(l), mul);
    PolyMatrix rhs = matmul(matmul(matmul(leg2(l), r21, mul), leg1(l), mul), r, mul);
    std::vector<NcPoly> out;
    for (size_t i = 0; i < 16; ++i) out.push_back(lhs.e[i] - rhs.e[i]);
    return out;
}

namespace {

const std::vector<NcPoly>& phi_images() {
    static const std::vector<NcPoly> v = [] {
        const Algebra& U = uq();
        return std::vector<NcPoly>{U.nf("K1^-2 + q^-1*(q - q^-1)^2*K1i*K2i*E*F"), U.nf("q^-1*(q - q^-1)*K1i*K2i*E"),
                                   U.nf("(q - q^-1)*K2^-2*F"), U.nf("K2^-2")};
    }();
    return v;
}

// Inverse of a unit monomial c*g1...gk of invertible letters.
NcPoly invert_unit(const NcPoly& x) {
    if (x.size() != 1) throw std::invalid_argument("not a unit monomial: " + x.str());
    auto& [w, c] = *x.terms().begin();
    const Alphabet& al = *x.alphabet();
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto inv = al.inverse(*it);
        if (!inv) throw std::invalid_argument("not a unit monomial: " + x.str());
        r.push_back(*inv);
    }
    return NcPoly::monomial(x.alphabet(), r, c.inverse());
}

}  // namespace

NcPoly embed_phi(const NcPoly& x) {
    const Algebra& U = uq();
    NcPoly::check_same(x.alphabet(), oq().alphabet());
    const auto& img = phi_images();
    NcPoly out(U.alphabet());
    for (auto& [w, c] : x.terms()) {
        NcPoly p = U.one().scaled(c);
        for (Letter l : w) p = U.mul(p, img[l]);
        out += p;
    }
    return out;
}

NcPoly embed_phi(const LocalizedElem& x) {
    const Algebra& U = uq();
    NcPoly pre = U.one();
    // phi(det) = K1^-2 K2^-2
    for (int k = 0; k < x.exponents().at(0); ++k) pre = U.mul(pre, U.parse("K1^2*K2^2"));
    return U.mul(pre, embed_phi(x.body()));
}

PolyMatrix phi_from_lmatrices() {
    const Algebra& U = uq();
    PolyMatrix m = lminus();
    // [[a, 0], [b, d]]^-1 = [[a^-1, 0], [-d^-1 b a^-1, d^-1]]
    PolyMatrix s(2, NcPoly(U.alphabet()));
    NcPoly ai = invert_unit(m(0, 0)), di = invert_unit(m(1, 1));
    s(0, 0) = ai;
    s(1, 1) = di;
    s(1, 0) = -U.mul(U.mul(di, m(1, 0)), ai);
    return matmul(lplus(), s, algebra_mul(U));
}

}  // namespace qhc
