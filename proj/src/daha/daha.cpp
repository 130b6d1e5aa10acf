#include "qhc/daha/daha.hpp"

#include <cctype>

namespace qhc {

namespace {

AlphaPtr daha_alphabet() {
    return std::make_shared<Alphabet>(
        "daha", std::vector<Alphabet::Entry>{{"T", {0, 0}, "Ti"},
                                             {"Ti", {0, 0}, "T"},
                                             {"Y1", {1, 0}, "Y1i"},
                                             {"Y1i", {-1, 0}, "Y1"},
                                             {"Y2", {1, 0}, "Y2i"},
                                             {"Y2i", {-1, 0}, "Y2"},
                                             {"X1", {0, 1}, "X1i"},
                                             {"X1i", {0, -1}, "X1"},
                                             {"X2", {0, 1}, "X2i"},
                                             {"X2i", {0, -1}, "X2"}});
}

// Reorderings for pairs with at least one inverse. Each is accepted only after
// clearing the inverse reduces it to an identity among accepted rules.
const DerivedRule kMixed[] = {
    {"X1*Y1i", "q^2*Y1i*X1 + c*q^2*Ti*Y2i*X1", "(%)*Y1", "X1"},
    {"X1*Y2i", "Ti^2*Y2i*X1", "(%)*Y2", "X1"},
    {"X2*Y1i", "Y1i*X2*Ti^2", "(%)*Y1", "X2"},
    {"X2*Y2i", "q^2*Y2i*X2 + c*Ti*Y2i*X1", "(%)*Y2", "X2"},
    {"X1i*Y1", "q^2*Y1*X1i + c*Ti*Y1*X2i", "X1*(%)", "Y1"},
    {"X1i*Y2", "Y2*X1i*Ti^2", "X1*(%)", "Y2"},
    {"X2i*Y1", "Ti^2*Y1*X2i", "X2*(%)", "Y1"},
    {"X2i*Y2", "q^2*Y2*X2i + c*q^2*Ti*Y1*X2i", "X2*(%)", "Y2"},
};

const DerivedRule kDouble[] = {
    {"X1i*Y1i", "q^-2*Y1i*X1i*Ti^2", "X1*(%)", "Y1i"},
    {"X1i*Y2i", "Y2i*X1i + c*q^-2*Ti*Y2i*X2i", "X1*(%)", "Y2i"},
    {"X2i*Y1i", "Y1i*X2i + c*Ti*Y2i*X2i", "X2*(%)", "Y1i"},
    {"X2i*Y2i", "q^-2*Ti^2*Y2i*X2i", "X2*(%)", "Y2i"},
};

std::string subst(std::string s, const std::string& from, const std::string& to) {
    for (size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
    return s;
}

}  // namespace

std::string expand_c(const char* src) {
    std::string s = src;
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        bool word_char_before = i > 0 && (std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
        bool word_char_after = i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_');
        if (s[i] == 'c' && !word_char_before && !word_char_after) out += "(t - t^-1)";
        else out += s[i];
    }
    return out;
}

void accept_derived(AlgebraSpec& s, const std::vector<DerivedRule>& rules) {
    Algebra base(s);  // rules accepted so far
    for (auto& c : rules) {
        std::string rhs = expand_c(c.rhs.c_str());
        NcPoly diff = base.nf(base.parse(subst(c.check, "%", rhs))) - base.parse(c.target);
        if (!diff.is_zero())
            throw InvalidRule(s.id() + ": derived rule for " + c.lhs + " fails validation (residual " + diff.str() + ")");
    }
    for (auto& c : rules) s.add_rule(c.lhs, expand_c(c.rhs.c_str()), "derived:" + c.lhs);
}

AlgebraSpec daha_spec() {
    AlphaPtr al = daha_alphabet();
    AlgebraSpec s("daha", al);
    std::vector<PbwBlock> pbw = {{al->at("T"), {}, 1},
                                 {al->at("Y1"), al->at("Y1i"), -1},
                                 {al->at("Y2"), al->at("Y2i"), -1},
                                 {al->at("X1"), al->at("X1i"), -1},
                                 {al->at("X2"), al->at("X2i"), -1}};
    s.set_pbw(pbw);
    s.set_order({pair_component(*al, {"Y1", "Y1i", "Y2", "Y2i"}, {"X1", "X1i", "X2", "X2i"}, "X-before-Y pairs"),
                 pair_component(*al, {"T", "Ti"}, {"Y1", "Y1i", "Y2", "Y2i", "X1", "X1i", "X2", "X2i"},
                                "letter-before-T pairs"),
                 length_component(*al), additive_component(*al, {{"Ti", 1}}, "Ti count"),
                 inversion_component(*al, pbw), lex_component()});

    auto rule = [&](const char* lhs, const char* rhs, const char* tag) { s.add_rule(lhs, expand_c(rhs), tag); };

    // Hecke relation and T^-1 = T - (t - t^-1)
    rule("Ti", "T - c", "Tinv");
    rule("T*T", "c*T + 1", "T2");

    // T X1 T = X2 and T^-1 Y1 T^-1 = Y2, solved for letter * T
    rule("X1*T", "T*X2 - c*X2", "X1T");
    rule("X2*T", "T*X1 + c*X2", "X2T");
    rule("X1i*T", "T*X2i + c*X1i", "X1iT");
    rule("X2i*T", "T*X1i - c*X1i", "X2iT");
    rule("Y1*T", "T*Y2 + c*Y1", "Y1T");
    rule("Y2*T", "T*Y1 - c*Y1", "Y2T");
    rule("Y1i*T", "T*Y2i - c*Y2i", "Y1iT");
    rule("Y2i*T", "T*Y1i + c*Y2i", "Y2iT");

    // commutative lattices
    for (const char* v : {"X", "Y"}) {
        std::string a1 = std::string(v) + "1", a2 = std::string(v) + "2";
        std::string i1 = a1 + "i", i2 = a2 + "i";
        s.add_rule(a2 + "*" + a1, a1 + "*" + a2, a2 + a1);
        s.add_rule(a2 + "*" + i1, i1 + "*" + a2, a2 + i1);
        s.add_rule(i2 + "*" + a1, a1 + "*" + i2, i2 + a1);
        s.add_rule(i2 + "*" + i1, i1 + "*" + i2, i2 + i1);
        for (auto& [g, gi] : {std::pair{a1, i1}, std::pair{a2, i2}}) {
            s.add_rule(g + "*" + gi, "1", g + gi);
            s.add_rule(gi + "*" + g, "1", gi + g);
        }
    }

    // positive reorderings
    rule("X1*Y1", "q^-2*Ti^2*Y1*X1", "X1Y1");
    rule("X1*Y2", "Y2*X1 + c*Ti*Y1*X1", "X1Y2");
    rule("X2*Y1", "Y1*X2 + c*q^-2*Ti*Y1*X1", "X2Y1");
    rule("X2*Y2", "q^-2*Y2*X2*Ti^2", "X2Y2");

    accept_derived(s, {std::begin(kMixed), std::end(kMixed)});
    accept_derived(s, {std::begin(kDouble), std::end(kDouble)});

    s.add_qcentral({al->word({"Y1", "Y2"}), {0, 2}, false});
    s.add_qcentral({al->word({"X1", "X2"}), {-2, 0}, false});
    return s;
}

const Algebra& daha() {
    static const Algebra a(daha_spec());
    return a;
}

}  // namespace qhc

namespace qhc {

NcPoly daha_idempotent() {
    const Algebra& H = daha();
    return H.parse("1 + t*T").scaled(RatCoeff(1) / RatCoeff(Laurent(1) + Laurent::t(2)));
}

NcPoly idempotent_sandwich(const NcPoly& h) {
    const Algebra& H = daha();
    NcPoly e = daha_idempotent();
    return H.mul(H.mul(e, H.nf(h)), e);
}

NcPoly phi_generator(const std::string& name) {
    const Algebra& H = daha();
    static const std::map<std::string, std::string> raw = {
        {"P1", "X1 + X2"},       {"P2", "X1*X2"},   {"P2i", "X1i*X2i"}, {"Q1", "Y1 + Y2"},
        {"Q2", "Y1*Y2"},         {"Q2i", "Y1i*Y2i"}, {"R", "t^-2*Y1*X1 + Y2*X2"}};
    auto it = raw.find(name);
    if (it == raw.end()) throw std::invalid_argument("unknown generator " + name + " in sdaha");
    return H.parse(it->second);
}

NcPoly phi_apply(const NcPoly& x) {
    const Algebra& H = daha();
    const Algebra& A = sdaha();
    NcPoly::check_same(A.alphabet(), x.alphabet());
    // e g e = g~ e' / (1 + t^2) with e' = 1 + tT; keep the Laurent part until the end
    NcPoly ep = H.parse("1 + t*T");
    std::vector<NcPoly> imgs(A.alphabet()->size());
    for (size_t l = 0; l < imgs.size(); ++l) imgs[l] = H.nf(phi_generator(A.alphabet()->name(Letter(l))));
    std::map<size_t, NcPoly> by_len;
    for (auto& [w, c] : x.terms()) {
        NcPoly acc = ep;
        for (Letter l : w) acc = H.mul(H.mul(acc, imgs[l]), ep);
        auto [it, fresh] = by_len.try_emplace(w.size(), NcPoly(H.alphabet()));
        it->second = it->second + acc.scaled(c);
    }
    NcPoly out(H.alphabet());
    RatCoeff den(Laurent(1) + Laurent::t(2));
    for (auto& [k, p] : by_len) out = out + p.scaled(RatCoeff(1) / den.pow(int(k) + 1));
    return out;
}

}  // namespace qhc

namespace qhc {

RankResult phi_rank(Bideg d, const std::vector<SpecPoint>& points) {
    const Algebra& A = sdaha();
    std::vector<NcPoly> imgs;
    for (auto& w : A.spec().pbw_enumerate(d)) imgs.push_back(phi_apply(NcPoly::monomial(A.alphabet(), w)));
    return rank_of_family(imgs, points);
}

RankResult spherical_dimension(Bideg d, const std::vector<SpecPoint>& points) {
    const Algebra& H = daha();
    std::vector<NcPoly> imgs;
    for (auto& w : H.spec().pbw_enumerate(d)) imgs.push_back(idempotent_sandwich(NcPoly::monomial(H.alphabet(), w)));
    return rank_of_family(imgs, points);
}

}  // namespace qhc
