#include "qhc/invham/invham.hpp"

#include "qhc/rewrite/linalg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qhc {

namespace {

AlgebraSpec base_spec(const std::string& id, bool with_w) {
    std::vector<Alphabet::Entry> gens = {{"c1", {1, 0}, ""},  {"c2", {2, 0}, "c2i"}, {"c2i", {-2, 0}, "c2"},
                                         {"r", {1, 1}, ""},   {"d1", {0, 1}, ""},    {"d2", {0, 2}, "d2i"},
                                         {"d2i", {0, -2}, "d2"}};
    if (with_w) gens.push_back({"w", {2, 2}, ""});
    auto al = std::make_shared<Alphabet>(id, gens);
    AlgebraSpec s(id, al);
    std::vector<PbwBlock> pbw = {{al->at("c1"), {}, -1},
                                 {al->at("c2"), al->at("c2i"), -1},
                                 {al->at("r"), {}, id == "invr" ? -1 : 1},
                                 {al->at("d1"), {}, -1},
                                 {al->at("d2"), al->at("d2i"), -1}};
    if (with_w) pbw.push_back({al->at("w"), {}, -1});
    s.set_pbw(pbw);
    s.set_order({pair_component(*al, {"c1", "c2", "c2i", "r"}, {"r", "d1", "d2", "d2i"}, "d-before-c pairs"),
                 length_component(*al), inversion_component(*al, pbw), lex_component()});

    s.add_rule("c2*c1", "c1*c2", "c1c2");
    s.add_rule("d2*d1", "d1*d2", "d1d2");
    s.add_rule("d2*c2", "q^-4*c2*d2", "d2c2");
    s.add_rule("d2*c1", "q^-2*c1*d2", "d2c1");
    s.add_rule("d1*c2", "q^-2*c2*d1", "d1c2");
    s.add_rule("d1*c1", "c1*d1 + (q^-2 - 1)*r", "d1c1");
    s.add_rule("d2*r", "q^-2*r*d2", "d2r");
    s.add_rule("r*c2", "q^-2*c2*r", "rc2");
    s.add_rule("d1*r", "q^-2*r*d1 + (1 - q^-2)*q^-2*c1*d2", "d1r");
    s.add_rule("r*c1", "q^-2*c1*r + (1 - q^-2)*q^-2*c2*d1", "rc1");
    s.add_qcentral({Word(1, al->at("c2")), {0, 2}, true});
    s.add_qcentral({Word(1, al->at("d2")), {-2, 0}, true});
    return s;
}

}  // namespace

AlgebraSpec inv_spec() {
    AlgebraSpec s = base_spec("inv", true);
    s.add_rule("r*r", "q^-4*w + (q^-4 + q^-6)*c2*d2 - q^-4*c2*d1^2 - q^-4*c1^2*d2 + q^-2*c1*r*d1", "r2reln");
    s.add_rule("w*r", "r*w", "wr");
    s.add_rule("w*c1", "q^-2*c1*w", "wc1");
    s.add_rule("w*c2", "q^-4*c2*w", "wc2");
    s.add_rule("w*d1", "q^2*d1*w", "wd1");
    s.add_rule("w*d2", "q^4*d2*w", "wd2");
    s.add_qcentral({Word(1, s.alphabet()->at("w")), {-2, 2}, false});
    s.generate_localization_rules();
    return s;
}

const Algebra& inv() {
    static const Algebra a(inv_spec());
    return a;
}

AlgebraSpec ham_spec() {
    AlgebraSpec s = base_spec("ham", false);
    s.add_rule("r*r", "q^-4*(1 + t^2)*(q^-2 + t^-2)*c2*d2 - q^-4*c2*d1^2 - q^-4*c1^2*d2 + q^-2*c1*r*d1", "r2reln");
    s.generate_localization_rules();
    return s;
}

const Algebra& ham() {
    static const Algebra a(ham_spec());
    return a;
}

AlgebraSpec invr_spec() {
    AlgebraSpec s = base_spec("invr", false);
    s.generate_localization_rules();
    return s;
}

const Algebra& invr() {
    static const Algebra a(invr_spec());
    return a;
}

RatCoeff ham_kappa() { return RatCoeff::t(-2) + RatCoeff::q(-2) * RatCoeff::t(2); }

namespace {

// Letter-by-letter substitution into `target`, by generator name.
NcPoly substitute(const NcPoly& x, const Algebra& target, const std::map<std::string, NcPoly>& special) {
    NcPoly out(target.alphabet());
    const Alphabet& al = *x.alphabet();
    std::vector<NcPoly> img(al.size());
    for (size_t l = 0; l < al.size(); ++l) {
        const std::string& n = al.name(Letter(l));
        auto it = special.find(n);
        img[l] = it != special.end() ? it->second : target.gen(n);
    }
    for (auto& [w, c] : x.terms()) {
        NcPoly p = target.one().scaled(c);
        for (Letter l : w) p = target.mul(p, img[l]);
        out += p;
    }
    return out;
}

}  // namespace

NcPoly to_replacement(const NcPoly& x) {
    static const NcPoly w = invr().nf("q^4*(r^2 - (q^-4 + q^-6)*c2*d2 + q^-4*c2*d1^2 + q^-4*c1^2*d2 - q^-2*c1*r*d1)");
    return substitute(x, invr(), {{"w", w}});
}

NcPoly quotient_map(const NcPoly& x) {
    static const NcPoly w = ham().nf(ham().parse("c2*d2").scaled(ham_kappa()));
    return substitute(x, ham(), {{"w", w}});
}

DqElem psibar_generator(const std::string& name) {
    static const std::map<std::string, DqElem> images = [] {
        auto loc = dq_loc();
        std::map<std::string, DqElem> m;
        QMatrix a = to_qmatrix(dq_matrix(Mat::A)), d = to_qmatrix(dq_matrix(Mat::D));
        QMatrix at = to_qmatrix(cofactor(Mat::A).solved), dt = to_qmatrix(cofactor(Mat::D).solved);
        m["c1"] = qtrace(a);
        m["c2"] = loc->denominator(0);
        m["c2i"] = loc->inverse(0);
        m["d1"] = qtrace(d);
        m["d2"] = loc->denominator(1);
        m["d2i"] = loc->inverse(1);
        m["r"] = qtrace(d * a).scaled(RatCoeff::q(2));
        m["w"] = qtrace(d * at * dt * a);
        return m;
    }();
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("no Psibar image for generator '" + name + "'");
    return it->second;
}

DqElem psibar_apply(const NcPoly& x) {
    auto loc = dq_loc();
    const Alphabet& al = *x.alphabet();
    std::vector<DqElem> img;
    for (size_t l = 0; l < al.size(); ++l) img.push_back(psibar_generator(al.name(Letter(l))));
    DqElem out = loc->from(NcPoly(dq().alphabet()));
    for (auto& [w, c] : x.terms()) {
        DqElem p = loc->from(dq().one().scaled(c));
        for (Letter l : w) p = p * img[l];
        out = out + p;
    }
    return out;
}

std::vector<std::pair<std::string, DqElem>> psibar_residuals() {
    std::vector<std::pair<std::string, DqElem>> out;
    for (auto& r : inv().spec().rules())
        if (r.core) out.push_back({r.tag, psibar_apply(NcPoly::monomial(inv().alphabet(), r.lhs) - r.rhs)});
    return out;
}

ImageRank psibar_rank(Bideg d, const std::vector<SpecPoint>& points) {
    std::vector<NcPoly> imgs;
    for (const Word& w : inv().spec().pbw_enumerate(d))
        imgs.push_back(psibar_apply(NcPoly::monomial(inv().alphabet(), w)).body());
    ImageRank r;
    r.count = imgs.size();
    r.rank = rank_of_family(imgs, points);
    return r;
}

int invariant_dimension(Bideg d, const std::vector<SpecPoint>& points) {
    const Algebra& D = dq();
    const Alphabet& al = *D.alphabet();
    std::vector<int> wt(al.size(), 0);
    for (const char* n : {"a12", "p12"}) wt[al.at(n)] = 1;
    for (const char* n : {"a21", "p21"}) wt[al.at(n)] = -1;
    std::vector<NcPoly> fam;
    for (const Word& w : D.spec().pbw_enumerate(d)) {
        int s = 0;
        for (Letter l : w) s += wt[l];
        if (s != 0) continue;
        NcPoly x = NcPoly::monomial(D.alphabet(), w);
        // E(x) and F(x) have weights (1,-1) and (-1,1), so their supports are disjoint
        fam.push_back(adjoint_act(UGen::E, x) + adjoint_act(UGen::F, x));
    }
    if (fam.empty()) return 0;
    RankResult r = rank_of_family(fam, points);
    if (r.agreeing != int(points.size()))
        throw std::runtime_error("invariant dimension at (" + std::to_string(d.m) + "," + std::to_string(d.n) +
                                 ") differs between specializations");
    return int(fam.size()) - r.rank;
}

NcPoly ham_ideal_generator() {
    static const NcPoly z = [] {
        NcPoly w = psibar_generator("w").body();
        return w - dq().mul(detq(Mat::A), detq(Mat::D)).scaled(ham_kappa());
    }();
    return z;
}

Congruence in_zt_ideal(const DqElem& x, const std::vector<SpecPoint>& points) {
    Congruence res;
    if (x.is_zero()) {
        res.verified = true;
        res.multiplier = RatCoeff(0);
        return res;
    }
    const Algebra& D = dq();
    NcPoly z = ham_ideal_generator();
    std::map<std::pair<int, int>, NcPoly> parts;
    for (auto& [w, c] : x.body().terms()) {
        Bideg g = D.alphabet()->degree(w);
        auto [it, _] = parts.try_emplace({g.m, g.n}, NcPoly(D.alphabet()));
        it->second.add_term(w, c);
    }
    res.verified = true;
    for (auto& [deg, b] : parts) {
        Bideg e{deg.first - 2, deg.second - 2};
        if (e.m < 0 || e.n < 0) {
            res.verified = false;
            res.note = "component of bidegree below the generator";
            return res;
        }
        std::vector<NcPoly> fam;
        for (const Word& u : D.spec().pbw_enumerate(e)) fam.push_back(D.mul(NcPoly::monomial(D.alphabet(), u), z));
        if (e.m == 0 && e.n == 0) {
            auto s = span_solve(fam, b);
            if (!s) {
                res.verified = false;
                res.note = "no scalar multiplier";
                return res;
            }
            if (parts.size() == 1) res.multiplier = (*s)[0];
            continue;
        }
        RankResult r0 = rank_of_family(fam, points);
        fam.push_back(b);
        RankResult r1 = rank_of_family(fam, points);
        for (size_t i = 0; i < points.size(); ++i)
            if (r0.per_point[i] != r1.per_point[i]) {
                res.verified = false;
                res.note = "no multiplier in bidegree (" + std::to_string(e.m) + "," + std::to_string(e.n) + ")";
                return res;
            }
        res.note = "checked mod p at " + std::to_string(points.size()) + " points";
    }
    return res;
}

Congruence psi_congruence(const NcPoly& x, const NcPoly& y) { return in_zt_ideal(psi_apply(x) - psi_apply(y)); }

}  // namespace qhc
