#include "qhc/hciso/hciso.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace qhc {

namespace {

NcPoly substitute(const NcPoly& x, const Algebra& target, const std::vector<NcPoly>& img) {
    NcPoly out(target.alphabet());
    for (auto& [w, c] : x.terms()) {
        NcPoly p = target.one().scaled(c);
        for (Letter l : w) p = target.mul(p, img[l]);
        out += p;
    }
    return out;
}

const std::map<std::string, std::pair<std::string, int>>& forward() {
    static const std::map<std::string, std::pair<std::string, int>> m = {
        {"c1", {"Q1", 0}}, {"c2", {"Q2", 2}},  {"c2i", {"Q2i", -2}}, {"r", {"R", 0}},
        {"d1", {"P1", 0}}, {"d2", {"P2", 2}},  {"d2i", {"P2i", -2}}};
    return m;
}

}  // namespace

NcPoly hc_generator(const std::string& name) {
    auto it = forward().find(name);
    if (it == forward().end()) throw std::invalid_argument("no HC image for generator '" + name + "'");
    return sdaha().gen(it->second.first).scaled(RatCoeff::q(it->second.second));
}

NcPoly hc_apply(const NcPoly& x) {
    NcPoly::check_same(x.alphabet(), ham().alphabet());
    static const std::vector<NcPoly> img = [] {
        std::vector<NcPoly> v;
        const Alphabet& al = *ham().alphabet();
        for (size_t l = 0; l < al.size(); ++l) v.push_back(hc_generator(al.name(Letter(l))));
        return v;
    }();
    return substitute(x, sdaha(), img);
}

NcPoly hc_inverse(const NcPoly& x) {
    NcPoly::check_same(x.alphabet(), sdaha().alphabet());
    static const std::vector<NcPoly> img = [] {
        std::vector<NcPoly> v(sdaha().alphabet()->size());
        for (auto& [h, a] : forward()) v[sdaha().alphabet()->at(a.first)] = ham().gen(h).scaled(RatCoeff::q(-a.second));
        return v;
    }();
    return substitute(x, ham(), img);
}

std::vector<HcRelation> hc_relations() {
    std::vector<HcRelation> out;
    for (auto& r : ham().spec().rules()) {
        if (!r.core) continue;
        NcPoly lhs = NcPoly::monomial(ham().alphabet(), r.lhs);
        out.push_back({r.tag, sdaha().nf(hc_apply(lhs) - hc_apply(r.rhs))});
    }
    return out;
}

std::vector<HcBasis> hc_basis(Bideg max) {
    std::vector<HcBasis> out;
    for (int m = 0; m <= max.m; ++m)
        for (int n = 0; n <= max.n; ++n) {
            HcBasis b;
            b.deg = {m, n};
            auto hw = ham().spec().pbw_enumerate({m, n});
            auto aw = sdaha().spec().pbw_enumerate({m, n});
            b.ham_count = hw.size();
            b.a_count = aw.size();
            std::set<Word> targets(aw.begin(), aw.end()), hit;
            bool ok = hw.size() == aw.size();
            for (const Word& w : hw) {
                NcPoly img = hc_apply(NcPoly::monomial(ham().alphabet(), w));
                if (img.terms().size() != 1) {
                    ok = false;
                    continue;
                }
                auto& [v, c] = *img.terms().begin();
                if (!targets.count(v) || !hit.insert(v).second) ok = false;
                b.scalars.push_back(c);
            }
            b.bijective = ok && hit.size() == targets.size();
            out.push_back(std::move(b));
        }
    return out;
}

std::vector<HcComposite> hc_composite(Bideg max) {
    std::vector<Word> words;
    for (int m = 0; m <= max.m; ++m)
        for (int n = 0; n <= max.n; ++n)
            if (m + n > 0)
                for (const Word& w : ham().spec().pbw_enumerate({m, n})) words.push_back(w);
    const AlphaPtr& al = ham().alphabet();
    std::map<Word, NcPoly> phi_cache;
    auto phi = [&](const Word& w) -> const NcPoly& {
        auto it = phi_cache.find(w);
        if (it == phi_cache.end())
            it = phi_cache.emplace(w, phi_apply(hc_apply(NcPoly::monomial(al, w)))).first;
        return it->second;
    };
    std::vector<HcComposite> out;
    for (const Word& x : words)
        for (const Word& y : words) {
            Bideg d = al->degree(x) + al->degree(y);
            if (d.m > max.m || d.n > max.n) continue;
            NcPoly xy = ham().nf(NcPoly::monomial(al, x + y));
            HcComposite c{al->str(x), al->str(y)};
            NcPoly lhs = daha().mul(phi(x), phi(y));
            NcPoly rhs(daha().alphabet());
            DqElem psi_rhs = dq_loc()->from(NcPoly(dq().alphabet()));
            for (auto& [z, cz] : xy.terms()) {
                rhs += phi(z).scaled(cz);
                psi_rhs = psi_rhs + psi_apply(NcPoly::monomial(al, z, cz));
            }
            c.phi_ok = lhs == rhs;
            c.psi = in_zt_ideal(psi_apply(NcPoly::monomial(al, x)) * psi_apply(NcPoly::monomial(al, y)) - psi_rhs);
            out.push_back(std::move(c));
        }
    return out;
}

bool HcReport::ok() const {
    for (auto& r : relations)
        if (!r.ok()) return false;
    for (auto& b : basis)
        if (!b.bijective) return false;
    for (auto& c : composite)
        if (!c.ok()) return false;
    return true;
}

HcReport hc_verify(Bideg basis_max, Bideg composite_max) {
    HcReport r;
    r.relations = hc_relations();
    r.basis = hc_basis(basis_max);
    if (composite_max.m >= 0 && composite_max.n >= 0) r.composite = hc_composite(composite_max);
    return r;
}

}  // namespace qhc
