#include "qhc/rewrite/localized.hpp"

#include "qhc/ncpoly/parse.hpp"

namespace qhc {

namespace {

std::map<Bideg, NcPoly> split_by_degree(const NcPoly& p) {
    std::map<Bideg, NcPoly> out;
    for (auto& [w, c] : p.terms()) {
        auto [it, fresh] = out.try_emplace(p.alphabet()->degree(w), p.alphabet());
        it->second.add_term(w, c);
    }
    return out;
}

std::vector<int> neg(const std::vector<int>& a) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

}  // namespace

Localization::Localization(const Algebra& a, std::vector<Denominator> dens) : alg_(&a), dens_(std::move(dens)) {
    size_t m = dens_.size();
    c_.assign(m, std::vector<int>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) c_[i][j] = pair(dens_[i].kappa, dens_[j].deg);
    powers_.resize(m);
    for (size_t i = 0; i < m; ++i) {
        dens_[i].elem = a.nf(dens_[i].elem);
        powers_[i] = {a.one(), dens_[i].elem};
    }
}

std::shared_ptr<const Localization> Localization::make(const Algebra& a, std::vector<Denominator> dens) {
    return std::shared_ptr<const Localization>(new Localization(a, std::move(dens)));
}

size_t Localization::index(const std::string& name) const {
    for (size_t i = 0; i < dens_.size(); ++i)
        if (dens_[i].name == name) return i;
    throw std::invalid_argument("unknown denominator " + name);
}

const NcPoly& Localization::power(size_t i, int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    std::lock_guard lock(mu_);
    auto& v = powers_.at(i);
    while (int(v.size()) <= e) v.push_back(alg_->mul(v.back(), dens_[i].elem));
    return v[e];
}

int Localization::sigma(const std::vector<int>& a, const std::vector<int>& b) const {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < i; ++j) s += a[i] * b[j] * c_[i][j];
    return s;
}

int Localization::shift(const std::vector<int>& k, Bideg d) const {
    int s = 0;
    for (size_t i = 0; i < k.size(); ++i) s += k[i] * pair(dens_[i].kappa, d);
    return s;
}

NcPoly Localization::monomial(const std::vector<int>& e) const {
    NcPoly r = alg_->one();
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) r = alg_->mul(r, power(i, e[i]));
    return r;
}

LocalizedElem Localization::from(const NcPoly& body) const {
    return {shared_from_this(), std::vector<int>(dens_.size(), 0), alg_->nf(body)};
}

LocalizedElem Localization::inverse(size_t i) const {
    std::vector<int> k(dens_.size(), 0);
    k.at(i) = 1;
    return {shared_from_this(), k, alg_->one()};
}

LocalizedElem Localization::denominator(size_t i) const { return from(dens_.at(i).elem); }

LocalizedElem Localization::parse(std::string_view src) const {
    ExprHooks<NcPoly> base = ncpoly_hooks(alg_->alphabet());
    ExprHooks<LocalizedElem> h;
    h.scalar = [&](const RatCoeff& c) { return from(NcPoly::scalar(alg_->alphabet(), c)); };
    h.symbol = [&](const Token& tok, int e) -> std::optional<LocalizedElem> {
        for (size_t i = 0; i < dens_.size(); ++i) {
            int sign = 0;
            if (tok.text == dens_[i].name) sign = 1;
            else if (tok.text == dens_[i].name + "i") sign = -1;
            if (sign == 0) continue;
            e *= sign;
            LocalizedElem g = e < 0 ? inverse(i) : denominator(i);
            LocalizedElem r = from(alg_->one());
            for (int k = 0; k < std::abs(e); ++k) r = r * g;
            return r;
        }
        auto p = base.symbol(tok, e);
        if (!p) return std::nullopt;
        return from(*p);
    };
    h.as_scalar = [&](const LocalizedElem& x) -> std::optional<RatCoeff> {
        for (int k : x.exponents())
            if (k != 0) return std::nullopt;
        return base.as_scalar(x.body());
    };
    return ExprParser<LocalizedElem>(src, h).parse();
}

std::vector<std::string> Localization::verify() const {
    std::vector<std::string> bad;
    const Alphabet& al = *alg_->alphabet();
    for (auto& d : dens_) {
        if (d.elem.bidegree_of().kind == NcPoly::Grading::Mixed) bad.push_back(d.name + " is not homogeneous");
        for (size_t l = 0; l < al.size(); ++l) {
            NcPoly x = NcPoly::monomial(alg_->alphabet(), Word(1, Letter(l)));
            int e = pair(d.kappa, al.gen(Letter(l)).deg);
            if (alg_->mul(d.elem, x) != alg_->mul(x, d.elem).scaled(RatCoeff::q(e)))
                bad.push_back(d.name + " vs " + al.gen(Letter(l)).name);
        }
    }
    return bad;
}

LocalizedElem LocalizedElem::lifted(const std::vector<int>& k) const {
    if (k == k_) return *this;
    std::vector<int> extra(k.size());
    for (size_t i = 0; i < k.size(); ++i) {
        extra[i] = k[i] - k_[i];
        if (extra[i] < 0) throw std::invalid_argument("lift to a smaller denominator");
    }
    // G^{-a} = q^{-sigma(-k, k-a)} G^{-k} G^{k-a}
    int e = -ctx_->sigma(neg(k), extra);
    NcPoly b = ctx_->algebra().mul(ctx_->monomial(extra), body_).scaled(RatCoeff::q(e));
    return {ctx_, k, b};
}

namespace {

void same_context(const LocalizedElem& a, const LocalizedElem& b) {
    if (&a.context() != &b.context()) throw AlgebraMismatch("localization", "localization");
}

std::vector<int> vmax(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

}  // namespace

LocalizedElem operator+(const LocalizedElem& a, const LocalizedElem& b) {
    same_context(a, b);
    auto k = vmax(a.k_, b.k_);
    return {a.ctx_, k, a.lifted(k).body_ + b.lifted(k).body_};
}

LocalizedElem operator-(const LocalizedElem& a, const LocalizedElem& b) {
    same_context(a, b);
    auto k = vmax(a.k_, b.k_);
    return {a.ctx_, k, a.lifted(k).body_ - b.lifted(k).body_};
}

LocalizedElem operator*(const LocalizedElem& a, const LocalizedElem& b) {
    same_context(a, b);
    const Localization& L = *a.ctx_;
    std::vector<int> k(a.k_.size());
    for (size_t i = 0; i < k.size(); ++i) k[i] = a.k_[i] + b.k_[i];
    int base = L.sigma(neg(a.k_), neg(b.k_));
    NcPoly body(L.algebra().alphabet());
    for (auto& [d, part] : split_by_degree(a.body_))
        body += L.algebra().mul(part, b.body_).scaled(RatCoeff::q(base + L.shift(b.k_, d)));
    return {a.ctx_, k, body};
}

std::string LocalizedElem::str() const {
    std::string s;
    for (size_t i = 0; i < k_.size(); ++i)
        if (k_[i] != 0) s += ctx_->denominators()[i].name + "^" + std::to_string(-k_[i]) + "*";
    if (s.empty()) return body_.str();
    return s + "(" + body_.str() + ")";
}

}  // namespace qhc
