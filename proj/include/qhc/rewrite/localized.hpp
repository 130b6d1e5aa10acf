#pragma once

#include "qhc/rewrite/engine.hpp"

#include <memory>

namespace qhc {

// A homogeneous q-central element g of an algebra: g h = q^{<kappa, deg h>} h g.
struct Denominator {
    std::string name;
    NcPoly elem;
    Bideg deg;
    Bideg kappa;
};

class LocalizedElem;

// Ore localization of an algebra at q-central elements g_1..g_m. Elements are
// g_1^{-k_1} ... g_m^{-k_m} * body with the denominators kept on the left.
class Localization : public std::enable_shared_from_this<Localization> {
public:
    static std::shared_ptr<const Localization> make(const Algebra& a, std::vector<Denominator> dens);

    const Algebra& algebra() const { return *alg_; }
    const std::vector<Denominator>& denominators() const { return dens_; }
    size_t index(const std::string& name) const;

    LocalizedElem from(const NcPoly& body) const;
    LocalizedElem inverse(size_t i) const;  // g_i^{-1}
    LocalizedElem denominator(size_t i) const;  // g_i
    // Expression over the algebra's generators plus each denominator name and
    // its inverse (name followed by "i").
    LocalizedElem parse(std::string_view src) const;

    // NF(g_i^e), e >= 0, cached
    const NcPoly& power(size_t i, int e) const;
    // G^a G^b = q^{sigma(a,b)} G^{a+b} for ordered monomials G^a
    int sigma(const std::vector<int>& a, const std::vector<int>& b) const;
    // h G^{-k} = q^{shift(k, deg h)} G^{-k} h for homogeneous h
    int shift(const std::vector<int>& k, Bideg d) const;
    // G^{e} for e >= 0 as a normal-form polynomial
    NcPoly monomial(const std::vector<int>& e) const;

    // Failures of the declared q-commutation against each generator letter.
    std::vector<std::string> verify() const;

private:
    Localization(const Algebra& a, std::vector<Denominator> dens);
    const Algebra* alg_;
    std::vector<Denominator> dens_;
    std::vector<std::vector<int>> c_;  // g_i g_j = q^{c_ij} g_j g_i
    mutable std::vector<std::vector<NcPoly>> powers_;
    mutable std::mutex mu_;
};

class LocalizedElem {
public:
    LocalizedElem() = default;
    LocalizedElem(std::shared_ptr<const Localization> ctx, std::vector<int> k, NcPoly body)
        : ctx_(std::move(ctx)), k_(std::move(k)), body_(std::move(body)) {}

    const std::vector<int>& exponents() const { return k_; }
    const NcPoly& body() const { return body_; }
    const Localization& context() const { return *ctx_; }

    // Same element with denominator exponents raised to k (componentwise >= current).
    LocalizedElem lifted(const std::vector<int>& k) const;

    bool is_zero() const { return body_.is_zero(); }
    LocalizedElem scaled(const RatCoeff& c) const { return {ctx_, k_, body_.scaled(c)}; }
    LocalizedElem map_body(const std::function<NcPoly(const NcPoly&)>& f) const { return {ctx_, k_, f(body_)}; }

    friend LocalizedElem operator+(const LocalizedElem& a, const LocalizedElem& b);
    friend LocalizedElem operator-(const LocalizedElem& a, const LocalizedElem& b);
    friend LocalizedElem operator*(const LocalizedElem& a, const LocalizedElem& b);
    friend bool operator==(const LocalizedElem& a, const LocalizedElem& b) { return (a - b).is_zero(); }

    std::string str() const;

private:
    std::shared_ptr<const Localization> ctx_;
    std::vector<int> k_;
    NcPoly body_;
};

}  // namespace qhc
