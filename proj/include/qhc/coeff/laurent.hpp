#pragma once

#include "qhc/coeff/integer.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qhc {

// Exponent pair (q^qe t^te) packed into one word so that monomial product is
// integer addition. Field order puts t in the high half.
struct MonoKey {
    static constexpr int64_t kBias = int64_t(1) << 30;
    static constexpr uint64_t kZero = (uint64_t(kBias) << 32) | uint64_t(kBias);

    static uint64_t pack(int qe, int te) {
        return (uint64_t(te + kBias) << 32) | uint64_t(qe + kBias);
    }
    static int qe(uint64_t k) { return int(int64_t(k & 0xffffffffu) - kBias); }
    static int te(uint64_t k) { return int(int64_t(k >> 32) - kBias); }
    static uint64_t mul(uint64_t a, uint64_t b) { return a + b - kZero; }
};

// Sparse Laurent polynomial in q, t with integer coefficients.
class Laurent {
public:
    using Term = std::pair<uint64_t, Integer>;

    Laurent() = default;
    Laurent(int64_t c) { if (c) terms_.emplace_back(MonoKey::kZero, Integer(c)); }  // NOLINT
    Laurent(const Integer& c) { if (!c.is_zero()) terms_.emplace_back(MonoKey::kZero, c); }  // NOLINT
    static Laurent monomial(const Integer& c, int qe, int te);
    static Laurent q(int e = 1) { return monomial(1, e, 0); }
    static Laurent t(int e = 1) { return monomial(1, 0, e); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == MonoKey::kZero && terms_[0].second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == MonoKey::kZero);
    }
    size_t size() const { return terms_.size(); }

    int min_qe() const;
    int min_te() const;
    int max_qe() const;
    int max_te() const;
    // Multiply by q^qe t^te.
    Laurent shifted(int qe, int te) const;
    Integer content() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Integer& c);
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent pow(unsigned n) const;
    // Exact division of every coefficient by an integer.
    Laurent divexact(const Integer& c) const;

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    size_t hash() const;

    // Leading term under graded-lex with q < t (total degree, then t-degree).
    const Term& leading() const;

    std::string str() const;

    static Laurent from_sorted(std::vector<Term> t) {
        Laurent l;
        l.terms_ = std::move(t);
        return l;
    }

private:
    std::vector<Term> terms_;  // strictly increasing keys, nonzero coefficients
};

}  // namespace qhc
