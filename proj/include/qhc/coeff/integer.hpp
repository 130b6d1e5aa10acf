#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace qhc {

// Signed integer with an int64 fast path. Values that do not fit are held in
// a heap mpz; results are demoted back to the small form whenever they fit.
class Integer {
public:
    Integer() = default;
    Integer(int64_t v) : small_(v) {}  // NOLINT
    explicit Integer(const mpz_class& z) { assign(z); }
    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    bool is_small() const { return !big_; }
    int64_t small() const { return small_; }
    mpz_class to_mpz() const;

    int sign() const;
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    // Exact division; the caller guarantees divisibility.
    static Integer divexact(const Integer& a, const Integer& b);
    // Truncated quotient and remainder.
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r);
    static Integer gcd(const Integer& a, const Integer& b);
    Integer abs() const { return sign() < 0 ? -*this : *this; }

    // Residue in [0, p).
    uint32_t mod(uint32_t p) const;

    friend bool operator==(const Integer& a, const Integer& b);
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    static int cmp(const Integer& a, const Integer& b);
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }

    std::string str() const;
    size_t hash() const;

private:
    void assign(const mpz_class& z);
    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace qhc
