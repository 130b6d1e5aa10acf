#include "qhc/coeff/integer.hpp"

#include <functional>

namespace qhc {

namespace {

mpz_class from_i64(int64_t v) {
    mpz_class z;
    // mpz_set_si takes long; long is 64-bit on the supported targets.
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

void Integer::assign(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
        small_ = mpz_get_si(z.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

int Integer::sign() const {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    Integer r;
    r.assign(-to_mpz());
    return r;
}

Integer& Integer::operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t out;
        if (!__builtin_add_overflow(small_, o.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t out;
        if (!__builtin_sub_overflow(small_, o.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t out;
        if (!__builtin_mul_overflow(small_, o.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1))
        return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_class za = a.to_mpz(), zb = b.to_mpz();
    mpz_divexact(q.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return Integer(q);
}

void Integer::divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
        q = Integer(a.small_ / b.small_);
        r = Integer(a.small_ % b.small_);
        return;
    }
    mpz_class zq, zr;
    mpz_class za = a.to_mpz(), zb = b.to_mpz();
    mpz_tdiv_qr(zq.get_mpz_t(), zr.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    q = Integer(zq);
    r = Integer(zr);
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
        uint64_t x = static_cast<uint64_t>(a.small_ < 0 ? -a.small_ : a.small_);
        uint64_t y = static_cast<uint64_t>(b.small_ < 0 ? -b.small_ : b.small_);
        while (y) {
            uint64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(static_cast<int64_t>(x));
    }
    mpz_class g;
    mpz_class za = a.to_mpz(), zb = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return Integer(g);
}

uint32_t Integer::mod(uint32_t p) const {
    if (!big_) {
        int64_t r = small_ % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    return static_cast<uint32_t>(mpz_fdiv_ui(big_->get_mpz_t(), p));
}

bool operator==(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) return a.small_ == b.small_;
    if (a.is_small() != b.is_small()) return false;  // both are normalized
    return *a.big_ == *b.big_;
}

int Integer::cmp(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) return (a.small_ > b.small_) - (a.small_ < b.small_);
    return mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
}

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

size_t Integer::hash() const {
    if (!big_) return std::hash<int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

}  // namespace qhc
