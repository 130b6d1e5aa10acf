#pragma once

#include "qhc/coeff/ratcoeff.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace qhc {

// Prime field F_p with p = 2^31 - 1.
class Fp {
public:
    static constexpr uint32_t P = 2147483647u;

    Fp() = default;
    Fp(int64_t v) : v_(uint32_t(((v % int64_t(P)) + P) % P)) {}  // NOLINT
    static Fp raw(uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(Fp a, Fp b) {
        uint32_t s = a.v_ + b.v_;
        return raw(s >= P ? s - P : s);
    }
    friend Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
    Fp operator-() const { return raw(v_ ? P - v_ : 0); }
    friend Fp operator*(Fp a, Fp b) { return raw(reduce(uint64_t(a.v_) * b.v_)); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp pow(int64_t e) const;
    Fp inverse() const;
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    std::string str() const { return std::to_string(v_); }

    // Mersenne reduction of a product of two residues.
    static uint32_t reduce(uint64_t x) {
        x = (x & P) + (x >> 31);
        x = (x & P) + (x >> 31);
        return uint32_t(x >= P ? x - P : x);
    }

private:
    uint32_t v_ = 0;
};

Fp to_fp(const Integer& c);
Fp eval_fp(const Laurent& p, Fp q0, Fp t0);
// Specialization of a rational function; throws EvalError when the
// denominator vanishes at (q0, t0).
Fp eval_fp(const RatCoeff& c, Fp q0, Fp t0);

}  // namespace qhc

template <>
struct std::hash<qhc::Fp> {
    size_t operator()(qhc::Fp f) const { return std::hash<uint32_t>{}(f.value()); }
};
