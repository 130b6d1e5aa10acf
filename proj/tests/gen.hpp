#pragma once

#include "qhc/coeff/ratcoeff.hpp"

#include <random>

namespace qhc::testgen {

// Deterministic generators for property tests.
inline Laurent laurent(std::mt19937_64& g, int terms = 3, int span = 3) {
    std::uniform_int_distribution<int> e(-span, span), c(-5, 5), n(0, terms);
    Laurent r;
    int k = n(g);
    for (int i = 0; i < k; ++i) r += Laurent::monomial(Integer(c(g)), e(g), e(g));
    return r;
}

inline Laurent denominator(std::mt19937_64& g) {
    static const Laurent pool[] = {
        Laurent(1),
        Laurent(1) + Laurent::t(2),
        Laurent::q(1) - Laurent(1),
        Laurent::t(2) - Laurent(1),
        Laurent::q(2) + Laurent::t(1),
        Laurent(3),
        Laurent::q(2) - Laurent::t(2),
    };
    std::uniform_int_distribution<int> i(0, int(std::size(pool)) - 1), k(0, 2);
    Laurent d(1);
    int n = k(g);
    for (int j = 0; j < n; ++j) d = d * pool[i(g)];
    return d;
}

inline RatCoeff ratcoeff(std::mt19937_64& g) {
    return RatCoeff::fraction(laurent(g), denominator(g));
}

inline RatCoeff nonzero_ratcoeff(std::mt19937_64& g) {
    RatCoeff c = ratcoeff(g);
    return c.is_zero() ? RatCoeff(1) : c;
}

}  // namespace qhc::testgen
