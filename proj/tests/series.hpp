#pragma once

// Coefficients of the bigraded Hilbert series, expanded independently of the
// rewriting engine by counting exponent tuples.
namespace series {

// (1+uv)/((1-u)(1-u^2)(1-v)(1-v^2))
inline long spherical(int m, int n) {
    long c = 0;
    for (int eps = 0; eps <= 1; ++eps)
        for (int a2 = 0; 2 * a2 + eps <= m; ++a2)
            for (int b2 = 0; 2 * b2 + eps <= n; ++b2) ++c;  // a1, b1 are then determined
    return c;
}

// 1/((1-u)(1-v)(1-u^2)(1-v^2)(1-uv))
inline long invariant(int m, int n) {
    long c = 0;
    for (int k = 0; k <= m && k <= n; ++k)
        for (int a2 = 0; 2 * a2 + k <= m; ++a2)
            for (int b2 = 0; 2 * b2 + k <= n; ++b2) ++c;
    return c;
}

}  // namespace series
