#include "qhc/qgroup/qgroup.hpp"

namespace qhc {

RMatrix identity_matrix(size_t n) {
    RMatrix m(n, RatCoeff());
    for (size_t i = 0; i < n; ++i) m(i, i) = RatCoeff(1);
    return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    RMatrix r(a.n, RatCoeff());
    for (size_t i = 0; i < a.n; ++i)
        for (size_t k = 0; k < a.n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (size_t j = 0; j < a.n; ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
    RMatrix r(a.n * b.n, RatCoeff());
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < b.n; ++k)
                for (size_t l = 0; l < b.n; ++l) r(i * b.n + k, j * b.n + l) = a(i, j) * b(k, l);
    return r;
}

RMatrix inverse(const RMatrix& m) {
    size_t n = m.n;
    RMatrix a = m, r = identity_matrix(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw DivisionByZero();
        for (size_t j = 0; j < n; ++j) {
            std::swap(a(c, j), a(p, j));
            std::swap(r(c, j), r(p, j));
        }
        RatCoeff inv = a(c, c).inverse();
        for (size_t j = 0; j < n; ++j) {
            a(c, j) *= inv;
            r(c, j) *= inv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            RatCoeff f = a(i, c);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                r(i, j) -= f * r(c, j);
            }
        }
    }
    return r;
}

RMatrix flip_matrix() {
    RMatrix p(4, RatCoeff());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) p(j * 2 + i, i * 2 + j) = RatCoeff(1);
    return p;
}

const VectorRep& vector_rep() {
    static const VectorRep v = [] {
        VectorRep r;
        r.K1 = identity_matrix(2);
        r.K1(0, 0) = RatCoeff::q(-1);
        r.K2 = identity_matrix(2);
        r.K2(1, 1) = RatCoeff::q(-1);
        r.E = RMatrix(2, RatCoeff());
        r.E(1, 0) = RatCoeff(1);
        r.F = RMatrix(2, RatCoeff());
        r.F(0, 1) = RatCoeff(1);
        // read the weights off the diagonal of K1, K2
        for (int v = 0; v < 2; ++v)
            for (int i = 0; i < 2; ++i) {
                const RatCoeff& d = (i == 0 ? r.K1 : r.K2)(v, v);
                int e = -3;
                while (e <= 3 && d != RatCoeff::q(e)) ++e;
                if (e > 3) throw std::logic_error("vector representation: K is not a q-power");
                r.weight[v][i] = e;
            }
        return r;
    }();
    return v;
}

RMatrix rmatrix_vector() {
    const VectorRep& v = vector_rep();
    if (!(v.E * v.E == RMatrix(2, RatCoeff())) ) throw std::logic_error("rho_V(E) is not nilpotent");
    RMatrix h(4, RatCoeff());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            h(a * 2 + b, a * 2 + b) = RatCoeff::q(v.weight[a][0] * v.weight[b][0] + v.weight[a][1] * v.weight[b][1]);
    RMatrix series = identity_matrix(4);
    RMatrix ef = kron(v.E, v.F);
    RatCoeff c = RatCoeff::q() - RatCoeff::q(-1);
    for (size_t i = 0; i < series.e.size(); ++i) series.e[i] += c * ef.e[i];
    return h * series;
}

RMatrix rmatrix_21() {
    RMatrix p = flip_matrix();
    return p * rmatrix_vector() * p;
}

std::vector<RatCoeff> yang_baxter_residual(const RMatrix& r) {
    RMatrix i2 = identity_matrix(2);
    RMatrix r12 = kron(r, i2), r23 = kron(i2, r);
    RMatrix p23 = kron(i2, flip_matrix());
    RMatrix r13 = p23 * r12 * p23;
    RMatrix lhs = r12 * r13 * r23, rhs = r23 * r13 * r12;
    std::vector<RatCoeff> out;
    for (size_t i = 0; i < lhs.e.size(); ++i) out.push_back(lhs.e[i] - rhs.e[i]);
    return out;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, const PolyMul& mul) {
    PolyMatrix r(a.n, NcPoly());
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j) {
            NcPoly s;
            for (size_t k = 0; k < a.n; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                s += mul(a(i, k), b(k, j));
            }
            r(i, j) = s;
        }
    return r;
}

PolyMatrix lift(const RMatrix& r, const AlphaPtr& al) {
    PolyMatrix m(r.n, NcPoly(al));
    for (size_t i = 0; i < r.e.size(); ++i) m.e[i] = NcPoly::scalar(al, r.e[i]);
    return m;
}

PolyMatrix leg1(const PolyMatrix& l) {
    PolyMatrix m(4, NcPoly());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) m(i * 2 + k, j * 2 + k) = l(i, j);
    return m;
}

PolyMatrix leg2(const PolyMatrix& l) {
    PolyMatrix m(4, NcPoly());
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k)
            for (size_t l2 = 0; l2 < 2; ++l2) m(i * 2 + k, i * 2 + l2) = l(k, l2);
    return m;
}

PolyMul free_mul() {
    return [](const NcPoly& a, const NcPoly& b) { return a * b; };
}

PolyMul algebra_mul(const Algebra& alg) {
    return [&alg](const NcPoly& a, const NcPoly& b) { return alg.mul(a, b); };
}

}  // namespace qhc
