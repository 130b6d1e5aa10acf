#pragma once

#include "qhc/daha/daha.hpp"
#include "qhc/invham/invham.hpp"

namespace qhc {

// d1 -> P1, d2 -> q^2 P2, c1 -> Q1, c2 -> q^2 Q2, r -> R (inverses accordingly).
NcPoly hc_generator(const std::string& name);
// ham -> A, normalized in A.
NcPoly hc_apply(const NcPoly& x);
// A -> ham, normalized in ham.
NcPoly hc_inverse(const NcPoly& x);

struct HcRelation {
    std::string tag;
    NcPoly residual;  // NF_A(hc(lhs) - hc(rhs))
    bool ok() const { return residual.is_zero(); }
};
std::vector<HcRelation> hc_relations();

struct HcBasis {
    Bideg deg;
    size_t ham_count = 0, a_count = 0;
    bool bijective = false;  // each word goes to a nonzero multiple of a distinct PBW word of A
    std::vector<RatCoeff> scalars;
};
std::vector<HcBasis> hc_basis(Bideg max);

// For PBW words x, y of the reduction with deg(xy) <= max and NF(xy) = sum c_z z:
// Phi(hc(x)) Phi(hc(y)) = sum c_z Phi(hc(z)) in eHe, and
// Psi(x) Psi(y) - sum c_z Psi(z) lies in the ideal of mu_q(Z_t).
struct HcComposite {
    std::string x, y;
    bool phi_ok = false;
    Congruence psi;
    bool ok() const { return phi_ok && psi.verified; }
};
std::vector<HcComposite> hc_composite(Bideg max);

struct HcReport {
    std::vector<HcRelation> relations;
    std::vector<HcBasis> basis;
    std::vector<HcComposite> composite;
    bool ok() const;
};
HcReport hc_verify(Bideg basis_max = {4, 4}, Bideg composite_max = {2, 2});

}  // namespace qhc
