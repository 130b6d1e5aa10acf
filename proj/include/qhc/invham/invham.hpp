#pragma once

#include "qhc/dqops/dqops.hpp"

#include <optional>

namespace qhc {

// B: c1, c2^{+-1}, r, d1, d2^{+-1}, w with normal words c1^a1 c2^a2 r^e d1^b1 d2^b2 w^c.
AlgebraSpec inv_spec();
const Algebra& inv();

// The reduction B / B(w - (t^-2 + q^-2 t^2) c2 d2) on c1, c2^{+-1}, r, d1, d2^{+-1}.
AlgebraSpec ham_spec();
const Algebra& ham();

// The relations of B not involving w, minus the r^2 rule. Its normal words
// c1^a1 c2^a2 r^d d1^b1 d2^b2 form the replacement basis of B.
AlgebraSpec invr_spec();
const Algebra& invr();
// B -> invr, w -> q^4 (r^2 - (q^-4 + q^-6) c2 d2 + q^-4 c2 d1^2 + q^-4 c1^2 d2 - q^-2 c1 r d1)
NcPoly to_replacement(const NcPoly& x);

// t^-2 + q^-2 t^2, the scalar in the ideal generator
RatCoeff ham_kappa();
// B -> ham, w -> kappa c2 d2
NcPoly quotient_map(const NcPoly& x);

// c1 -> tr_q(A), c2 -> det_q(A), d1 -> tr_q(D), d2 -> det_q(D), r -> q^2 tr_q(DA),
// w -> tr_q(D Atilde Dtilde A); accepts elements of inv, ham or invr.
DqElem psibar_generator(const std::string& name);
DqElem psibar_apply(const NcPoly& x);
// Psi on ham is the same dictionary.
inline DqElem psi_apply(const NcPoly& x) { return psibar_apply(x); }

// Psibar(lhs - rhs) for each defining relation of B, tagged.
std::vector<std::pair<std::string, DqElem>> psibar_residuals();
// Rank of the images of the PBW words of B+ in bidegree d; independent iff rank == count.
struct ImageRank {
    size_t count = 0;
    RankResult rank;
};
ImageRank psibar_rank(Bideg d, const std::vector<SpecPoint>& points = default_points());

// dim of the U-invariants of D_q+ in bidegree d: weight-zero PBW words, then
// the joint kernel of E and F. Throws std::runtime_error if the points disagree.
int invariant_dimension(Bideg d, const std::vector<SpecPoint>& points = default_points());

// Psibar(w - kappa c2 d2) = tr_q(D Atilde Dtilde A) - kappa det_q(A) det_q(D), a D_q+ element;
// mu_q(Z_t) = detA^-1 detD^-1 times it.
NcPoly ham_ideal_generator();

struct Congruence {
    bool verified = false;
    // set when the element is a scalar multiple of the ideal generator
    std::optional<RatCoeff> multiplier;
    std::string note;
};
// Membership of x in the left ideal D_q z, z = ham_ideal_generator(), with the
// multiplier of each homogeneous component searched in D_q+ of bidegree deg - (2,2).
Congruence in_zt_ideal(const DqElem& x, const std::vector<SpecPoint>& points = default_points());
// Psi(x) - Psi(y) in the ideal, for x, y in ham.
Congruence psi_congruence(const NcPoly& x, const NcPoly& y);

}  // namespace qhc
