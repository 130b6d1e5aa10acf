#pragma once

#include "qhc/rewrite/engine.hpp"

namespace qhc {

// The DAHA of GL2: T^{+-1}, Y1^{+-1}, Y2^{+-1}, X1^{+-1}, X2^{+-1}, normal words
// T^e Y1^a Y2^b X1^c X2^d.
AlgebraSpec daha_spec();

// A candidate reordering lhs -> rhs, accepted only if `check` (with % replaced
// by rhs) reduces to `target` under the rules already in the spec. In rhs the
// symbol c abbreviates t - t^-1.
struct DerivedRule {
    std::string lhs, rhs, check, target;
};
// Validates all candidates against the current rules, then adds them; throws
// InvalidRule naming the first failing pair.
void accept_derived(AlgebraSpec& s, const std::vector<DerivedRule>& rules);
std::string expand_c(const char* src);
const Algebra& daha();

// e = (1 + tT)/(1 + t^2)
NcPoly daha_idempotent();
// NF(e h e)
NcPoly idempotent_sandwich(const NcPoly& h);

// The spherical algebra A: generators P1, P2^{+-1}, Q1, Q2^{+-1}, R.
AlgebraSpec sdaha_spec();
const Algebra& sdaha();

// Image in the DAHA of a generator of A before the e-sandwich.
NcPoly phi_generator(const std::string& name);
// Phi: A -> eHe, extended multiplicatively and linearly. Phi(1) = e.
NcPoly phi_apply(const NcPoly& x);

// Rank of the Phi-images of the PBW basis of A+ in bidegree d.
RankResult phi_rank(Bideg d, const std::vector<SpecPoint>& points = default_points());
// dim e H+[d] e as the rank of the sandwiched PBW basis of H+ in bidegree d.
RankResult spherical_dimension(Bideg d, const std::vector<SpecPoint>& points = default_points());

}  // namespace qhc
