#pragma once

#include "qhc/rewrite/engine.hpp"
#include "qhc/rewrite/localized.hpp"

#include <array>
#include <functional>

namespace qhc {

// Square matrices with entries in a ring; used for R-matrices (RatCoeff) and
// L-, A-, D-matrices (NcPoly).
template <class T>
struct SqMat {
    size_t n = 0;
    std::vector<T> e;
    SqMat() = default;
    SqMat(size_t n_, const T& fill) : n(n_), e(n_ * n_, fill) {}
    T& operator()(size_t i, size_t j) { return e[i * n + j]; }
    const T& operator()(size_t i, size_t j) const { return e[i * n + j]; }
    friend bool operator==(const SqMat& a, const SqMat& b) { return a.n == b.n && a.e == b.e; }
};

using RMatrix = SqMat<RatCoeff>;
using PolyMatrix = SqMat<NcPoly>;

RMatrix identity_matrix(size_t n);
RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix kron(const RMatrix& a, const RMatrix& b);
RMatrix inverse(const RMatrix& a);  // throws DivisionByZero when singular
RMatrix flip_matrix();              // P(x ⊗ y) = y ⊗ x on V ⊗ V

// The vector representation on the ordered basis (e_-1, e_1).
struct VectorRep {
    RMatrix K1, K2, E, F;
    // exponent of q by which K_i acts on each basis vector
    std::array<std::array<int, 2>, 2> weight;
};
const VectorRep& vector_rep();

// (rho_V ⊗ rho_V)(R) on (e-1⊗e-1, e-1⊗e1, e1⊗e-1, e1⊗e1), from q^{H⊗H} and
// the E⊗F series truncated by nilpotence.
RMatrix rmatrix_vector();
RMatrix rmatrix_21();
// R12 R13 R23 - R23 R13 R12, all 64 entries
std::vector<RatCoeff> yang_baxter_residual(const RMatrix& r);

// Matrix of NcPolys times matrix, with products taken by `mul`.
using PolyMul = std::function<NcPoly(const NcPoly&, const NcPoly&)>;
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, const PolyMul& mul);
PolyMatrix lift(const RMatrix& r, const AlphaPtr& al);
PolyMatrix leg1(const PolyMatrix& l);  // L ⊗ id
PolyMatrix leg2(const PolyMatrix& l);  // id ⊗ L
PolyMul free_mul();
PolyMul algebra_mul(const Algebra& a);

// U_q(gl2): E, F, K1^{+-1}, K2^{+-1}, normal words F^a E^b K1^c K2^d.
AlgebraSpec uq_spec();
const Algebra& uq();

struct RelationCheck {
    std::string tag;
    NcPoly residual;
    bool ok() const { return residual.is_zero(); }
};

// The L-matrix generators as elements of U_q.
PolyMatrix lplus();
PolyMatrix lminus();
// Explicit l-relations and the entries of L1 L2 R = R L2 L1 (both signs and the
// mixed form), each reduced in U_q.
std::vector<RelationCheck> lmatrix_check();

// O_q(GL2)+ on l11, l12, l21, l22.
AlgebraSpec oq_spec();
const Algebra& oq();
// The localization at det_q(L), denominator named "detL" ("detLi" parses).
std::shared_ptr<const Localization> oq_loc();
NcPoly oq_trace();
NcPoly oq_det();
PolyMatrix oq_matrix();  // [[l11, l12], [l21, l22]]
// Entries of R21 L1 R L2 - L2 R21 L1 R over formal symbols (no reduction).
std::vector<NcPoly> oq_reflection_entries();

// phi: O_q -> U_q, L -> L+ S(L-)
NcPoly embed_phi(const NcPoly& x);
NcPoly embed_phi(const LocalizedElem& x);
// Images of the four generators computed as L+ (L-)^-1 in U_q.
PolyMatrix phi_from_lmatrices();

enum class UGen { E, F, K1, K2 };
const char* ugen_name(UGen g);
UGen ugen_from(const std::string& name);
constexpr std::array<UGen, 4> kUGens{UGen::E, UGen::F, UGen::K1, UGen::K2};

// Per-letter action data of a U-module algebra whose generators are weight
// vectors: K_m acts on letter x by q^{weight[x][m]}.
struct LetterAction {
    const Algebra* alg = nullptr;
    std::vector<std::array<int, 2>> weight;
    std::vector<NcPoly> e, f;
};
// Lemma-style data for a copy of O_q whose generators are named by `names`
// (l11, l12, l21, l22 order) inside `alg`.
void fill_oq_action(LetterAction& act, const Algebra& alg, const std::array<std::string, 4>& names);

using ActionFn = std::function<NcPoly(UGen, const NcPoly&)>;
void register_action(const std::string& algebra_id, ActionFn fn);
ActionFn letter_action(LetterAction data);
// Extends the registered generator action to normal-form elements; throws
// std::invalid_argument for an unregistered algebra.
NcPoly adjoint_act(UGen g, const NcPoly& x);
// Acts on the body; denominators must be invariant.
LocalizedElem adjoint_act(UGen g, const LocalizedElem& x);
bool is_invariant(const NcPoly& x);
bool is_invariant(const LocalizedElem& x);

// x_(1) y S(x_(2)) computed inside U_q.
NcPoly uq_adjoint(UGen g, const NcPoly& y);

}  // namespace qhc
