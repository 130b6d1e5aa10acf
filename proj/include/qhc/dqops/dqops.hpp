#pragma once

#include "qhc/qgroup/qgroup.hpp"

namespace qhc {

// D_q(GL2)+ on a11, a12, a21, a22 (degree (1,0)) and p11, p12, p21, p22
// (the derivations, degree (0,1)).
AlgebraSpec dq_spec();
const Algebra& dq();

// Localization at det_q(A) (index 0, "detA") and det_q(D) (index 1, "detD").
std::shared_ptr<const Localization> dq_loc();
using DqElem = LocalizedElem;
using QMatrix = SqMat<LocalizedElem>;

enum class Mat { A, D };
PolyMatrix dq_matrix(Mat m);
NcPoly detq(Mat m);

struct CofactorResult {
    PolyMatrix solved;   // the unique solution of M X = X M = det_q(M) I in degree one
    PolyMatrix printed;  // as printed, including the (2,2) entry
    std::vector<std::pair<int, int>> mismatches;  // 1-based entries where they differ
    bool unique = false;
};
// Throws std::runtime_error when the linear system is inconsistent.
CofactorResult cofactor(Mat m);

QMatrix to_qmatrix(const PolyMatrix& m);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
DqElem loc_mul(const DqElem& a, const DqElem& b);
// m11 + q^-2 m22
DqElem qtrace(const QMatrix& m);
NcPoly qtrace(const PolyMatrix& m, const Algebra& a);

// mu_q(L) = D detA^-1 Atilde detD^-1 Dtilde A
const QMatrix& moment_map();
// mu_q(Z_t) = tr_q(mu_q(L)) - q^4 (t^-2 + q^-2 t^2)
DqElem moment_zt();
RatCoeff zt_constant();  // t^-2 + q^-2 t^2
// detA^-1 detD^-1 tr_q(D Atilde Dtilde A)
DqElem moment_trace_via_w();
// Substitutes l_ij -> m_ij into an element of O_q.
DqElem oq_substitute(const NcPoly& x, const QMatrix& m);
// Each O_q relation evaluated on mu_q(L), plus det_q(mu_q(L)) - q^8.
std::vector<std::pair<std::string, DqElem>> moment_checks();

// Blocks of printed relations as lhs - rhs: aa, dd, da.
std::vector<NcPoly> dq_printed_relations(const std::string& block);
// Entries of the three matrix equations over formal symbols.
std::vector<NcPoly> dq_cross_entries(const std::string& block);

}  // namespace qhc
