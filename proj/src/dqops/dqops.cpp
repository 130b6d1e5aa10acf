#include "qhc/dqops/dqops.hpp"

#include "qhc/rewrite/linalg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qhc {

namespace {

void register_dq_action(const Algebra& a) {
    LetterAction act;
    fill_oq_action(act, a, {"a11", "a12", "a21", "a22"});
    fill_oq_action(act, a, {"p11", "p12", "p21", "p22"});
    register_action(a.id(), letter_action(std::move(act)));
}

}  // namespace

AlgebraSpec dq_spec() {
    std::vector<Alphabet::Entry> gens;
    for (const char* n : {"a11", "a12", "a21", "a22"}) gens.push_back({n, {1, 0}, ""});
    for (const char* n : {"p11", "p12", "p21", "p22"}) gens.push_back({n, {0, 1}, ""});
    auto al = std::make_shared<Alphabet>("dq", gens);
    AlgebraSpec s("dq", al);
    std::vector<PbwBlock> pbw;
    for (auto& g : gens) pbw.push_back({al->at(g.name), {}, -1});
    s.set_pbw(pbw);
    // additive weights chosen so every printed right-hand side term is lighter
    // or a same-weight reordering
    s.set_order({additive_component(*al,
                                    {{"a11", 12}, {"a12", 8}, {"a21", 8}, {"a22", 0},
                                     {"p11", 13}, {"p12", 11}, {"p21", 3}, {"p22", 0}},
                                    "weight"),
                 inversion_component(*al, pbw), lex_component()});

    for (char x : {'a', 'p'}) {
        auto sub = [x](std::string r) {
            for (auto& c : r)
                if (c == 'X') c = x;
            return r;
        };
        std::string b = x == 'a' ? "aa:" : "dd:";
        s.add_rule(sub("X12*X11"), sub("X11*X12 + (1 - q^-2)*X12*X22"), b + "12.11");
        s.add_rule(sub("X22*X11"), sub("X11*X22"), b + "22.11");
        s.add_rule(sub("X21*X11"), sub("X11*X21 - (1 - q^-2)*X22*X21"), b + "21.11");
        s.add_rule(sub("X22*X12"), sub("q^2*X12*X22"), b + "22.12");
        s.add_rule(sub("X21*X12"), sub("X12*X21 + (1 - q^-2)*(X11*X22 - X22*X22)"), b + "21.12");
        s.add_rule(sub("X22*X21"), sub("q^-2*X21*X22"), b + "22.21");
    }

    s.add_rule("p11*a11", "-(1 - q^-2)*p12*a21 + q^-2*a11*p11 + (q^-2 - q^-4)*a12*p21", "da:11.11");
    s.add_rule("p11*a12", "(q^-2 - 1)*p12*a22 + q^-2*a12*p11", "da:11.12");
    s.add_rule("p11*a21", "(1 - q^2)*p21*a11 - (q - q^-1)^2*p22*a21 + a21*p11 + (1 - q^-2)*a22*p21", "da:11.21");
    s.add_rule("p11*a22", "(1 - q^2)*p21*a12 - (q - q^-1)^2*p22*a22 + a22*p11", "da:11.22");
    s.add_rule("p12*a11", "a11*p12 + (1 - q^-2)*a12*p22 + (q^-2 - 1)*a12*p11", "da:12.11");
    s.add_rule("p12*a12", "q^-2*a12*p12", "da:12.12");
    s.add_rule("p12*a21", "(q^-2 - 1)*p22*a11 + a21*p12 + (q^-2 - 1)*a22*p11 + (1 - q^-2)*a22*p22", "da:12.21");
    s.add_rule("p12*a22", "(q^-2 - 1)*p22*a12 + q^-2*a22*p12", "da:12.22");
    s.add_rule("p21*a11", "q^-2*a11*p21 - (1 - q^-2)*p22*a21", "da:21.11");
    s.add_rule("p21*a12", "(q^-2 - 1)*p22*a22 + a12*p21", "da:21.12");
    s.add_rule("p21*a21", "q^-2*a21*p21", "da:21.21");
    s.add_rule("p21*a22", "a22*p21", "da:21.22");
    s.add_rule("p22*a11", "a11*p22 + (1 - q^2)*a12*p21", "da:22.11");
    s.add_rule("p22*a12", "a12*p22", "da:22.12");
    s.add_rule("p22*a21", "q^-2*a21*p22 + (q^-2 - 1)*a22*p21", "da:22.21");
    s.add_rule("p22*a22", "q^-2*a22*p22", "da:22.22");
    return s;
}

const Algebra& dq() {
    static const Algebra a(dq_spec());
    static std::once_flag once;
    std::call_once(once, [] { register_dq_action(a); });
    return a;
}

NcPoly detq(Mat m) {
    return m == Mat::A ? dq().nf("a11*a22 - q^2*a12*a21") : dq().nf("p11*p22 - q^2*p12*p21");
}

std::shared_ptr<const Localization> dq_loc() {
    static const auto loc =
        Localization::make(dq(), {{"detA", detq(Mat::A), {2, 0}, {0, 2}}, {"detD", detq(Mat::D), {0, 2}, {-2, 0}}});
    return loc;
}

PolyMatrix dq_matrix(Mat m) {
    PolyMatrix r(2, NcPoly());
    const char* an[] = {"a11", "a12", "a21", "a22"};
    const char* pn[] = {"p11", "p12", "p21", "p22"};
    for (int i = 0; i < 4; ++i) r.e[i] = dq().gen(m == Mat::A ? an[i] : pn[i]);
    return r;
}

CofactorResult cofactor(Mat which) {
    const Algebra& R = dq();
    PolyMatrix M = dq_matrix(which);
    NcPoly det = detq(which);
    const std::vector<NcPoly>& basis = M.e;  // the degree-one span
    // unknown u = (i, j, k): X_ij = sum_k x_u basis[k]; equations (M X)_ab and (X M)_ab
    std::map<std::pair<int, Word>, size_t> rows;
    std::vector<std::map<std::pair<int, Word>, RatCoeff>> cols(16);
    auto put = [&](size_t u, int eq, const NcPoly& p) {
        for (auto& [w, c] : p.terms()) {
            rows.emplace(std::make_pair(eq, w), 0);
            cols[u][{eq, w}] += c;
        }
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k) {
                size_t u = (i * 2 + j) * 4 + k;
                // (M X)_{a j} gets M_{a i} X_{i j}
                for (int a = 0; a < 2; ++a) put(u, a * 2 + j, R.mul(M(a, i), basis[k]));
                // (X M)_{i b} gets X_{i j} M_{j b}
                for (int b = 0; b < 2; ++b) put(u, 4 + i * 2 + b, R.mul(basis[k], M(j, b)));
            }
    std::map<std::pair<int, Word>, RatCoeff> rhs_map;
    for (int eq : {0, 3, 4, 7})
        for (auto& [w, c] : det.terms()) {
            rows.emplace(std::make_pair(eq, w), 0);
            rhs_map[{eq, w}] += c;
        }
    size_t n = 0;
    for (auto& [key, idx] : rows) idx = n++;
    std::vector<std::vector<RatCoeff>> dense(16, std::vector<RatCoeff>(n));
    for (size_t u = 0; u < 16; ++u)
        for (auto& [key, c] : cols[u]) dense[u][rows[key]] = c;
    std::vector<RatCoeff> rhs(n);
    for (auto& [key, c] : rhs_map) rhs[rows[key]] = c;

    auto sol = solve_exact(dense, rhs);
    if (!sol) throw std::runtime_error("cofactor system is inconsistent");
    CofactorResult out;
    out.unique = rank_exact(dense) == 16;
    out.solved = PolyMatrix(2, NcPoly(R.alphabet()));
    for (size_t u = 0; u < 16; ++u) {
        size_t ij = u / 4, k = u % 4;
        out.solved.e[ij] += basis[k].scaled((*sol)[u]);
    }
    std::string x = which == Mat::A ? "a" : "p";
    auto g = [&](const char* s) { return R.gen(x + s); };
    out.printed = PolyMatrix(2, NcPoly(R.alphabet()));
    out.printed(0, 0) = g("22");
    out.printed(0, 1) = g("12").scaled(-RatCoeff::q(2));
    out.printed(1, 0) = g("21").scaled(-RatCoeff::q(2));
    out.printed(1, 1) = g("22").scaled(RatCoeff::q(2)) + g("22").scaled(RatCoeff(1) - RatCoeff::q(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (out.solved(i, j) != out.printed(i, j)) out.mismatches.push_back({i + 1, j + 1});
    return out;
}

QMatrix to_qmatrix(const PolyMatrix& m) {
    QMatrix r(m.n, LocalizedElem());
    for (size_t i = 0; i < m.e.size(); ++i) r.e[i] = dq_loc()->from(m.e[i].is_zero() ? NcPoly(dq().alphabet()) : m.e[i]);
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.n, LocalizedElem());
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j) {
            LocalizedElem s = dq_loc()->from(NcPoly(dq().alphabet()));
            for (size_t k = 0; k < a.n; ++k) s = s + a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

DqElem loc_mul(const DqElem& a, const DqElem& b) { return a * b; }

DqElem qtrace(const QMatrix& m) { return m(0, 0) + m(1, 1).scaled(RatCoeff::q(-2)); }

NcPoly qtrace(const PolyMatrix& m, const Algebra& a) { return a.nf(m(0, 0) + m(1, 1).scaled(RatCoeff::q(-2))); }

RatCoeff zt_constant() { return RatCoeff::t(-2) + RatCoeff::q(-2) * RatCoeff::t(2); }

const QMatrix& moment_map() {
    static const QMatrix mu = [] {
        auto loc = dq_loc();
        QMatrix a = to_qmatrix(dq_matrix(Mat::A)), d = to_qmatrix(dq_matrix(Mat::D));
        QMatrix at = to_qmatrix(cofactor(Mat::A).solved), dt = to_qmatrix(cofactor(Mat::D).solved);
        LocalizedElem ai = loc->inverse(0), di = loc->inverse(1);
        for (auto& e : at.e) e = ai * e;
        for (auto& e : dt.e) e = di * e;
        return d * at * dt * a;
    }();
    return mu;
}

DqElem moment_zt() {
    auto loc = dq_loc();
    return qtrace(moment_map()) - loc->from(dq().one()).scaled(RatCoeff::q(4) * zt_constant());
}

DqElem moment_trace_via_w() {
    auto loc = dq_loc();
    QMatrix a = to_qmatrix(dq_matrix(Mat::A)), d = to_qmatrix(dq_matrix(Mat::D));
    QMatrix at = to_qmatrix(cofactor(Mat::A).solved), dt = to_qmatrix(cofactor(Mat::D).solved);
    return loc->inverse(0) * loc->inverse(1) * qtrace(d * at * dt * a);
}

DqElem oq_substitute(const NcPoly& x, const QMatrix& m) {
    auto loc = dq_loc();
    NcPoly::check_same(x.alphabet(), oq().alphabet());
    DqElem out = loc->from(NcPoly(dq().alphabet()));
    for (auto& [w, c] : x.terms()) {
        DqElem p = loc->from(dq().one().scaled(c));
        for (Letter l : w) p = p * m.e[l];  // oq letters are l11, l12, l21, l22 in order
        out = out + p;
    }
    return out;
}

std::vector<std::pair<std::string, DqElem>> moment_checks() {
    const QMatrix& mu = moment_map();
    std::vector<std::pair<std::string, DqElem>> out;
    for (auto& r : oq().spec().rules())
        out.push_back({r.tag, oq_substitute(NcPoly::monomial(oq().alphabet(), r.lhs) - r.rhs, mu)});
    DqElem det = oq_substitute(oq_det(), mu) - dq_loc()->from(dq().one().scaled(RatCoeff::q(8)));
    out.push_back({"det - q^8", det});
    return out;
}

std::vector<NcPoly> dq_printed_relations(const std::string& block) {
    std::vector<NcPoly> out;
    for (auto& r : dq().spec().rules())
        if (r.tag.rfind(block + ":", 0) == 0) out.push_back(NcPoly::monomial(dq().alphabet(), r.lhs) - r.rhs);
    return out;
}

std::vector<NcPoly> dq_cross_entries(const std::string& block) {
    const AlphaPtr& al = dq().alphabet();
    PolyMul mul = free_mul();
    PolyMatrix r = lift(rmatrix_vector(), al), r21 = lift(rmatrix_21(), al);
    PolyMatrix a = dq_matrix(Mat::A), d = dq_matrix(Mat::D);
    PolyMatrix lhs, rhs;
    if (block == "aa" || block == "dd") {
        PolyMatrix l = block == "aa" ? a : d;
        lhs = matmul(matmul(matmul(r21, leg1(l), mul), r, mul), leg2(l), mul);
        rhs = matmul(matmul(matmul(leg2(l), r21, mul), leg1(l), mul), r, mul);
    } else if (block == "da") {
        PolyMatrix r21i = lift(inverse(rmatrix_21()), al);
        lhs = matmul(matmul(matmul(r21, leg1(d), mul), r, mul), leg2(a), mul);
        rhs = matmul(matmul(matmul(leg2(a), r21, mul), leg1(d), mul), r21i, mul);
    } else {
        throw std::invalid_argument("unknown relation block " + block);
    }
    std::vector<NcPoly> out;
    for (size_t i = 0; i < 16; ++i) out.push_back(lhs.e[i] - rhs.e[i]);
    return out;
}

}  // namespace qhc
