#include "qhc/cli/suites.hpp"

#include "qhc/hciso/hciso.hpp"
#include "qhc/rewrite/linalg.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace qhc {

const std::vector<std::string>& algebra_ids() {
    static const std::vector<std::string> ids = {"daha", "sdaha", "uq", "oq", "dq", "inv", "ham"};
    return ids;
}

const Algebra& algebra_by_id(const std::string& id) {
    if (id == "daha") return daha();
    if (id == "sdaha") return sdaha();
    if (id == "uq") return uq();
    if (id == "oq") return oq();
    if (id == "dq") return dq();
    if (id == "inv") return inv();
    if (id == "ham") return ham();
    throw std::invalid_argument("unknown algebra '" + id + "' (expected daha, sdaha, uq, oq, dq, inv or ham)");
}

unsigned thread_budget() {
    if (const char* s = std::getenv("QHC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == 0 && v > 0) return unsigned(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Table = std::vector<std::vector<long>>;

void geometric(Table& c, int a, int b) {
    for (size_t i = a; i < c.size(); ++i)
        for (size_t j = b; j < c[i].size(); ++j) c[i][j] += c[i - a][j - b];
}

Table series_table(int m, int n, bool spherical) {
    Table c(m + 1, std::vector<long>(n + 1, 0));
    c[0][0] = 1;
    geometric(c, 1, 0);
    geometric(c, 2, 0);
    geometric(c, 0, 1);
    geometric(c, 0, 2);
    if (spherical) {
        for (int i = m; i >= 1; --i)
            for (int j = n; j >= 1; --j) c[i][j] += c[i - 1][j - 1];
    } else {
        geometric(c, 1, 1);
    }
    return c;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SuiteItem item(std::string name, bool pass, std::string detail = {}) {
    return {std::move(name), pass, std::move(detail)};
}

SuiteItem zero_item(std::string name, const NcPoly& p) {
    return item(std::move(name), p.is_zero(), p.is_zero() ? "" : p.str());
}

SuiteItem zero_item(std::string name, const LocalizedElem& p) {
    return item(std::move(name), p.is_zero(), p.is_zero() ? "" : p.str());
}

std::string bideg_str(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

SuiteItem count_item(std::string name, long got, long want) {
    return item(std::move(name), got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want));
}

std::vector<SuiteItem> ambiguity_items(const Algebra& a, const std::vector<std::string>& listed) {
    std::vector<SuiteItem> out;
    auto reps = check_ambiguities(a);
    std::set<Word> got, want;
    for (auto& r : reps) {
        got.insert(r.monomial);
        out.push_back(item("diamond " + a.spec().str(r.monomial), r.resolved,
                           r.resolved ? "" : (r.left_first - r.right_first).str()));
    }
    for (auto& m : listed) want.insert(a.spec().word(m));
    out.push_back(item("overlap set matches the " + std::to_string(listed.size()) + " listed monomials", got == want,
                       "found " + std::to_string(got.size())));
    return out;
}

std::vector<SuiteItem> daha_derived(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (const char* rel : {"T*X1*T - X2", "Ti*Y1*Ti - Y2", "X1*X2 - X2*X1", "Y1*Y2 - Y2*Y1",
                            "Y1*X1*X2 - q^2*X1*X2*Y1", "X1i*Y2 - Y2*X1i*Ti^2", "(T + t^-1)*(T - t)",
                            "T^2 - (t - t^-1)*T - 1", "Ti - T + (t - t^-1)", "X1*Y1 - q^-2*Ti^2*Y1*X1",
                            "X1*Y2 - Y2*X1 - (t - t^-1)*Ti*Y1*X1", "X2*Y1 - Y1*X2 - (t - t^-1)*q^-2*Ti*Y1*X1",
                            "X2*Y2 - q^-2*Y2*X2*Ti^2", "X2i*Y1 - Ti^2*Y1*X2i"})
        out.push_back(zero_item(rel, daha().nf(rel)));
    return out;
}

std::vector<SuiteItem> sdaha_diamonds(const SuiteOptions&) {
    const Algebra& A = sdaha();
    auto out = ambiguity_items(A, {"P2*P1*R", "P2*P1*Q2", "P2*P1*Q1", "P2*R*Q2", "P2*R*Q1", "P2*Q2*Q1", "P1*R*Q2",
                                   "R^2*Q2", "P1*Q2*Q1", "R*Q2*Q1", "P2*R^2", "P1*R*Q1", "P1*R^2", "R^2*Q1", "R^3"});
    Word w = A.spec().word("P1*R*Q1");
    NcPoly left = straighten_trace(A, w, Strategy::Leftmost), right = straighten_trace(A, w, Strategy::Rightmost);
    NcPoly printed =
        A.nf("q^-4*Q1*R*P1 + q^-2*(1 - q^-2)*Q2*P1^2 + q^-2*(q^-2 - 1)*R^2 + q^-2*(1 - q^-2)*Q1^2*P2");
    out.push_back(item("trace P1*R*Q1 matches the printed value", left == right && left == printed, left.str()));
    return out;
}

std::vector<SuiteItem> phi_suite(const SuiteOptions& opt) {
    const Algebra& A = sdaha();
    std::vector<const RewriteRule*> rules;
    for (auto& r : A.spec().rules())
        if (r.core) rules.push_back(&r);
    return parallel_map<SuiteItem>(
        rules.size(),
        [&](size_t i) {
            auto& r = *rules[i];
            return zero_item("Phi(" + r.tag + ")", phi_apply(NcPoly::monomial(A.alphabet(), r.lhs) - r.rhs));
        },
        opt.threads);
}

std::vector<SuiteItem> lmatrix_suite(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (auto& c : lmatrix_check()) out.push_back(zero_item(c.tag, c.residual));
    std::vector<NcPoly> printed;
    for (auto& r : oq().spec().rules()) printed.push_back(NcPoly::monomial(oq().alphabet(), r.lhs) - r.rhs);
    auto entries = oq_reflection_entries();
    bool spans = rank_exact(entries) == 6 && rank_exact(printed) == 6;
    for (auto& p : printed) spans = spans && span_solve(entries, p).has_value();
    for (auto& e : entries) spans = spans && span_solve(printed, e).has_value();
    out.push_back(item("reflection equation spans the six O_q relations", spans));
    return out;
}

std::vector<SuiteItem> oq_action(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (auto& r : oq().spec().rules())
        out.push_back(zero_item("phi(" + r.tag + ")", embed_phi(NcPoly::monomial(oq().alphabet(), r.lhs) - r.rhs)));
    out.push_back(zero_item("phi(det_q L) = K1^-2 K2^-2", embed_phi(oq_det()) - uq().parse("K1^-2*K2^-2")));
    for (const char* l : {"l11", "l12", "l21", "l22"})
        for (UGen g : kUGens) {
            NcPoly x = oq().gen(l);
            out.push_back(zero_item(std::string("phi compatible: ") + ugen_name(g) + " on " + l,
                                    embed_phi(adjoint_act(g, x)) - uq_adjoint(g, embed_phi(x))));
        }
    auto kill = [&](const std::string& name, const NcPoly& rel) {
        for (UGen g : kUGens) {
            NcPoly r = adjoint_act(g, rel);
            if (!r.is_zero()) {
                out.push_back(item("action kills " + name, false, std::string(ugen_name(g)) + ": " + r.str()));
                return;
            }
        }
        out.push_back(item("action kills " + name, true));
    };
    for (auto& r : oq().spec().rules()) kill("oq:" + r.tag, NcPoly::monomial(oq().alphabet(), r.lhs) - r.rhs);
    for (const char* block : {"aa", "dd", "da"}) {
        auto rels = dq_printed_relations(block);
        for (size_t i = 0; i < rels.size(); ++i) kill(std::string("dq:") + block + "#" + std::to_string(i + 1), rels[i]);
    }
    out.push_back(item("tr_q(L) invariant", is_invariant(oq_trace())));
    out.push_back(item("det_q(L) invariant", is_invariant(oq_det())));
    out.push_back(item("tr_q(A), det_q(A), tr_q(D), det_q(D) invariant",
                       is_invariant(qtrace(dq_matrix(Mat::A), dq())) && is_invariant(detq(Mat::A)) &&
                           is_invariant(qtrace(dq_matrix(Mat::D), dq())) && is_invariant(detq(Mat::D))));
    return out;
}

std::vector<SuiteItem> dq_relations(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (const char* block : {"aa", "dd", "da"}) {
        auto entries = dq_cross_entries(block);
        auto printed = dq_printed_relations(block);
        bool ok = rank_exact(entries) == printed.size() && rank_exact(printed) == printed.size();
        for (auto& p : printed) ok = ok && span_solve(entries, p).has_value();
        for (auto& e : entries) ok = ok && span_solve(printed, e).has_value();
        out.push_back(item(std::string("matrix form = printed block ") + block + " (" + std::to_string(printed.size()) +
                               " relations)",
                           ok));
    }
    auto reps = check_ambiguities(dq());
    size_t bad = 0;
    for (auto& r : reps) bad += !r.resolved;
    out.push_back(item("all " + std::to_string(reps.size()) + " diamonds resolve", bad == 0));
    NcPoly da = detq(Mat::A), dd = detq(Mat::D);
    const Algebra& D = dq();
    for (const char* n : {"a11", "a12", "a21", "a22"}) {
        NcPoly x = D.gen(n);
        out.push_back(zero_item(std::string("det_q(A) ") + n + " = " + n + " det_q(A)", D.mul(da, x) - D.mul(x, da)));
        out.push_back(zero_item(std::string("det_q(D) ") + n + " = q^-2 " + n + " det_q(D)",
                                D.mul(dd, x) - D.mul(x, dd).scaled(RatCoeff::q(-2))));
    }
    for (const char* n : {"p11", "p12", "p21", "p22"}) {
        NcPoly x = D.gen(n);
        out.push_back(zero_item(std::string(n) + " det_q(A) = q^-2 det_q(A) " + n,
                                D.mul(x, da) - D.mul(da, x).scaled(RatCoeff::q(-2))));
        out.push_back(zero_item(std::string(n) + " det_q(D) = det_q(D) " + n, D.mul(x, dd) - D.mul(dd, x)));
    }
    out.push_back(count_item("dim D_q+[1,1]", hilbert_table(D, {1, 1}).at(1, 1), 16));
    return out;
}

std::vector<SuiteItem> cofactor_suite(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (Mat m : {Mat::A, Mat::D}) {
        std::string nm = m == Mat::A ? "A" : "D";
        CofactorResult c;
        try {
            c = cofactor(m);
        } catch (const std::exception& e) {
            out.push_back(item(nm + ": cofactor system solvable", false, e.what()));
            continue;
        }
        out.push_back(item(nm + ": cofactor solution unique", c.unique));
        PolyMatrix M = dq_matrix(m);
        PolyMul mul = algebra_mul(dq());
        NcPoly det = detq(m);
        PolyMatrix l = matmul(M, c.solved, mul), r = matmul(c.solved, M, mul);
        for (auto [side, P] : {std::pair<const char*, PolyMatrix*>{"M X", &l}, {"X M", &r}}) {
            NcPoly res(dq().alphabet());
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) res += dq().nf((*P)(i, j) - (i == j ? det : NcPoly(dq().alphabet())));
            out.push_back(zero_item(nm + ": " + side + " = det_q I", res));
        }
        bool only22 = c.mismatches.size() == 1 && c.mismatches[0] == std::pair<int, int>{2, 2};
        out.push_back(item(nm + ": printed cofactor differs only at (2,2)", only22,
                           "solved (2,2) = " + c.solved(1, 1).str() + ", printed " + c.printed(1, 1).str()));
    }
    return out;
}

std::vector<SuiteItem> moment_suite(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    for (auto& [tag, r] : moment_checks()) out.push_back(zero_item("mu_q: " + tag, r));
    DqElem z = moment_zt();
    out.push_back(item("mu_q(Z_t) invariant", is_invariant(z)));
    const Algebra& B = inv();
    NcPoly x = B.parse("c2i*d2i*w") - B.mul(B.parse("c2i*d2i"), B.parse("c2*d2").scaled(ham_kappa()));
    out.push_back(zero_item("Psibar(c2^-1 d2^-1 (w - (t^-2 + q^-2 t^2) c2 d2)) = mu_q(Z_t)", psibar_apply(x) - z));
    return out;
}

std::vector<SuiteItem> psibar_suite(const SuiteOptions& opt) {
    std::vector<SuiteItem> out;
    for (auto& [tag, r] : psibar_residuals()) out.push_back(zero_item("Psibar(" + tag + ")", r));
    std::vector<std::pair<int, int>> degs;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) degs.push_back({m, n});
    auto ranks = parallel_map<SuiteItem>(
        degs.size(),
        [&](size_t i) {
            auto [m, n] = degs[i];
            ImageRank r = psibar_rank({m, n}, opt.points);
            return item("Psibar images independent in " + bideg_str(m, n),
                        size_t(r.rank.rank) == r.count && r.rank.agreeing == int(opt.points.size()),
                        "rank " + std::to_string(r.rank.rank) + " of " + std::to_string(r.count));
        },
        opt.threads);
    HilbertTable h = hilbert_table(inv(), {4, 4});
    auto dims = parallel_map<SuiteItem>(
        degs.size(),
        [&](size_t i) {
            auto [m, n] = degs[i];
            try {
                return count_item("dim invariants " + bideg_str(m, n) + " = dim B+", invariant_dimension({m, n}, opt.points),
                                  h.at(m, n));
            } catch (const std::exception& e) {
                return item("dim invariants " + bideg_str(m, n) + " = dim B+", false, e.what());
            }
        },
        opt.threads);
    out.insert(out.end(), ranks.begin(), ranks.end());
    out.insert(out.end(), dims.begin(), dims.end());
    return out;
}

std::vector<SuiteItem> inv_diamonds(const SuiteOptions&) {
    const Algebra& B = inv();
    auto out = ambiguity_items(
        B, {"w*d2*d1", "w*d2*r", "w*d2*c2", "w*d2*c1", "w*d1*r", "w*d1*c2", "w*d1*c1", "w*r*c2", "w*r*c1",
            "w*c2*c1", "d2*d1*r", "d2*d1*c2", "d2*d1*c1", "d2*r*c2", "d2*r*c1", "d2*c2*c1", "d1*r*c2", "r*r*c2",
            "d1*c2*c1", "r*c2*c1", "w*r*r", "d2*r*r", "d1*r*r", "d1*r*c1", "r*r*c1", "r*r*r"});
    Word w = B.spec().word("r*r*c1");
    NcPoly left = straighten_trace(B, w, Strategy::Leftmost), right = straighten_trace(B, w, Strategy::Rightmost);
    NcPoly printed = B.parse("q^-6*c1^2*r*d1 - q^-8*c1*c2*d1^2 - q^-8*c1^3*d2 + q^-8*c1*w + (q^-4 - q^-8)*c2*r*d1 "
                             "+ (2*q^-10 - q^-8 + q^-6)*c1*c2*d2");
    out.push_back(item("trace r^2*c1 matches the printed value", left == right && left == printed, left.str()));
    return out;
}

const char* kHamR2 = "q^-4*(1 + t^2)*(q^-2 + t^-2)*c2*d2 - q^-4*c2*d1^2 - q^-4*c1^2*d2 + q^-2*c1*r*d1";

std::vector<SuiteItem> ham_suite(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    const Algebra& H = ham();
    out.push_back(zero_item("NF(r^2) equals the printed quotient relation", H.nf("r*r") - H.parse(kHamR2)));
    auto reps = check_ambiguities(H);
    size_t bad = 0;
    for (auto& r : reps) bad += !r.resolved;
    out.push_back(item("all " + std::to_string(reps.size()) + " diamonds resolve", bad == 0));
    HilbertTable h = hilbert_table(H, {6, 6}), a = hilbert_table(sdaha(), {6, 6});
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) out.push_back(count_item("dim ham+" + bideg_str(m, n) + " = dim A+", h.at(m, n), a.at(m, n)));
    Congruence c = psi_congruence(H.parse("r*r"), H.parse(kHamR2));
    out.push_back(item("Psi(r^2 relation) lies in the ideal of mu_q(Z_t)", c.verified,
                       c.multiplier ? "multiplier " + c.multiplier->str() : c.note));
    for (auto& r : H.spec().rules())
        if (r.core && r.tag != "r2reln")
            out.push_back(zero_item("Psi(" + r.tag + ")", psi_apply(NcPoly::monomial(H.alphabet(), r.lhs)) - psi_apply(r.rhs)));
    return out;
}

std::vector<SuiteItem> hilbert_all(const SuiteOptions& opt) {
    std::vector<SuiteItem> out;
    HilbertTable a = hilbert_table(sdaha(), {6, 6});
    HilbertTable b = hilbert_table(inv(), {6, 6});
    HilbertTable hm = hilbert_table(ham(), {6, 6});
    HilbertTable o = hilbert_table(oq(), {6, 0});
    HilbertTable d = hilbert_table(dq(), {3, 3});
    std::vector<std::pair<int, int>> degs;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) degs.push_back({m, n});
    for (auto [m, n] : degs) {
        out.push_back(count_item("A+" + bideg_str(m, n), a.at(m, n), series_spherical(m, n)));
        out.push_back(count_item("B+" + bideg_str(m, n), b.at(m, n), series_invariant(m, n)));
        out.push_back(count_item("ham+" + bideg_str(m, n), hm.at(m, n), series_spherical(m, n)));
    }
    auto sph = parallel_map<SuiteItem>(
        degs.size(),
        [&](size_t i) {
            auto [m, n] = degs[i];
            RankResult r = spherical_dimension({m, n}, opt.points);
            return item("eH+e" + bideg_str(m, n), r.rank == series_spherical(m, n) && r.agreeing == int(opt.points.size()),
                        "rank " + std::to_string(r.rank) + ", expected " + std::to_string(series_spherical(m, n)));
        },
        opt.threads);
    out.insert(out.end(), sph.begin(), sph.end());
    for (int m = 0; m <= 6; ++m) out.push_back(count_item("O_q+" + bideg_str(m, 0), o.at(m, 0), binom(m + 3, 3)));
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            out.push_back(count_item("D_q+" + bideg_str(m, n), d.at(m, n), binom(m + 3, 3) * binom(n + 3, 3)));
    return out;
}

std::vector<SuiteItem> hc_suite(const SuiteOptions&) {
    std::vector<SuiteItem> out;
    HcReport r = hc_verify({4, 4}, {2, 2});
    for (auto& rel : r.relations) out.push_back(zero_item("HC(" + rel.tag + ")", rel.residual));
    for (auto& b : r.basis)
        out.push_back(item("basis bijection " + bideg_str(b.deg.m, b.deg.n), b.bijective,
                           std::to_string(b.ham_count) + " <-> " + std::to_string(b.a_count)));
    for (auto& c : r.composite)
        out.push_back(item("structure constants " + c.x + " * " + c.y, c.ok(),
                           c.phi_ok ? c.psi.note : std::string("Phi side differs")));
    return out;
}

using SuiteFn = std::vector<SuiteItem> (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> m = {
        {"daha-derived", daha_derived}, {"sdaha-diamonds", sdaha_diamonds}, {"phi", phi_suite},
        {"lmatrix", lmatrix_suite},     {"oq-action", oq_action},           {"dq-relations", dq_relations},
        {"cofactor", cofactor_suite},   {"moment", moment_suite},           {"psibar", psibar_suite},
        {"inv-diamonds", inv_diamonds}, {"ham", ham_suite},                 {"hilbert-all", hilbert_all},
        {"hc", hc_suite}};
    return m;
}

}  // namespace

long series_spherical(int m, int n) { return m < 0 || n < 0 ? 0 : series_table(m, n, true)[m][n]; }
long series_invariant(int m, int n) { return m < 0 || n < 0 ? 0 : series_table(m, n, false)[m][n]; }

size_t SuiteReport::failures() const {
    size_t f = 0;
    for (auto& i : items) f += !i.pass;
    return f;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"daha-derived", "sdaha-diamonds", "phi",          "lmatrix",
                                                   "oq-action",    "dq-relations",   "cofactor",     "moment",
                                                   "psibar",       "inv-diamonds",   "ham",          "hilbert-all",
                                                   "hc"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return {name, it->second(opt)};
}

}  // namespace qhc
