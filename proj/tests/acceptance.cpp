// One line per acceptance criterion; exit status is the number of failures.

#include "qhc/cli/suites.hpp"
#include "qhc/hciso/hciso.hpp"
#include "qhc/rewrite/props.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace qhc;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

// All items of a suite, or those whose name starts with one of `prefixes`.
void require_suite(Outcome& o, const std::string& suite, std::vector<std::string> prefixes = {}) {
    SuiteReport r = run_suite(suite);
    size_t used = 0;
    for (auto& i : r.items) {
        bool keep = prefixes.empty();
        for (auto& p : prefixes) keep = keep || i.name.rfind(p, 0) == 0;
        if (!keep) continue;
        ++used;
        o.require(i.pass, suite + ": " + i.name + (i.detail.empty() ? "" : " [" + i.detail + "]"));
    }
    o.require(used > 0, suite + ": no items");
}

bool is_q_power(const RatCoeff& c) {
    for (int k = -32; k <= 32; ++k)
        if (c == RatCoeff::q(k)) return true;
    return false;
}

Outcome c1() {
    Outcome o;
    require_suite(o, "daha-derived");
    return o;
}

Outcome c2() {
    Outcome o;
    SuiteReport r = run_suite("sdaha-diamonds");
    o.require(r.items.size() == 17, "expected 15 diamonds, the overlap set and the trace");
    require_suite(o, "sdaha-diamonds");
    return o;
}

Outcome c3() {
    Outcome o;
    SuiteReport r = run_suite("inv-diamonds");
    o.require(r.items.size() == 28, "expected 26 diamonds, the overlap set and the trace");
    require_suite(o, "inv-diamonds");
    return o;
}

Outcome c4() {
    Outcome o;
    o.require(run_suite("phi").items.size() == 11, "expected 11 relations");
    require_suite(o, "phi");
    return o;
}

Outcome c5() {
    Outcome o;
    require_suite(o, "hilbert-all", {"A+", "eH+e"});
    HilbertTable h = hilbert_table(sdaha(), {2, 2});
    o.require(h.at(1, 1) == 2 && series_spherical(1, 1) == 2, "dim (1,1) != 2");
    o.require(h.at(2, 2) == 5 && series_spherical(2, 2) == 5, "dim (2,2) != 5");
    o.require(default_points().size() == 3, "three rank points");
    return o;
}

Outcome c6() {
    Outcome o;
    size_t n = 0;
    for (const char* b : {"aa", "dd", "da"}) n += dq_printed_relations(b).size();
    o.require(n == 28, "expected 28 printed relations, got " + std::to_string(n));
    require_suite(o, "dq-relations");
    require_suite(o, "cofactor");
    return o;
}

Outcome c7() {
    Outcome o;
    require_suite(o, "lmatrix");
    require_suite(o, "oq-action");
    return o;
}

Outcome c8() {
    Outcome o;
    require_suite(o, "moment");
    return o;
}

Outcome c9() {
    Outcome o;
    require_suite(o, "psibar");
    HilbertTable h = hilbert_table(inv(), {2, 2});
    o.require(h.at(1, 1) == 2 && invariant_dimension({1, 1}) == 2, "dim (1,1) != 2");
    o.require(h.at(2, 2) == 6 && invariant_dimension({2, 2}) == 6, "dim (2,2) != 6");
    return o;
}

Outcome c10() {
    Outcome o;
    require_suite(o, "ham", {"NF(r^2)", "dim ham+"});
    return o;
}

Outcome c11() {
    Outcome o;
    auto rels = hc_relations();
    o.require(rels.size() == 11, "expected 11 relations");
    for (auto& r : rels) o.require(r.ok(), "relation " + r.tag + ": " + r.residual.str());
    auto basis = hc_basis({4, 4});
    o.require(basis.size() == 25, "expected 25 bidegrees");
    for (auto& b : basis) {
        std::string d = "(" + std::to_string(b.deg.m) + "," + std::to_string(b.deg.n) + ")";
        o.require(b.bijective, "basis not bijective in " + d);
        for (auto& s : b.scalars) o.require(is_q_power(s), "scalar " + s.str() + " in " + d);
    }
    return o;
}

Outcome c12() {
    Outcome o;
    auto& pts = consistency_points();
    o.require(pts.size() == 3 && pts[0].q0 == 2 && pts[0].t0 == 3 && pts[1].q0 == 3 && pts[1].t0 == 2 &&
                  pts[2].q0 == 5 && pts[2].t0 == 7,
              "consistency points");
    auto& ids = algebra_ids();
    auto per = parallel_map<Outcome>(ids.size(), [&](size_t i) {
        Outcome r;
        const Algebra& a = algebra_by_id(ids[i]);
        uint64_t s = 1000 + 10 * i;
        std::vector<PropReport> reps = {check_strategy_independence(a, 200, s), check_associativity(a, 200, s + 1),
                                        check_homogeneity(a, 200, s + 2),
                                        check_specialization(a, 40, s + 3, pts)};
        if (!a.spec().qcentral().empty()) reps.push_back(check_qcentrality(a, 100, s + 4));
        for (auto& p : reps) r.require(p.ok(), ids[i] + " " + p.name + ": " + p.first_failure);
        return r;
    });
    for (auto& r : per) o.require(r.pass, r.note);
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "DAHA derived relations reduce to zero", 1, c1},
        {2, "spherical diamonds: 15 resolved, P1*R*Q1 trace", 5, c2},
        {3, "invariant-algebra diamonds: 26 resolved, r^2*c1 trace", 10, c3},
        {4, "Phi respects the 11 relations of A", 30, c4},
        {5, "Hilbert series of A+ and eH+e up to (6,6)", 120, c5},
        {6, "D_q relations, q-commutations and cofactors", 30, c6},
        {7, "quantum group layer: L-matrices, phi, adjoint action", 60, c7},
        {8, "moment map", 600, c8},
        {9, "Psibar relations, independence and invariant dimensions", 300, c9},
        {10, "Hamiltonian reduction: r^2 normal form and PBW counts", 60, c10},
        {11, "Harish-Chandra relations and basis bijection", 60, c11},
        {12, "engine properties on every algebra", 300, c12},
    };
    int failed = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(s < c.budget_s, "over the time budget");
        failed += !o.pass;
        std::printf("%s [%2d] %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, s, o.pass ? "" : ": ",
                    o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed;
}
