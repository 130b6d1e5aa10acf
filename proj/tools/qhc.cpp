// qhc: command-line front end over the algebra registry. Every verb prints a
// JSON document with "schema": 1; exit status 0 on success, 1 when a check
// fails, 2 on usage, parse or evaluation errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "qhc/cli/suites.hpp"
#include "qhc/coeff/lexer.hpp"
#include "qhc/hciso/hciso.hpp"

#include <fstream>
#include <iostream>
#include <optional>

using namespace qhc;
using Json = nlohmann::ordered_json;

namespace {

struct Point {
    std::string q, t;
    std::optional<SpecPoint> get() const {
        if (q.empty() && t.empty()) return std::nullopt;
        if (q.empty() || t.empty()) throw std::invalid_argument("--q and --t must be given together");
        SpecPoint p{Rational(q), Rational(t)};
        p.q0.canonicalize();
        p.t0.canonicalize();
        if (p.q0 == 0 || p.q0 == 1 || p.q0 == -1) throw std::invalid_argument("q must not be 0 or a root of unity");
        if (p.t0 == 0) throw std::invalid_argument("t must be nonzero");
        return p;
    }
};

std::string word_str(const Algebra& a, const Word& w) { return w.empty() ? "1" : a.alphabet()->str(w); }

Json terms_json(const Algebra& a, const NcPoly& p, const std::optional<SpecPoint>& pt) {
    Json out = Json::array();
    for (auto& [w, c] : p.terms()) {
        std::string coeff = pt ? coeff_eval(c, pt->q0, pt->t0).get_str() : c.str();
        if (coeff == "0") continue;
        out.push_back(Json{{"word", word_str(a, w)}, {"coeff", coeff}});
    }
    return out;
}

std::string poly_str(const NcPoly& p, const std::optional<SpecPoint>& pt) {
    if (!pt) return p.str();
    return p.map_coeffs([&](const RatCoeff& c) { return coeff_eval(c, pt->q0, pt->t0); }).str();
}

Json poly_json(const Algebra& a, const NcPoly& p, const std::optional<SpecPoint>& pt) {
    return Json{{"expr", poly_str(p, pt)}, {"terms", terms_json(a, p, pt)}};
}

Json header(const std::string& command) { return Json{{"schema", 1}, {"command", command}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qhc: rewriting and verification for the quantum Harish-Chandra isomorphism in rank two"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    Point point;
    app.add_option("-o,--output", output, "write the JSON report to this file");
    app.add_option("--q", point.q, "specialize q at a rational value");
    app.add_option("--t", point.t, "specialize t at a rational value");

    std::string algebra, expr, expr2, gen, suite;
    std::vector<std::string> exprs;
    std::vector<int> max;
    auto alg_opt = [&](CLI::App* s) {
        s->add_option("-a,--algebra", algebra, "daha, sdaha, uq, oq, dq, inv or ham")->required();
    };

    auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
    alg_opt(normalize);
    normalize->add_option("expr", expr)->required();

    auto* mul = app.add_subcommand("mul", "product of two expressions");
    alg_opt(mul);
    mul->add_option("x", expr)->required();
    mul->add_option("y", expr2)->required();

    auto* diamonds = app.add_subcommand("diamonds", "check every overlap and inclusion ambiguity");
    alg_opt(diamonds);

    auto* hilbert = app.add_subcommand("hilbert", "dimensions of the nonnegative cone per bidegree");
    alg_opt(hilbert);
    hilbert->add_option("--max", max, "M N")->expected(2)->required();

    auto* rank = app.add_subcommand("rank", "rank of a family of elements at the specialization points");
    alg_opt(rank);
    rank->add_option("exprs", exprs)->required();

    auto* act = app.add_subcommand("act", "adjoint action of a U_q generator");
    alg_opt(act);
    act->add_option("-g,--gen", gen, "E, F, K1 or K2")->required();
    act->add_option("expr", expr)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("-s,--suite", suite, "suite name or 'all'")->required();

    auto* hc = app.add_subcommand("hc-check", "transport the relations of the reduction to A");

    CLI11_PARSE(app, argc, argv);

    Json out;
    int status = 0;
    try {
        auto pt = point.get();
        SuiteOptions opt;
        if (pt) opt.points = {*pt};
        if (normalize->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            out = header("normalize");
            out["algebra"] = algebra;
            out["input"] = expr;
            out["result"] = poly_json(a, a.nf(expr), pt);
        } else if (mul->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            out = header("mul");
            out["algebra"] = algebra;
            out["result"] = poly_json(a, a.mul(a.nf(expr), a.nf(expr2)), pt);
        } else if (diamonds->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            out = header("diamonds");
            Json reps = Json::array();
            size_t bad = 0;
            for (auto& r : check_ambiguities(a)) {
                bad += !r.resolved;
                reps.push_back(Json{{"algebra", algebra},
                                    {"monomial", word_str(a, r.monomial)},
                                    {"resolved", r.resolved},
                                    {"left_first", terms_json(a, r.left_first, pt)},
                                    {"right_first", terms_json(a, r.right_first, pt)}});
            }
            out["count"] = reps.size();
            out["unresolved"] = bad;
            out["reports"] = reps;
            status = bad ? 1 : 0;
        } else if (hilbert->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            if (max[0] < 0 || max[1] < 0) throw std::invalid_argument("--max takes nonnegative bidegrees");
            HilbertTable h = hilbert_table(a, {max[0], max[1]});
            out = header("hilbert");
            out["algebra"] = algebra;
            out["max"] = {max[0], max[1]};
            Json dims = Json::array();
            for (int m = 0; m <= max[0]; ++m)
                for (int n = 0; n <= max[1]; ++n) dims.push_back({m, n, h.at(m, n)});
            out["dims"] = dims;
        } else if (rank->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            std::vector<NcPoly> fam;
            for (auto& e : exprs) fam.push_back(a.nf(e));
            RankResult r = rank_of_family(fam, opt.points);
            out = header("rank");
            out["algebra"] = algebra;
            out["count"] = fam.size();
            out["rank"] = r.rank;
            out["per_point"] = r.per_point;
            out["agreeing"] = r.agreeing;
            status = r.agreeing == int(opt.points.size()) ? 0 : 1;
        } else if (act->parsed()) {
            const Algebra& a = algebra_by_id(algebra);
            out = header("act");
            out["algebra"] = algebra;
            out["gen"] = gen;
            out["result"] = poly_json(a, adjoint_act(ugen_from(gen), a.nf(expr)), pt);
        } else if (verify->parsed()) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            out = header("verify");
            Json reports = Json::array();
            for (auto& n : names) {
                SuiteReport rep = run_suite(n, opt);
                Json items = Json::array();
                for (auto& i : rep.items) {
                    Json j{{"name", i.name}, {"pass", i.pass}};
                    if (!i.detail.empty()) j["detail"] = i.detail;
                    items.push_back(j);
                }
                reports.push_back(Json{{"suite", n}, {"ok", rep.ok()}, {"count", rep.items.size()},
                                       {"failures", rep.failures()}, {"items", items}});
                if (!rep.ok()) status = 1;
            }
            out["reports"] = reports;
            out["ok"] = status == 0;
        } else if (hc->parsed()) {
            HcReport r = hc_verify();
            out = header("hc-check");
            Json rels = Json::array();
            for (auto& x : r.relations) {
                Json j{{"tag", x.tag}, {"ok", x.ok()}};
                if (!x.ok()) j["residual"] = x.residual.str();
                rels.push_back(j);
            }
            Json basis = Json::array();
            for (auto& b : r.basis)
                basis.push_back(Json{{"deg", {b.deg.m, b.deg.n}}, {"count", b.ham_count}, {"bijective", b.bijective}});
            size_t comp_bad = 0;
            for (auto& c : r.composite) comp_bad += !c.ok();
            out["relations"] = rels;
            out["basis"] = basis;
            out["composite"] = Json{{"count", r.composite.size()}, {"failures", comp_bad}};
            out["ok"] = r.ok();
            status = r.ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        out = header("error");
        out["error"] = Json{{"kind", "parse"}, {"message", e.what()}, {"line", e.line}, {"col", e.col}};
        status = 2;
    } catch (const std::exception& e) {
        out = header("error");
        out["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
        status = 2;
    }

    std::string text = out.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
        f << text;
    }
    return status;
}
