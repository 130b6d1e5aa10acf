#include "qhc/rewrite/engine.hpp"

#include "qhc/rewrite/linalg.hpp"

#include <functional>
#include <set>

namespace qhc {

NcPoly normal_form(const Algebra& a, const NcPoly& p) { return a.nf(p); }

std::vector<AmbiguityReport> check_ambiguities(const Algebra& a, bool include_generated) {
    const auto& rules = a.spec().rules();
    const auto& al = a.alphabet();
    std::vector<AmbiguityReport> out;
    auto use = [&](const RewriteRule& r) { return include_generated || r.core; };
    auto poly_of = [&](const Word& w) { return NcPoly::monomial(al, w); };
    for (auto& r1 : rules) {
        if (!use(r1)) continue;
        for (auto& r2 : rules) {
            if (!use(r2)) continue;
            // proper overlaps: suffix of r1.lhs equals prefix of r2.lhs
            for (size_t k = 1; k < std::min(r1.lhs.size(), r2.lhs.size()) + 0; ++k) {
                if (r1.lhs.substr(r1.lhs.size() - k) != r2.lhs.substr(0, k)) continue;
                AmbiguityReport rep;
                rep.monomial = r1.lhs + r2.lhs.substr(k);
                rep.left_first = a.nf(r1.rhs * poly_of(r2.lhs.substr(k)));
                rep.right_first = a.nf(poly_of(r1.lhs.substr(0, r1.lhs.size() - k)) * r2.rhs);
                rep.resolved = rep.left_first == rep.right_first;
                rep.left_rule = r1.tag;
                rep.right_rule = r2.tag;
                out.push_back(std::move(rep));
            }
            // inclusions: r2.lhs is a proper factor of r1.lhs
            if (&r1 == &r2 || r2.lhs.size() >= r1.lhs.size()) continue;
            for (size_t p = 0; p + r2.lhs.size() <= r1.lhs.size(); ++p) {
                if (r1.lhs.compare(p, r2.lhs.size(), r2.lhs) != 0) continue;
                AmbiguityReport rep;
                rep.monomial = r1.lhs;
                rep.left_first = a.nf(r1.rhs);
                rep.right_first = a.nf(poly_of(r1.lhs.substr(0, p)) * r2.rhs *
                                       poly_of(r1.lhs.substr(p + r2.lhs.size())));
                rep.resolved = rep.left_first == rep.right_first;
                rep.left_rule = r1.tag;
                rep.right_rule = r2.tag;
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

NcPoly straighten_trace(const Algebra& a, const Word& w, Strategy first) {
    auto red = a.rw().find_redex(w, first);
    NcPoly p = NcPoly::monomial(a.alphabet(), w);
    if (!red) return p;
    return a.rw().reduce_reference(p, first, 1000000, red);
}

std::map<std::pair<int, int>, std::vector<Word>> irreducible_words(const Algebra& a, Bideg max) {
    const auto& spec = a.spec();
    const auto& al = *a.alphabet();
    std::vector<Letter> letters;
    int zero_budget = 0;
    for (auto& b : spec.pbw()) {
        Bideg d = al.gen(b.gen).deg;
        if (d.m < 0 || d.n < 0) throw std::invalid_argument(spec.id() + ": Hilbert series needs an N^2 grading");
        if (d == Bideg{}) {
            if (b.max_exp < 0) throw std::invalid_argument(spec.id() + ": degree-zero generator is unbounded");
            zero_budget += b.max_exp;
        }
        letters.push_back(b.gen);
    }
    std::map<std::pair<int, int>, std::vector<Word>> out;
    Word cur;
    const auto& rw = a.rw();
    std::function<void(Bideg, int)> dfs = [&](Bideg d, int zeros) {
        out[{d.m, d.n}].push_back(cur);
        for (Letter x : letters) {
            Bideg nd = d + al.gen(x).deg;
            if (nd.m > max.m || nd.n > max.n) continue;
            int nz = zeros + (al.gen(x).deg == Bideg{});
            if (nz > zero_budget) continue;
            if (rw.rule_at(Word(1, x), 0, 1) >= 0) continue;
            if (!cur.empty()) {
                Word pairw{cur.back(), x};
                if (rw.rule_at(pairw, 0, 2) >= 0) continue;
            }
            cur.push_back(x);
            dfs(nd, nz);
            cur.pop_back();
        }
    };
    dfs({0, 0}, 0);
    return out;
}

HilbertTable hilbert_table(const Algebra& a, Bideg max) {
    HilbertTable h;
    h.max = max;
    for (int m = 0; m <= max.m; ++m)
        for (int n = 0; n <= max.n; ++n) h.dims[{m, n}] = 0;
    for (auto& [d, ws] : irreducible_words(a, max)) h.dims[d] = long(ws.size());
    return h;
}

std::vector<Bideg> pbw_mismatches(const Algebra& a, Bideg max) {
    std::vector<Bideg> bad;
    auto irr = irreducible_words(a, max);
    for (int m = 0; m <= max.m; ++m)
        for (int n = 0; n <= max.n; ++n) {
            auto e = a.spec().pbw_enumerate({m, n});
            std::set<Word> s1(e.begin(), e.end());
            auto it = irr.find({m, n});
            std::set<Word> s2;
            if (it != irr.end()) s2.insert(it->second.begin(), it->second.end());
            bool ok = s1 == s2;
            for (auto& w : s1) ok = ok && a.spec().pbw_accepts(w);
            if (!ok) bad.push_back({m, n});
        }
    return bad;
}

const std::vector<SpecPoint>& default_points() {
    static const std::vector<SpecPoint> pts = {
        {Rational(7, 3), Rational(11, 5)},
        {Rational(13, 2), Rational(5, 9)},
        {Rational(17, 11), Rational(19, 7)},
    };
    return pts;
}

Fp point_fp(const Rational& r) {
    Fp n = to_fp(Integer(r.get_num())), d = to_fp(Integer(r.get_den()));
    return n / d;
}

RankResult rank_of_family(const std::vector<NcPoly>& elems, const std::vector<SpecPoint>& points) {
    std::map<Word, size_t, GradedLex> col;
    for (auto& e : elems)
        for (auto& [w, c] : e.terms()) col.emplace(w, 0);
    size_t k = 0;
    for (auto& [w, i] : col) i = k++;
    RankResult res;
    for (auto& pt : points) {
        Fp q0 = point_fp(pt.q0), t0 = point_fp(pt.t0);
        std::vector<ModpRow> rows;
        for (auto& e : elems) {
            ModpRow row(col.size(), 0);
            for (auto& [w, c] : e.terms()) {
                try {
                    row[col[w]] = eval_fp(c, q0, t0).value();
                } catch (const EvalError& err) {
                    throw EvalError(err.factor + " at q=" + pt.q0.get_str() + ", t=" + pt.t0.get_str());
                }
            }
            rows.push_back(std::move(row));
        }
        res.per_point.push_back(int(rank_modp(std::move(rows), col.size())));
    }
    for (int r : res.per_point) res.rank = std::max(res.rank, r);
    for (int r : res.per_point) res.agreeing += r == res.rank;
    return res;
}

}  // namespace qhc
