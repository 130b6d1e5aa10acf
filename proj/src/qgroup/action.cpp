#include "qhc/qgroup/qgroup.hpp"

#include <map>
#include <mutex>

namespace qhc {

const char* ugen_name(UGen g) {
    switch (g) {
    case UGen::E: return "E";
    case UGen::F: return "F";
    case UGen::K1: return "K1";
    case UGen::K2: return "K2";
    }
    return "?";
}

UGen ugen_from(const std::string& name) {
    for (UGen g : kUGens)
        if (name == ugen_name(g)) return g;
    throw std::invalid_argument("unknown U_q generator '" + name + "' (expected E, F, K1 or K2)");
}

void fill_oq_action(LetterAction& act, const Algebra& alg, const std::array<std::string, 4>& names) {
    const AlphaPtr& al = alg.alphabet();
    act.alg = &alg;
    if (act.weight.empty()) {
        act.weight.assign(al->size(), {0, 0});
        act.e.assign(al->size(), NcPoly(al));
        act.f.assign(al->size(), NcPoly(al));
    }
    auto gen = [&](int i, int j) { return NcPoly::letter(al, names[(i - 1) * 2 + (j - 1)]); };
    auto d = [](int a, int b) { return a == b ? 1 : 0; };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Letter x = al->at(names[(i - 1) * 2 + (j - 1)]);
            act.weight[x] = {d(i, 1) - d(j, 1), d(i, 2) - d(j, 2)};
            NcPoly e(al), f(al);
            if (j == 1) e += gen(i, 2);
            if (i == 2) e -= gen(1, j).scaled(RatCoeff::q(2 * d(j, 2)));
            if (j == 2) f += gen(i, 1).scaled(RatCoeff::q(2 * d(i, 2) - 1));
            if (i == 1) f -= gen(2, j).scaled(RatCoeff::q(-1));
            act.e[x] = e;
            act.f[x] = f;
        }
}

ActionFn letter_action(LetterAction data) {
    return [data = std::move(data)](UGen g, const NcPoly& x) -> NcPoly {
        const Algebra& A = *data.alg;
        const AlphaPtr& al = A.alphabet();
        auto wt = [&](Letter l, int m) { return data.weight[l][m]; };
        NcPoly out(al);
        for (auto& [w, c] : x.terms()) {
            size_t n = w.size();
            switch (g) {
            case UGen::K1:
            case UGen::K2: {
                int m = g == UGen::K1 ? 0 : 1, s = 0;
                for (Letter l : w) s += wt(l, m);
                out.add_term(w, c * RatCoeff::q(s));
                break;
            }
            case UGen::E:
                // E(xy) = E(x) K1K2^-1(y) + x E(y)
                for (size_t i = 0; i < n; ++i) {
                    int s = 0;
                    for (size_t j = i + 1; j < n; ++j) s += wt(w[j], 0) - wt(w[j], 1);
                    NcPoly mid = data.e[w[i]];
                    if (mid.is_zero()) continue;
                    NcPoly pre = NcPoly::monomial(al, w.substr(0, i), c * RatCoeff::q(s));
                    NcPoly post = NcPoly::monomial(al, w.substr(i + 1));
                    out += pre * mid * post;
                }
                break;
            case UGen::F:
                // F(xy) = F(x) y + K1^-1K2(x) F(y)
                for (size_t i = 0; i < n; ++i) {
                    int s = 0;
                    for (size_t j = 0; j < i; ++j) s += wt(w[j], 1) - wt(w[j], 0);
                    NcPoly mid = data.f[w[i]];
                    if (mid.is_zero()) continue;
                    NcPoly pre = NcPoly::monomial(al, w.substr(0, i), c * RatCoeff::q(s));
                    NcPoly post = NcPoly::monomial(al, w.substr(i + 1));
                    out += pre * mid * post;
                }
                break;
            }
        }
        return A.nf(out);
    };
}

namespace {

struct Registry {
    std::mutex mu;
    std::map<std::string, ActionFn> fns;
};

Registry& registry() {
    static Registry r;
    return r;
}

void ensure_defaults() {
    static std::once_flag once;
    std::call_once(once, [] {
        register_action("uq", uq_adjoint);
        LetterAction a;
        fill_oq_action(a, oq(), {"l11", "l12", "l21", "l22"});
        register_action("oq", letter_action(std::move(a)));
    });
}

}  // namespace

void register_action(const std::string& algebra_id, ActionFn fn) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    r.fns[algebra_id] = std::move(fn);
}

NcPoly adjoint_act(UGen g, const NcPoly& x) {
    ensure_defaults();
    if (!x.alphabet()) return x;
    ActionFn fn;
    {
        auto& r = registry();
        std::lock_guard lock(r.mu);
        auto it = r.fns.find(x.alphabet()->id());
        if (it == r.fns.end()) throw std::invalid_argument("no U_q action registered for algebra '" + x.alphabet()->id() + "'");
        fn = it->second;
    }
    return fn(g, x);
}

LocalizedElem adjoint_act(UGen g, const LocalizedElem& x) {
    return x.map_body([g](const NcPoly& b) { return adjoint_act(g, b); });
}

bool is_invariant(const NcPoly& x) {
    return adjoint_act(UGen::E, x).is_zero() && adjoint_act(UGen::F, x).is_zero() &&
           adjoint_act(UGen::K1, x) == x && adjoint_act(UGen::K2, x) == x;
}

bool is_invariant(const LocalizedElem& x) { return is_invariant(x.body()); }

}  // namespace qhc
