#include "qhc/rewrite/spec.hpp"

#include "qhc/ncpoly/parse.hpp"

#include <algorithm>
#include <functional>

namespace qhc {

int64_t OrderComponent::eval(const Word& w) const {
    switch (kind) {
    case Kind::Additive: {
        int64_t s = 0;
        for (Letter l : w) s += weight[l];
        return s;
    }
    case Kind::PairCount: {
        int64_t seen_b = 0, s = 0;
        for (Letter l : w) {
            s += seen_b * a[l];
            seen_b += b[l];
        }
        return s;
    }
    case Kind::Inversions: {
        int64_t s = 0;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j) s += weight[w[i]] > weight[w[j]];
        return s;
    }
    case Kind::Lex: return 0;
    }
    return 0;
}

int64_t OrderComponent::count_a(const Word& w) const {
    int64_t s = 0;
    for (Letter l : w) s += a[l];
    return s;
}

int64_t OrderComponent::count_b(const Word& w) const {
    int64_t s = 0;
    for (Letter l : w) s += b[l];
    return s;
}

OrderComponent length_component(const Alphabet& a) {
    OrderComponent c;
    c.kind = OrderComponent::Kind::Additive;
    c.name = "length";
    c.weight.assign(a.size(), 1);
    return c;
}

OrderComponent additive_component(const Alphabet& a, const std::vector<std::pair<std::string, int>>& w,
                                  std::string name) {
    OrderComponent c;
    c.kind = OrderComponent::Kind::Additive;
    c.name = std::move(name);
    c.weight.assign(a.size(), 0);
    for (auto& [n, v] : w) c.weight[a.at(n)] = v;
    return c;
}

OrderComponent pair_component(const Alphabet& al, const std::vector<std::string>& a_names,
                              const std::vector<std::string>& b_names, std::string name) {
    OrderComponent c;
    c.kind = OrderComponent::Kind::PairCount;
    c.name = std::move(name);
    c.a.assign(al.size(), 0);
    c.b.assign(al.size(), 0);
    for (auto& n : a_names) c.a[al.at(n)]++;
    for (auto& n : b_names) c.b[al.at(n)]++;
    return c;
}

OrderComponent inversion_component(const Alphabet& a, const std::vector<PbwBlock>& blocks) {
    OrderComponent c;
    c.kind = OrderComponent::Kind::Inversions;
    c.name = "inversions";
    c.weight.assign(a.size(), -1);
    for (size_t i = 0; i < blocks.size(); ++i) {
        c.weight[blocks[i].gen] = int(i);
        if (blocks[i].inv) c.weight[*blocks[i].inv] = int(i);
    }
    for (size_t l = 0; l < a.size(); ++l) {
        if (c.weight[l] >= 0) continue;
        auto inv = a.inverse(Letter(l));
        c.weight[l] = inv && c.weight[*inv] >= 0 ? c.weight[*inv] : int(blocks.size());
    }
    return c;
}

OrderComponent lex_component() {
    OrderComponent c;
    c.kind = OrderComponent::Kind::Lex;
    c.name = "lex";
    return c;
}

NcPoly AlgebraSpec::parse(std::string_view src) const { return parse_ncpoly(alpha_, src); }

Word AlgebraSpec::word(std::string_view src) const {
    NcPoly p = parse(src);
    if (p.size() != 1 || !p.terms().begin()->second.is_one())
        throw std::invalid_argument("not a monomial: " + std::string(src));
    return p.terms().begin()->first;
}

namespace {

std::vector<int> letter_multiset(const Word& w, size_t n) {
    std::vector<int> m(n, 0);
    for (Letter l : w) m[l]++;
    return m;
}

}  // namespace

int AlgebraSpec::compare(const Word& u, const Word& v) const {
    for (auto& c : order_) {
        if (c.kind == OrderComponent::Kind::Lex) {
            if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
            return u < v ? -1 : (u == v ? 0 : 1);
        }
        int64_t x = c.eval(u), y = c.eval(v);
        if (x != y) return x < y ? -1 : 1;
    }
    return u < v ? -1 : (u == v ? 0 : 1);
}

void AlgebraSpec::validate_rule(const RewriteRule& r) const {
    auto fail = [&](const std::string& why) {
        throw InvalidRule(id_ + ": rule " + r.tag + " (" + str(r.lhs) + "): " + why);
    };
    if (r.lhs.empty()) fail("empty left-hand side");
    if (r.lhs.size() > 2) fail("left-hand sides longer than two letters are not supported");
    Bideg d = alpha_->degree(r.lhs);
    for (auto& [u, c] : r.rhs.terms()) {
        if (u == r.lhs) fail("left-hand side occurs in the right-hand side");
        if (!(alpha_->degree(u) == d)) fail("not homogeneous: " + str(u));
        bool decided = false;
        for (auto& comp : order_) {
            using K = OrderComponent::Kind;
            if (comp.kind == K::Lex || comp.kind == K::Inversions) {
                if (letter_multiset(u, alpha_->size()) != letter_multiset(r.lhs, alpha_->size()))
                    fail("order undecided before " + comp.name + " for " + str(u));
            }
            if (comp.kind == K::Lex) {
                if (u < r.lhs) {
                    decided = true;
                    break;
                }
                fail("not lex-smaller: " + str(u));
            }
            if (comp.kind == K::PairCount) {
                if (comp.count_a(u) > comp.count_a(r.lhs) || comp.count_b(u) > comp.count_b(r.lhs))
                    fail("class count grows under " + comp.name + " for " + str(u));
            }
            int64_t x = comp.eval(u), y = comp.eval(r.lhs);
            if (x < y) {
                decided = true;
                break;
            }
            if (x > y) fail("increases " + comp.name + " for " + str(u));
        }
        if (!decided) fail("order does not decide " + str(u));
    }
}

void AlgebraSpec::add_rule(const Word& lhs, const NcPoly& rhs, std::string tag, bool core) {
    for (auto& r : rules_)
        if (r.lhs == lhs) throw InvalidRule(id_ + ": duplicate left-hand side " + str(lhs) + " (" + tag + ")");
    RewriteRule r{lhs, rhs, std::move(tag), core};
    validate_rule(r);
    rules_.push_back(std::move(r));
}

void AlgebraSpec::drop_rule(const std::string& tag) {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](auto& r) { return r.tag == tag; });
    if (it == rules_.end()) throw std::invalid_argument("no rule tagged " + tag);
    rules_.erase(it);
}

void AlgebraSpec::replace_rule(const std::string& tag, const NcPoly& rhs) {
    for (auto& r : rules_)
        if (r.tag == tag) {
            RewriteRule nr{r.lhs, rhs, r.tag, r.core};
            validate_rule(nr);
            r = std::move(nr);
            return;
        }
    throw std::invalid_argument("no rule tagged " + tag);
}

const RewriteRule* AlgebraSpec::find_rule(const std::string& tag) const {
    for (auto& r : rules_)
        if (r.tag == tag) return &r;
    return nullptr;
}

void AlgebraSpec::generate_localization_rules() {
    std::vector<int> block(alpha_->size(), -1);
    for (size_t i = 0; i < pbw_.size(); ++i) {
        block[pbw_[i].gen] = int(i);
        if (pbw_[i].inv) block[*pbw_[i].inv] = int(i);
    }
    auto has_rule = [&](const Word& w) -> const RewriteRule* {
        for (auto& r : rules_)
            if (r.lhs == w) return &r;
        return nullptr;
    };
    auto put = [&](Letter x, Letter y, const NcPoly& rhs) {
        Word lhs{x, y};
        if (auto* r = has_rule(lhs)) {
            if (!r->core && r->rhs != rhs)
                throw InvalidRule(id_ + ": inconsistent localization rules for " + str(lhs));
            return;
        }
        add_rule(lhs, rhs, "loc:" + alpha_->name(x) + alpha_->name(y), false);
    };
    for (auto& qc : qcentral_) {
        if (!qc.invertible || qc.elem.size() != 1) continue;
        Letter g = qc.elem[0];
        auto gi = alpha_->inverse(g);
        if (!gi) throw InvalidRule(id_ + ": " + alpha_->name(g) + " declared invertible without an inverse letter");
        NcPoly one = NcPoly::scalar(alpha_, 1);
        put(g, *gi, one);
        put(*gi, g, one);
        for (size_t yi = 0; yi < alpha_->size(); ++yi) {
            Letter y = Letter(yi);
            if (y == g || y == *gi || block[y] < 0) continue;
            int e = pair(qc.kappa, alpha_->gen(y).deg);
            for (int s : {1, -1}) {
                Letter x = s > 0 ? g : *gi;
                if (block[x] > block[y]) {
                    // x y = q^{s e} y x
                    put(x, y, NcPoly::monomial(alpha_, Word{y, x}, RatCoeff::q(s * e)));
                } else if (block[y] > block[x]) {
                    // y x = q^{-s e} x y
                    put(y, x, NcPoly::monomial(alpha_, Word{x, y}, RatCoeff::q(-s * e)));
                }
            }
        }
    }
}

bool AlgebraSpec::pbw_accepts(const Word& w) const {
    size_t pos = 0;
    for (auto& b : pbw_) {
        size_t k = 0;
        if (pos < w.size() && w[pos] == b.gen) {
            while (pos < w.size() && w[pos] == b.gen) ++pos, ++k;
        } else if (b.inv && pos < w.size() && w[pos] == *b.inv) {
            while (pos < w.size() && w[pos] == *b.inv) ++pos, ++k;
        }
        if (b.max_exp >= 0 && int(k) > b.max_exp) return false;
    }
    return pos == w.size();
}

std::vector<Word> AlgebraSpec::pbw_enumerate(Bideg d) const {
    for (auto& b : pbw_) {
        Bideg g = alpha_->gen(b.gen).deg;
        if (g.m < 0 || g.n < 0) throw std::invalid_argument(id_ + ": positive cone is not graded by N^2");
        if (g == Bideg{} && b.max_exp < 0) throw std::invalid_argument(id_ + ": degree-zero generator is unbounded");
    }
    std::vector<Word> out;
    Word cur;
    std::function<void(size_t, Bideg)> rec = [&](size_t i, Bideg rem) {
        if (i == pbw_.size()) {
            if (rem == Bideg{}) out.push_back(cur);
            return;
        }
        Bideg g = alpha_->gen(pbw_[i].gen).deg;
        size_t mark = cur.size();
        for (int k = 0;; ++k) {
            if (pbw_[i].max_exp >= 0 && k > pbw_[i].max_exp) break;
            Bideg r = rem - k * g;
            if (r.m < 0 || r.n < 0) break;
            rec(i + 1, r);
            cur.push_back(pbw_[i].gen);
            if (g == Bideg{} && pbw_[i].max_exp < 0) break;
        }
        cur.resize(mark);
    };
    rec(0, d);
    return out;
}

}  // namespace qhc
