#include "qhc/coeff/laurent.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

namespace qhc {

Laurent Laurent::monomial(const Integer& c, int qe, int te) {
    Laurent l;
    if (!c.is_zero()) l.terms_.emplace_back(MonoKey::pack(qe, te), c);
    return l;
}

int Laurent::min_qe() const {
    int m = INT_MAX;
    for (auto& [k, c] : terms_) m = std::min(m, MonoKey::qe(k));
    return terms_.empty() ? 0 : m;
}
int Laurent::max_qe() const {
    int m = INT_MIN;
    for (auto& [k, c] : terms_) m = std::max(m, MonoKey::qe(k));
    return terms_.empty() ? 0 : m;
}
int Laurent::min_te() const { return terms_.empty() ? 0 : MonoKey::te(terms_.front().first); }
int Laurent::max_te() const { return terms_.empty() ? 0 : MonoKey::te(terms_.back().first); }

Laurent Laurent::shifted(int qe, int te) const {
    Laurent r = *this;
    uint64_t s = MonoKey::pack(qe, te);
    for (auto& [k, c] : r.terms_) k = MonoKey::mul(k, s);
    return r;
}

Integer Laurent::content() const {
    Integer g;
    for (auto& [k, c] : terms_) {
        g = Integer::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

namespace {

template <bool Sub>
std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a, const std::vector<Laurent::Term>& b) {
    std::vector<Laurent::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, Sub ? -b[j].second : b[j].second);
            ++j;
        } else {
            Integer c = Sub ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

Laurent& Laurent::operator*=(const Integer& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_ = merge<false>(a.terms_, b.terms_);
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_ = merge<true>(a.terms_, b.terms_);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Laurent& m = a.terms_.size() == 1 ? a : b;
        const Laurent& o = a.terms_.size() == 1 ? b : a;
        const auto& [mk, mc] = m.terms_[0];
        r.terms_.reserve(o.terms_.size());
        for (auto& [k, c] : o.terms_) r.terms_.emplace_back(MonoKey::mul(k, mk), c * mc);
        return r;  // key shift preserves order
    }
    std::vector<Laurent::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) prod.emplace_back(MonoKey::mul(ka, kb), ca * cb);
    std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& t : prod) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

Laurent Laurent::pow(unsigned n) const {
    Laurent r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Laurent Laurent::divexact(const Integer& c) const {
    Laurent r = *this;
    for (auto& [k, v] : r.terms_) v = Integer::divexact(v, c);
    return r;
}

size_t Laurent::hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (auto& [k, c] : terms_) {
        h ^= std::hash<uint64_t>{}(k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

const Laurent::Term& Laurent::leading() const {
    const Term* best = &terms_.front();
    for (auto& t : terms_) {
        int d = MonoKey::qe(t.first) + MonoKey::te(t.first);
        int bd = MonoKey::qe(best->first) + MonoKey::te(best->first);
        if (d > bd || (d == bd && MonoKey::te(t.first) > MonoKey::te(best->first))) best = &t;
    }
    return *best;
}

namespace {

void put_var(std::ostringstream& os, const char* v, int e, bool& first) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << v;
    if (e != 1) os << '^' << e;
}

}  // namespace

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    // Storage order: ascending t-degree, then ascending q-degree.
    std::vector<const Term*> order;
    for (auto& t : terms_) order.push_back(&t);
    std::ostringstream os;
    bool lead = true;
    for (const Term* t : order) {
        Integer c = t->second;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (lead) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        lead = false;
        int qe = MonoKey::qe(t->first), te = MonoKey::te(t->first);
        bool first = true;
        if (!c.is_one() || (qe == 0 && te == 0)) {
            os << c.str();
            first = false;
        }
        put_var(os, "q", qe, first);
        put_var(os, "t", te, first);
    }
    return os.str();
}

}  // namespace qhc
