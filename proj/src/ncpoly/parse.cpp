#include "qhc/ncpoly/parse.hpp"

namespace qhc {

ExprHooks<NcPoly> ncpoly_hooks(const AlphaPtr& alpha) {
    ExprHooks<NcPoly> h;
    h.scalar = [alpha](const RatCoeff& c) { return NcPoly::scalar(alpha, c); };
    h.symbol = [alpha](const Token& tok, int e) -> std::optional<NcPoly> {
        auto l = alpha->find(tok.text);
        if (!l) return std::nullopt;
        Letter x = *l;
        if (e < 0) {
            auto inv = alpha->inverse(x);
            if (!inv) TokenStream::fail_at(tok, "generator '" + tok.text + "' has no inverse");
            x = *inv;
            e = -e;
        }
        return NcPoly::monomial(alpha, Word(size_t(e), x));
    };
    h.as_scalar = [](const NcPoly& p) -> std::optional<RatCoeff> {
        if (p.is_zero()) return RatCoeff();
        if (p.size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
        return std::nullopt;
    };
    return h;
}

NcPoly parse_ncpoly(const AlphaPtr& alpha, std::string_view src) {
    auto h = ncpoly_hooks(alpha);
    return ExprParser<NcPoly>(src, h).parse();
}

}  // namespace qhc
