#pragma once

#include "qhc/coeff/parse.hpp"
#include "qhc/ncpoly/ncpoly.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace qhc {

// Hooks that let one grammar build different element types (plain NcPoly,
// localized elements). `symbol(name, e)` returns name^e or nullopt if the
// name is unknown; negative e must be resolved through an inverse symbol.
template <class V>
struct ExprHooks {
    std::function<V(const RatCoeff&)> scalar;
    std::function<std::optional<V>(const Token&, int)> symbol;
    std::function<std::optional<RatCoeff>(const V&)> as_scalar;
};

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | power ; power := atom ('^' int)? ;
// atom := integer | name | '(' expr ')'.
// q and t are scalars; '/' only divides by scalars.
template <class V>
class ExprParser {
public:
    ExprParser(std::string_view src, const ExprHooks<V>& h) : ts_(tokenize(src)), h_(h) {}

    V parse() {
        V v = expr();
        if (ts_.peek().kind != Tok::End) ts_.fail("unexpected trailing input");
        return v;
    }

private:
    V expr() {
        V r = term();
        for (;;) {
            if (ts_.accept(Tok::Plus)) r = r + term();
            else if (ts_.accept(Tok::Minus)) r = r - term();
            else return r;
        }
    }

    V term() {
        V r = unary();
        for (;;) {
            if (ts_.accept(Tok::Star)) {
                r = r * unary();
            } else if (ts_.peek().kind == Tok::Slash) {
                Token at = ts_.next();
                V d = unary();
                auto s = h_.as_scalar(d);
                if (!s) TokenStream::fail_at(at, "division is only defined by scalars");
                if (s->is_zero()) TokenStream::fail_at(at, "division by zero");
                r = r * h_.scalar(s->inverse());
            } else {
                return r;
            }
        }
    }

    V unary() {
        if (ts_.accept(Tok::Minus)) return h_.scalar(RatCoeff(-1)) * unary();
        if (ts_.accept(Tok::Plus)) return unary();
        return power();
    }

    V power() {
        const Token start = ts_.peek();
        if (start.kind == Tok::Name && start.text != "q" && start.text != "t") {
            ts_.next();
            int e = 1;
            if (ts_.accept(Tok::Caret)) e = parse_exponent(ts_);
            auto v = h_.symbol(start, e);
            if (!v) TokenStream::fail_at(start, "unknown generator '" + start.text + "'");
            return *v;
        }
        V b = atom();
        if (!ts_.accept(Tok::Caret)) return b;
        const Token at = ts_.peek();
        int e = parse_exponent(ts_);
        if (auto s = h_.as_scalar(b)) {
            if (e < 0 && s->is_zero()) TokenStream::fail_at(at, "negative power of zero");
            return h_.scalar(s->pow(e));
        }
        if (e < 0) TokenStream::fail_at(at, "negative power of a non-scalar expression");
        V r = h_.scalar(RatCoeff(1));
        for (int i = 0; i < e; ++i) r = r * b;
        return r;
    }

    V atom() {
        const Token t = ts_.peek();
        switch (t.kind) {
        case Tok::Int: ts_.next(); return h_.scalar(RatCoeff(Integer(mpz_class(t.text))));
        case Tok::Name:
            ts_.next();
            return h_.scalar(t.text == "q" ? RatCoeff::q() : RatCoeff::t());
        case Tok::LParen: {
            ts_.next();
            V r = expr();
            ts_.expect(Tok::RParen, "')'");
            return r;
        }
        default: ts_.fail("expected an expression");
        }
    }

    TokenStream ts_;
    const ExprHooks<V>& h_;
};

// Parses into an NcPoly over `alpha`; name^-k resolves to the inverse
// generator when one exists.
NcPoly parse_ncpoly(const AlphaPtr& alpha, std::string_view src);
ExprHooks<NcPoly> ncpoly_hooks(const AlphaPtr& alpha);

}  // namespace qhc
