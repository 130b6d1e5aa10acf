#include "qhc/coeff/parse.hpp"

#include <climits>

namespace qhc {

int parse_exponent(TokenStream& ts) {
    bool neg = false;
    if (ts.accept(Tok::Minus)) neg = true;
    else ts.accept(Tok::Plus);
    const Token& t = ts.expect(Tok::Int, "integer exponent");
    if (t.text.size() > 6) TokenStream::fail_at(t, "exponent too large");
    int e = std::stoi(t.text);
    return neg ? -e : e;
}

namespace {

RatCoeff expr(TokenStream& ts);

RatCoeff atom(TokenStream& ts) {
    const Token& t = ts.peek();
    switch (t.kind) {
    case Tok::Int: {
        ts.next();
        return RatCoeff(Integer(mpz_class(t.text)));
    }
    case Tok::Name:
        if (t.text == "q") {
            ts.next();
            return RatCoeff::q();
        }
        if (t.text == "t") {
            ts.next();
            return RatCoeff::t();
        }
        ts.fail("unknown symbol '" + t.text + "' in coefficient");
    case Tok::LParen: {
        ts.next();
        RatCoeff r = expr(ts);
        ts.expect(Tok::RParen, "')'");
        return r;
    }
    default: ts.fail("expected a coefficient");
    }
}

RatCoeff power(TokenStream& ts) {
    RatCoeff b = atom(ts);
    if (ts.accept(Tok::Caret)) {
        const Token& at = ts.peek();
        int e = parse_exponent(ts);
        if (e < 0 && b.is_zero()) TokenStream::fail_at(at, "negative power of zero");
        return b.pow(e);
    }
    return b;
}

RatCoeff unary(TokenStream& ts) {
    if (ts.accept(Tok::Minus)) return -unary(ts);
    if (ts.accept(Tok::Plus)) return unary(ts);
    return power(ts);
}

RatCoeff term(TokenStream& ts) {
    RatCoeff r = unary(ts);
    for (;;) {
        if (ts.accept(Tok::Star)) {
            r = r * unary(ts);
        } else if (ts.peek().kind == Tok::Slash) {
            Token at = ts.next();
            RatCoeff d = unary(ts);
            if (d.is_zero()) TokenStream::fail_at(at, "division by zero");
            r = r / d;
        } else {
            return r;
        }
    }
}

RatCoeff expr(TokenStream& ts) {
    RatCoeff r = term(ts);
    for (;;) {
        if (ts.accept(Tok::Plus)) r = r + term(ts);
        else if (ts.accept(Tok::Minus)) r = r - term(ts);
        else return r;
    }
}

}  // namespace

RatCoeff parse_coeff(std::string_view src) {
    TokenStream ts(tokenize(src));
    RatCoeff r = expr(ts);
    if (ts.peek().kind != Tok::End) ts.fail("unexpected trailing input");
    return r;
}

}  // namespace qhc
