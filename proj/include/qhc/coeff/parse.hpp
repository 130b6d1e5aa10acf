#pragma once

#include "qhc/coeff/lexer.hpp"
#include "qhc/coeff/ratcoeff.hpp"

#include <string_view>

namespace qhc {

// Parses the coefficient grammar: integers, q, t, '^' with an integer
// exponent, + - * /, parentheses. Throws ParseError or DivisionByZero.
RatCoeff parse_coeff(std::string_view src);

// Reads a signed integer exponent after '^'.
int parse_exponent(TokenStream& ts);

}  // namespace qhc
