#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhc {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

enum class Tok { Int, Name, Caret, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

// Splits an expression into tokens. Names are [A-Za-z_][A-Za-z0-9_]*.
std::vector<Token> tokenize(std::string_view src);

// Cursor over a token stream with error helpers.
class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
    const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    const Token& expect(Tok k, const char* what);
    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.col); }
    size_t pos() const { return pos_; }
    void seek(size_t p) { pos_ = p; }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace qhc
