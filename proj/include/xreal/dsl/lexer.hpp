#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xreal/coefficient.hpp"
#include "xreal/error.hpp"

namespace xreal::dsl {

enum class TokenKind { number, ident, plus, minus, star, slash, caret, lparen, rparen };

const char* to_string(TokenKind kind) noexcept;

struct Token {
    TokenKind kind;
    SourceSpan span;
    std::string text;   // literal source text
    Rational value;     // number tokens: the exact value

    friend bool operator==(const Token&, const Token&) = default;
};

/**
 * Splits density-language source into tokens, skipping whitespace.
 *
 * Numbers are decimal literals (`2`, `1.5`, `1e-3`) or exact rationals `p/q`.
 * `p/q` is read as one token only when written without spaces, not directly
 * after `^` or `/`, and not followed by `^`, so that `x/2/3` and `2/3^2`
 * keep their operator meaning. Throws LexError with the span of an illegal
 * character.
 */
std::vector<Token> tokenize(std::string_view text);

} // namespace xreal::dsl
