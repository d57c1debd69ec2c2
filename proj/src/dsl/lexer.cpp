#include "xreal/dsl/lexer.hpp"

#include <cctype>

namespace xreal::dsl {

const char* to_string(TokenKind kind) noexcept
{
    switch (kind) {
    case TokenKind::number: return "number";
    case TokenKind::ident: return "identifier";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::caret: return "'^'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    }
    return "?";
}

namespace {

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto digits_from = [&](std::size_t k) {
        while (k < n && is_digit(text[k])) {
            ++k;
        }
        return k;
    };

    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
            std::size_t k = digits_from(i);
            const bool integral_start = k > i;
            bool plain_integer = true;
            if (k < n && text[k] == '.') {
                plain_integer = false;
                k = digits_from(k + 1);
            }
            if (k < n && (text[k] == 'e' || text[k] == 'E')) {
                std::size_t e = k + 1;
                if (e < n && (text[e] == '+' || text[e] == '-')) {
                    ++e;
                }
                if (e < n && is_digit(text[e])) {
                    plain_integer = false;
                    k = digits_from(e);
                }
            }
            if (plain_integer && integral_start && k + 1 < n && text[k] == '/' &&
                is_digit(text[k + 1])) {
                const bool after_operator =
                    !tokens.empty() && (tokens.back().kind == TokenKind::caret ||
                                        tokens.back().kind == TokenKind::slash);
                std::size_t q = digits_from(k + 1);
                std::size_t look = q;
                while (look < n && std::isspace(static_cast<unsigned char>(text[look]))) {
                    ++look;
                }
                const bool before_power = look < n && text[look] == '^';
                const bool malformed = q < n && (text[q] == '.' || is_ident_char(text[q]));
                if (!after_operator && !before_power && !malformed) {
                    k = q;
                }
            }
            std::string literal(text.substr(start, k - start));
            Rational value;
            try {
                value = parse_rational(literal);
            } catch (const Error&) {
                throw LexError("malformed number '" + literal + "'", SourceSpan{start, k});
            }
            tokens.push_back({TokenKind::number, {start, k}, std::move(literal), value});
            i = k;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t k = i + 1;
            while (k < n && is_ident_char(text[k])) {
                ++k;
            }
            tokens.push_back({TokenKind::ident, {start, k}, std::string(text.substr(start, k - start)), {}});
            i = k;
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        case '*': kind = TokenKind::star; break;
        case '/': kind = TokenKind::slash; break;
        case '^': kind = TokenKind::caret; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        default:
            throw LexError(std::string("illegal character '") + c + "'", SourceSpan{start, start + 1});
        }
        tokens.push_back({kind, {start, start + 1}, std::string(1, c), {}});
        ++i;
    }
    return tokens;
}

} // namespace xreal::dsl
