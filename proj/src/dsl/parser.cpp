#include "xreal/dsl/parser.hpp"

#include <optional>

#include "xreal/dsl/lexer.hpp"

namespace xreal::dsl {

namespace {

using Kind = AstNode::Kind;

std::optional<std::size_t> variable_index(std::string_view name)
{
    if (name == "x") {
        return 0;
    }
    if (name == "y") {
        return 1;
    }
    if (name == "z") {
        return 2;
    }
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') {
        return static_cast<std::size_t>(name[1] - '1');
    }
    return std::nullopt;
}

std::optional<Primitive> primitive(std::string_view name)
{
    if (name == "exp") {
        return Primitive::exp;
    }
    if (name == "sin") {
        return Primitive::sin;
    }
    if (name == "cos") {
        return Primitive::cos;
    }
    if (name == "sqrt") {
        return Primitive::sqrt;
    }
    if (name == "abs") {
        return Primitive::abs;
    }
    return std::nullopt;
}

AstPtr make(AstNode node)
{
    return std::make_shared<const AstNode>(std::move(node));
}

AstPtr binary(Kind kind, AstPtr lhs, AstPtr rhs)
{
    AstNode n;
    n.kind = kind;
    n.span = {lhs->span.start, rhs->span.end};
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return make(std::move(n));
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

    AstPtr parse_all()
    {
        AstPtr e = expr();
        if (pos_ < tokens_.size()) {
            fail("expected an operator or end of input, found " + describe(tokens_[pos_]),
                 tokens_[pos_].span);
        }
        return e;
    }

private:
    const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
    bool at(TokenKind kind) const { return peek() != nullptr && peek()->kind == kind; }

    const Token& take() { return tokens_[pos_++]; }

    SourceSpan here() const
    {
        if (const Token* t = peek()) {
            return t->span;
        }
        return {text_.size(), text_.size()};
    }

    static std::string describe(const Token& t) { return "'" + t.text + "'"; }

    [[noreturn]] void fail(const std::string& message, SourceSpan span) const
    {
        throw ParseError(message, span);
    }

    [[noreturn]] void expected(const std::string& what) const
    {
        const Token* t = peek();
        fail("expected " + what + ", found " + (t ? describe(*t) : std::string("end of input")),
             here());
    }

    const Token& expect(TokenKind kind)
    {
        if (!at(kind)) {
            expected(to_string(kind));
        }
        return take();
    }

    AstPtr expr()
    {
        AstPtr lhs = term();
        while (at(TokenKind::plus) || at(TokenKind::minus)) {
            const Kind kind = take().kind == TokenKind::plus ? Kind::add : Kind::sub;
            lhs = binary(kind, lhs, term());
        }
        return lhs;
    }

    AstPtr term()
    {
        AstPtr lhs = factor();
        while (at(TokenKind::star) || at(TokenKind::slash)) {
            const Kind kind = take().kind == TokenKind::star ? Kind::mul : Kind::div;
            lhs = binary(kind, lhs, factor());
        }
        return lhs;
    }

    AstPtr factor()
    {
        if (at(TokenKind::minus)) {
            const std::size_t start = take().span.start;
            AstPtr operand = power();
            AstNode n;
            n.kind = Kind::negate;
            n.span = {start, operand->span.end};
            n.lhs = std::move(operand);
            return make(std::move(n));
        }
        return power();
    }

    AstPtr power()
    {
        AstPtr base = atom();
        if (!at(TokenKind::caret)) {
            return base;
        }
        take();
        const std::size_t exp_start = here().start;
        const bool negative = at(TokenKind::minus);
        if (negative) {
            take();
        }
        if (!at(TokenKind::number)) {
            expected("an integer exponent");
        }
        const Token& t = take();
        const bool integer_literal = t.text.find_first_not_of("0123456789") == std::string::npos;
        if (!integer_literal || t.value > 100000) {
            fail("exponent must be an integer literal of at most 100000", {exp_start, t.span.end});
        }
        AstNode n;
        n.kind = Kind::power;
        n.span = {base->span.start, t.span.end};
        n.exponent = static_cast<int>(t.value.get_num().get_si()) * (negative ? -1 : 1);
        n.lhs = std::move(base);
        return make(std::move(n));
    }

    AstPtr atom()
    {
        const Token* t = peek();
        if (t == nullptr) {
            expected("an expression");
        }
        switch (t->kind) {
        case TokenKind::number: {
            const Token& tok = take();
            AstNode n;
            n.kind = Kind::number;
            n.span = tok.span;
            n.value = tok.value;
            return make(std::move(n));
        }
        case TokenKind::lparen: {
            take();
            AstPtr inner = expr();
            expect(TokenKind::rparen);
            return inner;
        }
        case TokenKind::ident: return identifier();
        default: expected("an expression");
        }
    }

    AstPtr identifier()
    {
        const Token& name = take();
        if (auto v = variable_index(name.text)) {
            AstNode n;
            n.kind = Kind::variable;
            n.span = name.span;
            n.name = name.text;
            n.index = *v;
            return make(std::move(n));
        }
        const auto fn = primitive(name.text);
        const bool is_delta = name.text == "delta";
        if (!fn && !is_delta) {
            fail("unknown identifier '" + name.text + "'", name.span);
        }
        if (!at(TokenKind::lparen)) {
            expected("'(' after '" + name.text + "'");
        }
        take();
        AstPtr arg = expr();
        const Token& close = expect(TokenKind::rparen);
        if (is_delta) {
            return delta_node(name.span.start, close.span.end, arg);
        }
        AstNode n;
        n.kind = Kind::call;
        n.span = {name.span.start, close.span.end};
        n.fn = *fn;
        n.lhs = std::move(arg);
        return make(std::move(n));
    }

    AstPtr delta_node(std::size_t start, std::size_t end, const AstPtr& arg)
    {
        const AstNode* var = nullptr;
        Rational beta(0);
        if (arg->kind == Kind::variable) {
            var = arg.get();
        } else if ((arg->kind == Kind::add || arg->kind == Kind::sub) &&
                   arg->lhs->kind == Kind::variable && arg->rhs->kind == Kind::number) {
            var = arg->lhs.get();
            beta = arg->kind == Kind::sub ? arg->rhs->value : Rational(-arg->rhs->value);
        }
        if (var == nullptr) {
            fail("delta argument must be variable ± constant", arg->span);
        }
        AstNode n;
        n.kind = Kind::delta;
        n.span = {start, end};
        n.name = var->name;
        n.index = var->index;
        n.value = beta;
        return make(std::move(n));
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

AstPtr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

} // namespace xreal::dsl
