#include "xreal/dsl/ast.hpp"

#include <algorithm>

namespace xreal::dsl {

using Kind = AstNode::Kind;

bool AstNode::contains_delta() const
{
    if (kind == Kind::delta) {
        return true;
    }
    return (lhs && lhs->contains_delta()) || (rhs && rhs->contains_delta());
}

std::size_t AstNode::min_dims() const
{
    std::size_t dims = (kind == Kind::variable || kind == Kind::delta) ? index + 1 : 0;
    if (lhs) {
        dims = std::max(dims, lhs->min_dims());
    }
    if (rhs) {
        dims = std::max(dims, rhs->min_dims());
    }
    return dims;
}

bool same_structure(const AstNode& a, const AstNode& b)
{
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case Kind::number: return a.value == b.value;
    case Kind::variable: return a.index == b.index;
    case Kind::delta: return a.index == b.index && a.value == b.value;
    case Kind::negate: return same_structure(*a.lhs, *b.lhs);
    case Kind::power: return a.exponent == b.exponent && same_structure(*a.lhs, *b.lhs);
    case Kind::call: return a.fn == b.fn && same_structure(*a.lhs, *b.lhs);
    default: return same_structure(*a.lhs, *b.lhs) && same_structure(*a.rhs, *b.rhs);
    }
}

namespace {

int precedence(const AstNode& n)
{
    switch (n.kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::negate: return 3;
    case Kind::power: return 4;
    default: return 5;
    }
}

std::string number_text(const Rational& value)
{
    std::string text = format_rational(value);
    return text.find('/') != std::string::npos ? "(" + text + ")" : text;
}

std::string wrap(const AstNode& n, bool parens)
{
    return parens ? "(" + to_source(n) + ")" : to_source(n);
}

} // namespace

std::string to_source(const AstNode& n)
{
    switch (n.kind) {
    case Kind::number: return number_text(n.value);
    case Kind::variable: return n.name.empty() ? "x" + std::to_string(n.index + 1) : n.name;
    case Kind::delta: {
        const std::string var = n.name.empty() ? "x" + std::to_string(n.index + 1) : n.name;
        if (sgn(n.value) == 0) {
            return "delta(" + var + ")";
        }
        const char* op = sgn(n.value) > 0 ? " - " : " + ";
        return "delta(" + var + op + number_text(abs(n.value)) + ")";
    }
    case Kind::negate: return "-" + wrap(*n.lhs, precedence(*n.lhs) < 4);
    case Kind::power: return wrap(*n.lhs, precedence(*n.lhs) < 5) + "^" + std::to_string(n.exponent);
    case Kind::call: return std::string(to_string(n.fn)) + "(" + to_source(*n.lhs) + ")";
    default: {
        const int p = precedence(n);
        const char* op = n.kind == Kind::add   ? " + "
                         : n.kind == Kind::sub ? " - "
                         : n.kind == Kind::mul ? "*"
                                               : " / ";
        return wrap(*n.lhs, precedence(*n.lhs) < p) + op + wrap(*n.rhs, precedence(*n.rhs) <= p);
    }
    }
}

SmoothExpr to_smooth(const AstNode& n, std::size_t arity)
{
    switch (n.kind) {
    case Kind::number: return SmoothExpr::constant(n.value, arity);
    case Kind::variable: return SmoothExpr::variable(n.index, arity);
    case Kind::delta: throw NormalizeError("delta in a real-valued subexpression", n.span);
    case Kind::negate: return -to_smooth(*n.lhs, arity);
    case Kind::power: return to_smooth(*n.lhs, arity).pow(n.exponent);
    case Kind::call: return SmoothExpr::call(n.fn, to_smooth(*n.lhs, arity));
    case Kind::add: return to_smooth(*n.lhs, arity) + to_smooth(*n.rhs, arity);
    case Kind::sub: return to_smooth(*n.lhs, arity) - to_smooth(*n.rhs, arity);
    case Kind::mul: return to_smooth(*n.lhs, arity) * to_smooth(*n.rhs, arity);
    case Kind::div: return to_smooth(*n.lhs, arity) / to_smooth(*n.rhs, arity);
    }
    return SmoothExpr();
}

namespace {

Coefficient require_real(const ExpandedReal& x, const AstNode& where, const char* what)
{
    if (!x.is_real()) {
        throw EvalDomainError(std::string(what) + " of an infinite value", where.span);
    }
    return x.re_part();
}

} // namespace

ExpandedReal eval_ast(const AstNode& n, std::span<const Coefficient> point, Mode mode)
{
    switch (n.kind) {
    case Kind::number: return ExpandedReal(Coefficient::from_rational(n.value, mode));
    case Kind::variable: return ExpandedReal(point[n.index]);
    case Kind::delta:
        if (point[n.index] == Coefficient::from_rational(n.value, mode)) {
            return ExpandedReal::monomial(Coefficient::one(mode), Rational(1));
        }
        return ExpandedReal(mode);
    case Kind::negate: return -eval_ast(*n.lhs, point, mode);
    case Kind::add: return eval_ast(*n.lhs, point, mode) + eval_ast(*n.rhs, point, mode);
    case Kind::sub: return eval_ast(*n.lhs, point, mode) - eval_ast(*n.rhs, point, mode);
    case Kind::mul: return eval_ast(*n.lhs, point, mode) * eval_ast(*n.rhs, point, mode);
    case Kind::div: {
        const ExpandedReal num = eval_ast(*n.lhs, point, mode);
        const Coefficient den = require_real(eval_ast(*n.rhs, point, mode), *n.rhs, "division");
        return num.divided(den);
    }
    case Kind::power: {
        const ExpandedReal base = eval_ast(*n.lhs, point, mode);
        if (n.exponent >= 0) {
            return base.pow(static_cast<unsigned>(n.exponent));
        }
        const Coefficient b = require_real(base, *n.lhs, "negative power");
        return ExpandedReal(SmoothExpr::constant(b).pow(n.exponent).eval({}, mode));
    }
    case Kind::call: {
        const Coefficient arg = require_real(eval_ast(*n.lhs, point, mode), *n.lhs,
                                             to_string(n.fn));
        return ExpandedReal(SmoothExpr::call(n.fn, SmoothExpr::constant(arg)).eval({}, mode));
    }
    }
    return ExpandedReal(mode);
}

} // namespace xreal::dsl
