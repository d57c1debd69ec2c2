#include "xreal/smooth_expr.hpp"

#include <algorithm>
#include <cmath>

#include "xreal/error.hpp"

namespace xreal {

using Node = SmoothExpr::Node;
using NodePtr = SmoothExpr::NodePtr;
using Kind = SmoothExpr::Kind;

const char* to_string(Primitive fn) noexcept
{
    switch (fn) {
    case Primitive::exp: return "exp";
    case Primitive::sin: return "sin";
    case Primitive::cos: return "cos";
    case Primitive::sqrt: return "sqrt";
    case Primitive::abs: return "abs";
    }
    return "?";
}

namespace {

NodePtr make_node(Node node)
{
    return std::make_shared<const Node>(std::move(node));
}

NodePtr constant_node(const Rational& value)
{
    Node n;
    n.kind = Kind::constant;
    n.value = value;
    n.value.canonicalize();
    n.number = nearest_double(n.value);
    return make_node(std::move(n));
}

NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs)
{
    Node n;
    n.kind = kind;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return make_node(std::move(n));
}

bool is_constant_value(const Node& n, int v)
{
    return n.kind == Kind::constant && n.value == v;
}

std::size_t min_arity_of(const Node& n)
{
    switch (n.kind) {
    case Kind::constant: return 0;
    case Kind::variable: return n.index + 1;
    case Kind::negate:
    case Kind::power:
    case Kind::call: return min_arity_of(*n.lhs);
    default: return std::max(min_arity_of(*n.lhs), min_arity_of(*n.rhs));
    }
}

bool references_of(const Node& n, std::size_t index)
{
    switch (n.kind) {
    case Kind::constant: return false;
    case Kind::variable: return n.index == index;
    case Kind::negate:
    case Kind::power:
    case Kind::call: return references_of(*n.lhs, index);
    default: return references_of(*n.lhs, index) || references_of(*n.rhs, index);
    }
}

double apply_double(Primitive fn, double x)
{
    switch (fn) {
    case Primitive::exp: return std::exp(x);
    case Primitive::sin: return std::sin(x);
    case Primitive::cos: return std::cos(x);
    case Primitive::sqrt:
        if (x < 0) {
            throw EvalDomainError("sqrt of a negative number");
        }
        return std::sqrt(x);
    case Primitive::abs: return std::fabs(x);
    }
    return 0.0;
}

double pow_double(double base, int exponent)
{
    if (base == 0.0 && exponent < 0) {
        throw EvalDomainError("zero raised to a negative power");
    }
    double result = 1.0;
    double b = exponent < 0 ? 1.0 / base : base;
    unsigned long long e = exponent < 0 ? -static_cast<long long>(exponent) : exponent;
    while (e > 0) {
        if (e & 1u) {
            result *= b;
        }
        e >>= 1;
        b *= b;
    }
    return result;
}

double eval_node_double(const Node& n, std::span<const double> point)
{
    switch (n.kind) {
    case Kind::constant: return n.number;
    case Kind::variable: return point[n.index];
    case Kind::negate: return -eval_node_double(*n.lhs, point);
    case Kind::add: return eval_node_double(*n.lhs, point) + eval_node_double(*n.rhs, point);
    case Kind::sub: return eval_node_double(*n.lhs, point) - eval_node_double(*n.rhs, point);
    case Kind::mul: return eval_node_double(*n.lhs, point) * eval_node_double(*n.rhs, point);
    case Kind::div: {
        const double num = eval_node_double(*n.lhs, point);
        const double den = eval_node_double(*n.rhs, point);
        if (den == 0.0) {
            throw EvalDomainError("division by zero");
        }
        return num / den;
    }
    case Kind::power: return pow_double(eval_node_double(*n.lhs, point), n.exponent);
    case Kind::call: return apply_double(n.fn, eval_node_double(*n.lhs, point));
    }
    return 0.0;
}

Coefficient exact_sqrt(const Rational& q)
{
    if (sgn(q) < 0) {
        throw EvalDomainError("sqrt of a negative number");
    }
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
        mpz_class num, den;
        mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
        return Coefficient(Rational(num, den));
    }
    return Coefficient(rational_from_double(std::sqrt(nearest_double(q))));
}

Coefficient eval_node_exact(const Node& n, std::span<const Coefficient> point)
{
    switch (n.kind) {
    case Kind::constant: return Coefficient(n.value);
    case Kind::variable: return point[n.index];
    case Kind::negate: return -eval_node_exact(*n.lhs, point);
    case Kind::add: return eval_node_exact(*n.lhs, point) + eval_node_exact(*n.rhs, point);
    case Kind::sub: return eval_node_exact(*n.lhs, point) - eval_node_exact(*n.rhs, point);
    case Kind::mul: return eval_node_exact(*n.lhs, point) * eval_node_exact(*n.rhs, point);
    case Kind::div: return eval_node_exact(*n.lhs, point) / eval_node_exact(*n.rhs, point);
    case Kind::power: {
        const Rational base = eval_node_exact(*n.lhs, point).rational();
        if (sgn(base) == 0 && n.exponent < 0) {
            throw EvalDomainError("zero raised to a negative power");
        }
        const unsigned long e = static_cast<unsigned long>(std::abs(n.exponent));
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
        Rational r = n.exponent < 0 ? Rational(den, num) : Rational(num, den);
        r.canonicalize();
        return Coefficient(r);
    }
    case Kind::call: {
        const Coefficient arg = eval_node_exact(*n.lhs, point);
        if (n.fn == Primitive::abs) {
            return arg.abs();
        }
        if (n.fn == Primitive::sqrt) {
            return exact_sqrt(arg.rational());
        }
        const double r = apply_double(n.fn, arg.to_double());
        if (!std::isfinite(r)) {
            throw EvalDomainError(std::string(to_string(n.fn)) + " overflowed");
        }
        return Coefficient(rational_from_double(r));
    }
    }
    return Coefficient();
}

NodePtr substitute_node(const NodePtr& n, std::size_t index, const Rational& value)
{
    switch (n->kind) {
    case Kind::constant: return n;
    case Kind::variable: return n->index == index ? constant_node(value) : n;
    default: break;
    }
    Node copy = *n;
    copy.lhs = substitute_node(n->lhs, index, value);
    if (n->rhs) {
        copy.rhs = substitute_node(n->rhs, index, value);
    }
    if (copy.lhs == n->lhs && copy.rhs == n->rhs) {
        return n;
    }
    return make_node(std::move(copy));
}

NodePtr relabel_node(const NodePtr& n, std::span<const std::size_t> mapping)
{
    if (n->kind == Kind::constant) {
        return n;
    }
    Node copy = *n;
    if (n->kind == Kind::variable) {
        copy.index = mapping[n->index];
        return make_node(std::move(copy));
    }
    copy.lhs = relabel_node(n->lhs, mapping);
    if (n->rhs) {
        copy.rhs = relabel_node(n->rhs, mapping);
    }
    return make_node(std::move(copy));
}

// Printing precedence; mirrors the density-language grammar.
int precedence(const Node& n)
{
    switch (n.kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::negate: return 3;
    case Kind::power: return 4;
    case Kind::constant: return sgn(n.value) < 0 ? 3 : 5;
    default: return 5;
    }
}

std::string print(const Node& n, std::span<const std::string> names);

std::string wrapped(const Node& n, bool parens, std::span<const std::string> names)
{
    return parens ? "(" + print(n, names) + ")" : print(n, names);
}

std::string print(const Node& n, std::span<const std::string> names)
{
    switch (n.kind) {
    case Kind::constant: {
        if (sgn(n.value) < 0) {
            return "-" + wrapped(*constant_node(Rational(-n.value)), false, names);
        }
        std::string text = format_rational(n.value);
        return text.find('/') != std::string::npos ? "(" + text + ")" : text;
    }
    case Kind::variable:
        return n.index < names.size() ? names[n.index] : "x" + std::to_string(n.index + 1);
    case Kind::negate: return "-" + wrapped(*n.lhs, precedence(*n.lhs) < 4, names);
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
    case Kind::div: {
        const int p = precedence(n);
        const char* op = n.kind == Kind::add   ? " + "
                         : n.kind == Kind::sub ? " - "
                         : n.kind == Kind::mul ? "*"
                                               : "/";
        const bool lhs_parens = precedence(*n.lhs) < p;
        const bool rhs_parens = precedence(*n.rhs) <= p || precedence(*n.rhs) == 3;
        return wrapped(*n.lhs, lhs_parens, names) + op + wrapped(*n.rhs, rhs_parens, names);
    }
    case Kind::power:
        return wrapped(*n.lhs, precedence(*n.lhs) < 5, names) + "^" + std::to_string(n.exponent);
    case Kind::call: return std::string(to_string(n.fn)) + "(" + print(*n.lhs, names) + ")";
    }
    return "?";
}

} // namespace

bool structurally_equal(const Node& a, const Node& b)
{
    if (&a == &b) {
        return true;
    }
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case Kind::constant: return a.value == b.value;
    case Kind::variable: return a.index == b.index;
    case Kind::negate: return structurally_equal(*a.lhs, *b.lhs);
    case Kind::power: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case Kind::call: return a.fn == b.fn && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

SmoothExpr::SmoothExpr() : root_(constant_node(Rational(0))), arity_(0) {}

SmoothExpr SmoothExpr::constant(const Rational& value, std::size_t arity)
{
    return SmoothExpr(constant_node(value), arity);
}

SmoothExpr SmoothExpr::constant(const Coefficient& value, std::size_t arity)
{
    return constant(value.to_rational(), arity);
}

SmoothExpr SmoothExpr::variable(std::size_t index, std::size_t arity)
{
    if (index >= arity) {
        throw InvalidArgument("variable index " + std::to_string(index) + " out of arity " +
                              std::to_string(arity));
    }
    Node n;
    n.kind = Kind::variable;
    n.index = index;
    return SmoothExpr(make_node(std::move(n)), arity);
}

SmoothExpr SmoothExpr::call(Primitive fn, const SmoothExpr& argument)
{
    Node n;
    n.kind = Kind::call;
    n.fn = fn;
    n.lhs = argument.root_;
    return SmoothExpr(make_node(std::move(n)), argument.arity_);
}

SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b)
{
    const std::size_t arity = std::max(a.arity_, b.arity_);
    if (a.is_zero()) {
        return b.with_arity(arity);
    }
    if (b.is_zero()) {
        return a.with_arity(arity);
    }
    return SmoothExpr(binary(Kind::add, a.root_, b.root_), arity);
}

SmoothExpr operator-(const SmoothExpr& a, const SmoothExpr& b)
{
    const std::size_t arity = std::max(a.arity_, b.arity_);
    if (b.is_zero()) {
        return a.with_arity(arity);
    }
    return SmoothExpr(binary(Kind::sub, a.root_, b.root_), arity);
}

SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b)
{
    const std::size_t arity = std::max(a.arity_, b.arity_);
    if (a.is_one()) {
        return b.with_arity(arity);
    }
    if (b.is_one()) {
        return a.with_arity(arity);
    }
    return SmoothExpr(binary(Kind::mul, a.root_, b.root_), arity);
}

SmoothExpr operator/(const SmoothExpr& a, const SmoothExpr& b)
{
    return SmoothExpr(binary(Kind::div, a.root_, b.root_), std::max(a.arity_, b.arity_));
}

SmoothExpr SmoothExpr::operator-() const
{
    Node n;
    n.kind = Kind::negate;
    n.lhs = root_;
    return SmoothExpr(make_node(std::move(n)), arity_);
}

SmoothExpr SmoothExpr::pow(int exponent) const
{
    Node n;
    n.kind = Kind::power;
    n.exponent = exponent;
    n.lhs = root_;
    return SmoothExpr(make_node(std::move(n)), arity_);
}

SmoothExpr SmoothExpr::with_arity(std::size_t arity) const
{
    if (min_arity() > arity) {
        throw InvalidArgument("expression references variable x" + std::to_string(min_arity()) +
                              " beyond arity " + std::to_string(arity));
    }
    return SmoothExpr(root_, arity);
}

bool SmoothExpr::is_constant() const
{
    return min_arity() == 0;
}

bool SmoothExpr::is_zero() const noexcept
{
    return is_constant_value(*root_, 0);
}

bool SmoothExpr::is_one() const noexcept
{
    return is_constant_value(*root_, 1);
}

bool SmoothExpr::references(std::size_t index) const
{
    return references_of(*root_, index);
}

std::size_t SmoothExpr::min_arity() const
{
    return min_arity_of(*root_);
}

double SmoothExpr::eval_double(std::span<const double> point) const
{
    if (point.size() != arity_) {
        throw InvalidArgument("point has " + std::to_string(point.size()) +
                              " coordinates, expression arity is " + std::to_string(arity_));
    }
    return eval_node_double(*root_, point);
}

Coefficient SmoothExpr::eval(std::span<const Coefficient> point, Mode mode) const
{
    if (point.size() != arity_) {
        throw InvalidArgument("point has " + std::to_string(point.size()) +
                              " coordinates, expression arity is " + std::to_string(arity_));
    }
    for (const auto& c : point) {
        if (c.mode() != mode) {
            throw ModeMismatch("evaluation point coordinate is not in " +
                               std::string(xreal::to_string(mode)) + " mode");
        }
    }
    if (mode == Mode::exact) {
        return eval_node_exact(*root_, point);
    }
    std::vector<double> xs(point.size());
    std::transform(point.begin(), point.end(), xs.begin(),
                   [](const Coefficient& c) { return c.floating(); });
    const double r = eval_node_double(*root_, xs);
    if (!std::isfinite(r)) {
        throw EvalDomainError("non-finite result");
    }
    return Coefficient(r);
}

SmoothExpr SmoothExpr::substitute(std::size_t index, const Coefficient& value) const
{
    if (index >= arity_) {
        throw InvalidArgument("substituted variable out of arity");
    }
    return SmoothExpr(substitute_node(root_, index, value.to_rational()), arity_);
}

SmoothExpr SmoothExpr::relabel(std::span<const std::size_t> mapping, std::size_t arity) const
{
    const std::size_t needed = min_arity();
    if (mapping.size() < needed) {
        throw InvalidArgument("relabel mapping too short");
    }
    for (std::size_t i = 0; i < needed; ++i) {
        if (references(i) && mapping[i] >= arity) {
            throw InvalidArgument("relabel maps a variable beyond the new arity");
        }
    }
    return SmoothExpr(relabel_node(root_, mapping), arity);
}

std::string SmoothExpr::to_string() const
{
    return print(*root_, {});
}

std::string SmoothExpr::to_string(std::span<const std::string> names) const
{
    return print(*root_, names);
}

bool operator==(const SmoothExpr& a, const SmoothExpr& b)
{
    return a.arity_ == b.arity_ && structurally_equal(*a.root_, *b.root_);
}

} // namespace xreal
