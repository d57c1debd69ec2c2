#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "xreal/coefficient.hpp"

namespace xreal {

enum class Primitive { exp, sin, cos, sqrt, abs };

const char* to_string(Primitive fn) noexcept;

/**
 * Immutable expression tree for a real-valued function of `arity` real
 * variables. Constants are stored as exact rationals, so one tree evaluates
 * in either coefficient mode.
 *
 * The operators fold only the identities x + 0, x - 0 and x * 1; everything
 * else is kept as written.
 */
class SmoothExpr {
public:
    enum class Kind { constant, variable, negate, add, sub, mul, div, power, call };

    struct Node {
        Kind kind = Kind::constant;
        Rational value;              // constant
        double number = 0.0;         // constant, rounded
        std::size_t index = 0;       // variable
        int exponent = 0;            // power
        Primitive fn = Primitive::exp;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;

    /// The constant 0 of arity 0.
    SmoothExpr();

    static SmoothExpr constant(const Rational& value, std::size_t arity = 0);
    static SmoothExpr constant(const Coefficient& value, std::size_t arity = 0);
    static SmoothExpr variable(std::size_t index, std::size_t arity);
    static SmoothExpr call(Primitive fn, const SmoothExpr& argument);

    friend SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b);
    friend SmoothExpr operator-(const SmoothExpr& a, const SmoothExpr& b);
    friend SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b);
    friend SmoothExpr operator/(const SmoothExpr& a, const SmoothExpr& b);
    SmoothExpr operator-() const;
    SmoothExpr pow(int exponent) const;

    std::size_t arity() const noexcept { return arity_; }
    /// Same tree, declared over `arity` variables. Throws InvalidArgument if
    /// the tree references a variable >= arity.
    SmoothExpr with_arity(std::size_t arity) const;

    const Node& root() const noexcept { return *root_; }
    const NodePtr& root_ptr() const noexcept { return root_; }

    /// True when no variable is referenced.
    bool is_constant() const;
    /// Structurally the constant 0 / 1.
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool references(std::size_t index) const;
    /// One past the largest referenced variable index (0 if none).
    std::size_t min_arity() const;

    /// binary64 evaluation. Domain violations (sqrt of a negative, division
    /// by zero) throw EvalDomainError; overflow yields an infinity.
    double eval_double(std::span<const double> point) const;
    /// Evaluation in a coefficient mode. Exact mode is exact for rational
    /// operations; exp/sin/cos and irrational sqrt go through binary64 and
    /// the result is taken exactly. Non-finite results throw EvalDomainError.
    Coefficient eval(std::span<const Coefficient> point, Mode mode) const;

    /// Replaces variable `index` by a constant. The arity is unchanged.
    SmoothExpr substitute(std::size_t index, const Coefficient& value) const;
    /// Renames variable i to mapping[i] and declares the new arity.
    SmoothExpr relabel(std::span<const std::size_t> mapping, std::size_t arity) const;

    /// Text in the density-language syntax, variables named x1, x2, ...
    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

    /// Structural equality (same tree and arity).
    friend bool operator==(const SmoothExpr& a, const SmoothExpr& b);

private:
    SmoothExpr(NodePtr root, std::size_t arity) : root_(std::move(root)), arity_(arity) {}

    NodePtr root_;
    std::size_t arity_ = 0;
};

/// Free-function form of SmoothExpr::eval.
inline Coefficient eval_expr(const SmoothExpr& e, std::span<const Coefficient> point, Mode mode)
{
    return e.eval(point, mode);
}

inline SmoothExpr substitute(const SmoothExpr& e, std::size_t index, const Coefficient& value)
{
    return e.substitute(index, value);
}

bool structurally_equal(const SmoothExpr::Node& a, const SmoothExpr::Node& b);

} // namespace xreal
