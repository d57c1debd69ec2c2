#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "xreal/coefficient.hpp"
#include "xreal/error.hpp"
#include "xreal/expanded_real.hpp"
#include "xreal/smooth_expr.hpp"

namespace xreal::dsl {

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

/// Parsed density expression. Every node records its source span.
struct AstNode {
    enum class Kind { number, variable, negate, add, sub, mul, div, power, call, delta };

    Kind kind = Kind::number;
    SourceSpan span;
    Rational value;        // number literal; delta location beta
    std::string name;      // variable / delta variable spelling
    std::size_t index = 0; // variable / delta variable index
    int exponent = 0;      // power
    Primitive fn = Primitive::exp;
    AstPtr lhs;            // unary operand, call argument, left operand
    AstPtr rhs;

    bool contains_delta() const;
    /// One past the largest variable index used (0 if none).
    std::size_t min_dims() const;
};

/// Structural equality, ignoring spans and variable spellings.
bool same_structure(const AstNode& a, const AstNode& b);

/// Source text that parses back to a structurally identical tree.
std::string to_source(const AstNode& node);

/// Delta-free subtree as a SmoothExpr of the given arity. Throws
/// NormalizeError if the subtree contains a delta.
SmoothExpr to_smooth(const AstNode& node, std::size_t arity);

/// Direct pointwise evaluation: each delta node is w at its location and 0
/// elsewhere, and everything is combined with expanded-real arithmetic.
/// Division and function calls need real operands (EvalDomainError
/// otherwise).
ExpandedReal eval_ast(const AstNode& node, std::span<const Coefficient> point, Mode mode);

} // namespace xreal::dsl
