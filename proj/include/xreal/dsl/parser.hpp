#pragma once

#include <string_view>

#include "xreal/dsl/ast.hpp"

namespace xreal::dsl {

/**
 * Recursive-descent parser for the density language:
 *
 *     expr   := term (("+" | "-") term)*
 *     term   := factor (("*" | "/") factor)*
 *     factor := "-"? power
 *     power  := atom ("^" "-"? integer)?
 *     atom   := number | variable | name "(" expr ")" | "(" expr ")"
 *
 * Variables are x, y, z or x1..x9 (x, y, z are aliases of x1, x2, x3).
 * Functions are exp, sin, cos, sqrt, abs and delta; a delta argument must
 * be `var`, `var + c` or `var - c` with c a number.
 *
 * Throws LexError or ParseError; both carry a span inside the input.
 */
AstPtr parse(std::string_view text);

} // namespace xreal::dsl
