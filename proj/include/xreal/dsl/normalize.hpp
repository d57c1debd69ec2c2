#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "xreal/density_nd.hpp"
#include "xreal/dsl/ast.hpp"

namespace xreal::dsl {

/// Largest number of delta-bearing products an expansion may produce.
inline constexpr std::size_t max_expansion_products = 4096;

/**
 * Canonical density for a parsed expression. Delta-bearing subtrees are
 * expanded into products; each product's deltas are grouped per variable
 * (different locations on one variable annihilate the product, a repeated
 * location raises the power), the locations are substituted into the
 * smooth factors and the constant factors are folded into alpha.
 *
 * A product with a single delta of power 1 becomes a TensorTerm whose
 * permutation moves the delta'd variable last; anything else becomes a
 * MultiAtom. Delta-free parts are summed into the smooth part. Identical
 * terms are merged and the term list is sorted.
 *
 * The dimension defaults to the largest variable used (at least 1); an
 * explicit `dims` may only raise it. Throws NormalizeError for division by
 * or functions of a delta, or a delta raised to a non-positive power.
 */
DensityND normalize(const AstNode& ast, std::optional<std::size_t> dims, Mode mode);

/// Density-language text for a density, variables named x1..xn.
std::string to_source(const DensityND& f);

} // namespace xreal::dsl
