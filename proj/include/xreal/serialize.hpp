#pragma once

#include "json.hpp"

#include "xreal/density1d.hpp"
#include "xreal/density_nd.hpp"
#include "xreal/dsl/ast.hpp"

namespace xreal {

using Json = nlohmann::ordered_json;

/// Coefficients are written as strings ("3", "-1/2", "0.1") so exact values
/// survive the round trip.
///
///     { dims, mode, smooth,
///       terms: [ {u, alpha, beta, sigma: [images]}
///              | {multi_atom: {alpha, betas, vars, powers, u}} ] }
Json to_json(const DensityND& f);
DensityND density_nd_from_json(const Json& j);

/// { mode, smooth, atoms: [{alpha, beta}], residue: [{exponent, coefficient, location}] }
Json to_json(const Density1D& f);
Density1D density_1d_from_json(const Json& j);

/// { kind, span: [start, end], ... } with kind-specific fields.
Json to_json(const dsl::AstNode& node);

} // namespace xreal
