#pragma once

#include <cstddef>
#include <functional>

#include "xreal/smooth_expr.hpp"

namespace xreal {

/// Budget for the adaptive quadrature of real parts over all of R^n.
struct QuadratureConfig {
    double abs_tolerance = 1e-10;
    double rel_tolerance = 1e-10;
    int max_subdivisions = 400;
    /// Length scale L of the compactifying map x = L t / (1 - t^2); |x| > L
    /// is the region squeezed toward the ends of (-1, 1).
    double tail_cutoff = 1.0;

    /// Throws InvalidArgument unless tolerances > 0, max_subdivisions >= 1
    /// and tail_cutoff > 0.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
};

inline constexpr std::size_t max_quadrature_dims = 3;

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over (-inf, inf) after the
/// substitution x = L t / (1 - t^2). Subdivision is sequential and the final
/// sum runs over intervals in position order, so results are deterministic.
///
/// Throws NonConvergent when the error estimate does not reach
/// max(abs_tolerance, rel_tolerance * |value|) within max_subdivisions, or
/// when the integrand produces a non-finite value.
QuadratureResult integrate_line(const std::function<double(double)>& f,
                                const QuadratureConfig& cfg);

/// Integral over R of an expression of arity <= 1.
QuadratureResult integrate_real_1d(const SmoothExpr& e, const QuadratureConfig& cfg);

/// Iterated integral over R^dims. dims must be <= 3 (DimensionTooLarge
/// otherwise); each level gets 1/dims of the tolerance. dims == 0 evaluates
/// the constant.
QuadratureResult integrate_real_nd(const SmoothExpr& e, std::size_t dims,
                                   const QuadratureConfig& cfg);

} // namespace xreal
