#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "xreal/density1d.hpp"
#include "xreal/permutation.hpp"

namespace xreal {

/**
 * pi_sigma(u (x) alpha delta_beta): the point (x_0..x_{n-1}) maps to
 *   u(x_sigma(0), ..., x_sigma(n-2)) * alpha * delta_beta(x_sigma(n-1)).
 * `u` has arity n - 1.
 */
struct TensorTerm {
    SmoothExpr u;
    Coefficient alpha;
    Coefficient beta;
    Permutation sigma;

    std::size_t dims() const noexcept { return sigma.size(); }
    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// delta_beta(x_var)^power inside a MultiAtom.
struct DeltaFactor {
    std::size_t var = 0;
    Coefficient beta;
    unsigned power = 1;

    friend bool operator==(const DeltaFactor&, const DeltaFactor&) = default;
};

/**
 * alpha * u(x) * prod_i delta_{beta_i}(x_{var_i})^{power_i}: a product of
 * deltas on several distinct variables. `u` has the full arity n but does
 * not reference any delta'd variable. At a point hitting every beta the
 * value is u * alpha * w^(sum of powers), and 0 elsewhere.
 *
 * With every power 1 the integral factorizes, one delta at a time, into
 * alpha * (integral of u over the remaining variables). A power above 1
 * means the term is not integrable.
 */
struct MultiAtom {
    SmoothExpr u;
    Coefficient alpha;
    std::vector<DeltaFactor> factors; // sorted by var

    bool integrable() const noexcept;
    unsigned total_power() const noexcept;
    friend bool operator==(const MultiAtom&, const MultiAtom&) = default;
};

using HyperTerm = std::variant<TensorTerm, MultiAtom>;

/// Pure tensor term with identity sigma over u.arity() + 1 variables.
TensorTerm tensor(const SmoothExpr& u, const Coefficient& alpha, const Coefficient& beta);

/// f: R^n -> expanded reals as a smooth real part plus a finite list of
/// delta-bearing terms.
class DensityND {
public:
    explicit DensityND(std::size_t dims = 1, Mode mode = Mode::exact);
    /// Validates arities, permutation sizes and coefficient modes.
    static DensityND make(std::size_t dims, const SmoothExpr& smooth, std::vector<HyperTerm> terms,
                          Mode mode);

    std::size_t dims() const noexcept { return dims_; }
    Mode mode() const noexcept { return mode_; }
    const SmoothExpr& smooth_part() const noexcept { return smooth_; }
    const std::vector<HyperTerm>& terms() const noexcept { return terms_; }
    bool integrable_shape() const noexcept;

    friend bool operator==(const DensityND&, const DensityND&) = default;

private:
    std::size_t dims_;
    Mode mode_;
    SmoothExpr smooth_;
    std::vector<HyperTerm> terms_;
};

/// pi_sigma(f): (x_0..x_{n-1}) -> f(x_sigma(0), ..., x_sigma(n-1)). Composes
/// sigma into variable indices and term permutations; nothing is
/// re-evaluated. Throws PermutationArityError if sigma.size() != f.dims().
DensityND permute_vars(const Permutation& sigma, const DensityND& f);

ExpandedReal eval_nd(const DensityND& f, std::span<const Coefficient> point);

DensityND fn_re_nd(const DensityND& f);
DensityND fn_hy_nd(const DensityND& f);
/// Pointwise sum (term lists concatenated).
DensityND add_nd(const DensityND& f, const DensityND& g);

/// Integral over R^n: quadrature of the real part plus, per term,
/// s_m = alpha_m * (integral of u_m), summed in term order. Exact when no
/// quadrature was needed. Throws NotIntegrable for a term with a delta power
/// above 1, NonConvergent when a quadrature fails, and DimensionTooLarge
/// when quadrature over more than 3 variables would be required.
IntegralResult integrate_nd(const DensityND& f, const QuadratureConfig& cfg = {});

DensityND to_nd(const Density1D& f);
/// Throws InvalidArgument unless f.dims() == 1.
Density1D to_1d(const DensityND& f);

} // namespace xreal
