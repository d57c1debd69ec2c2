#pragma once

#include <optional>
#include <vector>

#include "xreal/coefficient.hpp"
#include "xreal/expanded_real.hpp"
#include "xreal/quadrature.hpp"
#include "xreal/smooth_expr.hpp"

namespace xreal {

/// alpha * delta_beta: zero off beta, alpha * w at beta.
struct Atom {
    Coefficient alpha;
    Coefficient beta;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// A finite sum of delta functions. Atoms are sorted by strictly ascending
/// location, atoms at one location are merged and zero weights dropped.
class DeltaTrain {
public:
    DeltaTrain() = default;
    static DeltaTrain make(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    bool empty() const noexcept { return atoms_.empty(); }
    /// Weight at `location`, or nullopt.
    std::optional<Coefficient> weight_at(const Coefficient& location) const;
    /// Sum of all weights, the integral of the train.
    Coefficient total_weight(Mode mode) const;

    friend DeltaTrain operator+(const DeltaTrain& a, const DeltaTrain& b);
    DeltaTrain scaled(const Coefficient& factor) const;

    friend bool operator==(const DeltaTrain&, const DeltaTrain&) = default;

private:
    std::vector<Atom> atoms_;
};

/// `coefficient * w^exponent` at `location`, exponent > 1. Arises from
/// products of coinciding deltas; a density carrying one is not integrable.
struct ResidueEntry {
    Rational exponent;
    Coefficient coefficient;
    Coefficient location;

    friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
};

/// Result of integrating a density: exact when no quadrature was needed,
/// otherwise a binary64 value with an error estimate.
struct IntegralResult {
    Coefficient value;
    std::optional<double> abs_error_estimate;

    bool exact() const noexcept { return !abs_error_estimate.has_value(); }
};

/**
 * A function R -> expanded reals in split form f = f_Re + f_Hy: a smooth
 * real part plus a delta train, plus residue entries for higher powers of w
 * created by multiplication.
 */
class Density1D {
public:
    explicit Density1D(Mode mode = Mode::exact);
    /// Pure real part. The expression must have arity <= 1.
    static Density1D smooth(const SmoothExpr& e, Mode mode = Mode::exact);
    static Density1D from_parts(const SmoothExpr& e, DeltaTrain train,
                                std::vector<ResidueEntry> residue, Mode mode);

    Mode mode() const noexcept { return mode_; }
    const SmoothExpr& smooth_part() const noexcept { return smooth_; }
    const DeltaTrain& train() const noexcept { return train_; }
    const std::vector<ResidueEntry>& residue() const noexcept { return residue_; }
    bool is_zero() const noexcept;

    friend bool operator==(const Density1D&, const Density1D&) = default;

private:
    SmoothExpr smooth_;
    DeltaTrain train_;
    std::vector<ResidueEntry> residue_;
    Mode mode_;
};

/// alpha * delta_beta; the zero density when alpha is zero.
Density1D delta(const Coefficient& alpha, const Coefficient& beta);

Density1D add_density(const Density1D& f, const Density1D& g);
Density1D scale_density(const Coefficient& c, const Density1D& f);
/// Pointwise product. A smooth factor sifts through an atom, g * a delta_b =
/// g(b) a delta_b; coinciding atoms multiply into residue entries. Throws
/// EvalDomainError if a smooth factor is undefined at an atom location.
Density1D mul_density(const Density1D& f, const Density1D& g);

ExpandedReal eval_density(const Density1D& f, const Coefficient& x);

Density1D fn_re(const Density1D& f);
Density1D fn_hy(const Density1D& f);

/// Integral over R: quadrature of the real part plus the sum of the atom
/// weights. With a zero real part no quadrature runs and the result is the
/// exact weight sum. Throws NotIntegrable if a residue is present.
IntegralResult integrate_1d(const Density1D& f, const QuadratureConfig& cfg = {});

} // namespace xreal
