#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xreal/coefficient.hpp"

namespace xreal {

/// One term `coefficient * w^exponent` of an expanded real.
struct Term {
    Rational exponent;
    Coefficient coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/**
 * An element of the ordered ring of expanded reals: a finite sum
 * a1*w^p1 + ... + an*w^pn with p1 > ... > pn >= 0, where w is a fixed
 * infinitely large hyperreal.
 *
 * Values are always normalized: exponents strictly descending, no zero
 * coefficients, so structural equality is ring equality. Every value carries
 * a coefficient mode; combining values of different modes throws
 * ModeMismatch.
 */
class ExpandedReal {
public:
    /// The ring zero in the given mode.
    explicit ExpandedReal(Mode mode = Mode::exact) : mode_(mode) {}
    /// Embeds a real number.
    explicit ExpandedReal(const Coefficient& real);

    /// Normalizes an arbitrary term list: like exponents merge, zero
    /// coefficients drop. Throws InvalidExponent for negative exponents.
    static ExpandedReal make(std::vector<Term> terms, Mode mode = Mode::exact);
    /// `coefficient * w^exponent`.
    static ExpandedReal monomial(const Coefficient& coefficient, const Rational& exponent);
    /// Reads the canonical text format, e.g. `3*w^2 + 2*w + 5`.
    static ExpandedReal parse(std::string_view text, Mode mode = Mode::exact);

    Mode mode() const noexcept { return mode_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True when the value is a real number (no positive power of w).
    bool is_real() const noexcept;
    /// Coefficient of the highest power; zero for the ring zero.
    Coefficient leading_coefficient() const;
    int sign() const noexcept;

    /// Coefficient of w^0.
    Coefficient re_part() const;
    /// The value with its w^0 term removed.
    ExpandedReal hy_part() const;
    /// Coefficient of w^exponent (zero when absent).
    Coefficient coefficient_of(const Rational& exponent) const;

    ExpandedReal operator-() const;
    friend ExpandedReal operator+(const ExpandedReal& a, const ExpandedReal& b);
    friend ExpandedReal operator-(const ExpandedReal& a, const ExpandedReal& b);
    friend ExpandedReal operator*(const ExpandedReal& a, const ExpandedReal& b);
    ExpandedReal& operator+=(const ExpandedReal& other) { return *this = *this + other; }
    ExpandedReal& operator*=(const ExpandedReal& other) { return *this = *this * other; }

    /// Multiplies every coefficient by a real scalar.
    ExpandedReal scaled(const Coefficient& factor) const;
    /// Divides every coefficient by a nonzero real.
    ExpandedReal divided(const Coefficient& divisor) const;
    /// Non-negative integer power.
    ExpandedReal pow(unsigned exponent) const;

    friend bool operator==(const ExpandedReal& a, const ExpandedReal& b);
    /// Sign of the leading coefficient of a - b.
    friend std::strong_ordering operator<=>(const ExpandedReal& a, const ExpandedReal& b);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
    Mode mode_ = Mode::exact;
};

// Free-function forms of the ring operations.
inline ExpandedReal add(const ExpandedReal& a, const ExpandedReal& b) { return a + b; }
inline ExpandedReal neg(const ExpandedReal& a) { return -a; }
inline ExpandedReal mul(const ExpandedReal& a, const ExpandedReal& b) { return a * b; }
inline std::strong_ordering compare(const ExpandedReal& a, const ExpandedReal& b) { return a <=> b; }
inline Coefficient re_part(const ExpandedReal& a) { return a.re_part(); }
inline ExpandedReal hy_part(const ExpandedReal& a) { return a.hy_part(); }

/// Formats an exponent the way the text format writes it: `2` or `(1/2)`.
std::string format_exponent(const Rational& exponent);

} // namespace xreal
