#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace xreal {

using Rational = mpq_class;

/// Representation used for real coefficients within one computation.
enum class Mode { exact, floating };

const char* to_string(Mode mode) noexcept;

// Exact conversions between binary64 and rationals. A finite double is a
// dyadic rational, so double -> Rational never rounds; the reverse rounds to
// nearest, ties to even.
Rational rational_from_double(double value);
double nearest_double(const Rational& value);

/// Parses `123`, `-1.25`, `6.02e23` or `p/q` into an exact rational.
/// Throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical exact text: an integer, a terminating decimal when the reduced
/// denominator has only the prime factors 2 and 5, otherwise `p/q`.
std::string format_rational(const Rational& value);

/// Shortest text that reads back to the same binary64 value.
std::string format_double(double value);

/// A real coefficient, either an exact rational or a finite binary64 value.
/// Arithmetic between the two representations throws ModeMismatch.
class Coefficient {
public:
    Coefficient() : value_(Rational(0)) {}
    explicit Coefficient(Rational value);
    explicit Coefficient(double value);

    static Coefficient zero(Mode mode);
    static Coefficient one(Mode mode);
    /// Converts an exact rational into the given mode.
    static Coefficient from_rational(const Rational& value, Mode mode);
    static Coefficient from_double(double value, Mode mode);
    static Coefficient parse(std::string_view text, Mode mode);

    Mode mode() const noexcept { return is_exact() ? Mode::exact : Mode::floating; }
    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

    const Rational& rational() const { return std::get<Rational>(value_); }
    double floating() const { return std::get<double>(value_); }

    /// Value as the exact rational it denotes (doubles convert exactly).
    Rational to_rational() const;
    double to_double() const;

    bool is_zero() const noexcept;
    int sign() const noexcept;

    Coefficient operator-() const;
    Coefficient abs() const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    /// Throws EvalDomainError on division by zero.
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);

    Coefficient& operator+=(const Coefficient& other) { return *this = *this + other; }
    Coefficient& operator*=(const Coefficient& other) { return *this = *this * other; }

    /// Structural equality: values in different modes are never equal.
    friend bool operator==(const Coefficient& a, const Coefficient& b);
    /// Throws ModeMismatch when the modes differ.
    friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b);

    std::string to_string() const;

private:
    std::variant<Rational, double> value_;
};

void require_same_mode(const Coefficient& a, const Coefficient& b);

} // namespace xreal
