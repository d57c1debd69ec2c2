#include "xreal/coefficient.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "xreal/error.hpp"

namespace xreal {

const char* to_string(Mode mode) noexcept
{
    return mode == Mode::exact ? "exact" : "float";
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value)) {
        throw NonFiniteValue("cannot represent a non-finite value as a rational");
    }
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);
    return q;
}

double nearest_double(const Rational& value)
{
    // mpq_get_d truncates toward zero; step once away from zero if that is
    // closer, with ties resolved to the even mantissa.
    const double truncated = mpq_get_d(value.get_mpq_t());
    if (!std::isfinite(truncated)) {
        throw NonFiniteValue("rational out of binary64 range");
    }
    if (sgn(value) == 0) {
        return 0.0;
    }
    const double away = std::nextafter(truncated, sgn(value) > 0
                                                      ? std::numeric_limits<double>::infinity()
                                                      : -std::numeric_limits<double>::infinity());
    if (!std::isfinite(away)) {
        return truncated;
    }
    const Rational err_truncated = abs(value - rational_from_double(truncated));
    const Rational err_away = abs(rational_from_double(away) - value);
    const int c = cmp(err_truncated, err_away);
    if (c < 0) {
        return truncated;
    }
    if (c > 0) {
        return away;
    }
    int exp = 0;
    const double mant_t = std::frexp(truncated, &exp);
    const auto bits = static_cast<long long>(std::ldexp(mant_t, 53));
    return (bits % 2 == 0) ? truncated : away;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad_number(std::string_view text)
{
    throw InvalidArgument("malformed number '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long n)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            bad_number(text);
        }
        const mpz_class n{std::string(num), 10};
        const mpz_class d{std::string(den), 10};
        if (d == 0) {
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        }
        result = Rational(n, d);
        result.canonicalize();
    } else {
        std::string_view mantissa = body;
        long long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = body.substr(0, e);
            std::string_view exp_text = body.substr(e + 1);
            if (!exp_text.empty() && exp_text.front() == '+') {
                exp_text.remove_prefix(1);
            }
            auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(),
                                             exponent);
            if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() ||
                exp_text.empty() || std::llabs(exponent) > 100000) {
                bad_number(text);
            }
        }
        std::string digits;
        long long scale = 0;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            const auto int_part = mantissa.substr(0, dot);
            const auto frac_part = mantissa.substr(dot + 1);
            if ((int_part.empty() && frac_part.empty()) ||
                (!int_part.empty() && !all_digits(int_part)) ||
                (!frac_part.empty() && !all_digits(frac_part))) {
                bad_number(text);
            }
            digits = std::string(int_part) + std::string(frac_part);
            scale = static_cast<long long>(frac_part.size());
        } else {
            if (!all_digits(mantissa)) {
                bad_number(text);
            }
            digits = std::string(mantissa);
        }
        mpz_class n(digits, 10);
        scale -= exponent;
        if (scale >= 0) {
            result = Rational(n, pow10(static_cast<unsigned long>(scale)));
        } else {
            result = Rational(n * pow10(static_cast<unsigned long>(-scale)), 1);
        }
        result.canonicalize();
    }
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value)
{
    const mpz_class& den = value.get_den();
    if (den == 1) {
        return value.get_num().get_str();
    }
    mpz_class rest = den;
    unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (rest != 1) {
        return value.get_str();
    }
    const unsigned long places = std::max(twos, fives);
    const mpz_class scaled_abs = abs(value.get_num()) * (pow10(places) / den);
    std::string digits = scaled_abs.get_str();
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
    return (sgn(value) < 0 ? "-" : "") + digits;
}

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

Coefficient::Coefficient(Rational value) : value_(std::move(value))
{
    std::get<Rational>(value_).canonicalize();
}

Coefficient::Coefficient(double value) : value_(value)
{
    if (!std::isfinite(value)) {
        throw NonFiniteValue("non-finite floating-point coefficient");
    }
    if (value == 0.0) {
        value_ = 0.0; // drop the sign of -0
    }
}

Coefficient Coefficient::zero(Mode mode)
{
    return mode == Mode::exact ? Coefficient(Rational(0)) : Coefficient(0.0);
}

Coefficient Coefficient::one(Mode mode)
{
    return mode == Mode::exact ? Coefficient(Rational(1)) : Coefficient(1.0);
}

Coefficient Coefficient::from_rational(const Rational& value, Mode mode)
{
    return mode == Mode::exact ? Coefficient(value) : Coefficient(nearest_double(value));
}

Coefficient Coefficient::from_double(double value, Mode mode)
{
    return mode == Mode::exact ? Coefficient(rational_from_double(value)) : Coefficient(value);
}

Coefficient Coefficient::parse(std::string_view text, Mode mode)
{
    return from_rational(parse_rational(text), mode);
}

Rational Coefficient::to_rational() const
{
    return is_exact() ? rational() : rational_from_double(floating());
}

double Coefficient::to_double() const
{
    return is_exact() ? nearest_double(rational()) : floating();
}

bool Coefficient::is_zero() const noexcept
{
    return sign() == 0;
}

int Coefficient::sign() const noexcept
{
    if (is_exact()) {
        return sgn(std::get<Rational>(value_));
    }
    const double d = std::get<double>(value_);
    return (d > 0) - (d < 0);
}

Coefficient Coefficient::operator-() const
{
    if (is_exact()) {
        return Coefficient(Rational(-rational()));
    }
    return Coefficient(-floating());
}

Coefficient Coefficient::abs() const
{
    return sign() < 0 ? -*this : *this;
}

void require_same_mode(const Coefficient& a, const Coefficient& b)
{
    if (a.is_exact() != b.is_exact()) {
        throw ModeMismatch("cannot combine exact and floating-point coefficients");
    }
}

Coefficient operator+(const Coefficient& a, const Coefficient& b)
{
    require_same_mode(a, b);
    if (a.is_exact()) {
        return Coefficient(Rational(a.rational() + b.rational()));
    }
    return Coefficient(a.floating() + b.floating());
}

Coefficient operator-(const Coefficient& a, const Coefficient& b)
{
    require_same_mode(a, b);
    if (a.is_exact()) {
        return Coefficient(Rational(a.rational() - b.rational()));
    }
    return Coefficient(a.floating() - b.floating());
}

Coefficient operator*(const Coefficient& a, const Coefficient& b)
{
    require_same_mode(a, b);
    if (a.is_exact()) {
        return Coefficient(Rational(a.rational() * b.rational()));
    }
    return Coefficient(a.floating() * b.floating());
}

Coefficient operator/(const Coefficient& a, const Coefficient& b)
{
    require_same_mode(a, b);
    if (b.is_zero()) {
        throw EvalDomainError("division by zero");
    }
    if (a.is_exact()) {
        return Coefficient(Rational(a.rational() / b.rational()));
    }
    return Coefficient(a.floating() / b.floating());
}

bool operator==(const Coefficient& a, const Coefficient& b)
{
    if (a.is_exact() != b.is_exact()) {
        return false;
    }
    if (a.is_exact()) {
        return a.rational() == b.rational();
    }
    return a.floating() == b.floating();
}

std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b)
{
    require_same_mode(a, b);
    if (a.is_exact()) {
        const int c = cmp(a.rational(), b.rational());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const double x = a.floating();
    const double y = b.floating();
    return x < y ? std::strong_ordering::less
                 : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Coefficient::to_string() const
{
    return is_exact() ? format_rational(rational()) : format_double(floating());
}

} // namespace xreal
