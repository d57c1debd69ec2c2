#include "xreal/expanded_real.hpp"

#include <algorithm>
#include <cctype>

#include "xreal/error.hpp"

namespace xreal {

namespace {

void check_mode(Mode expected, const Coefficient& c)
{
    if (c.mode() != expected) {
        throw ModeMismatch(std::string("coefficient is ") + to_string(c.mode()) +
                           " but the number is " + to_string(expected));
    }
}

void check_modes(const ExpandedReal& a, const ExpandedReal& b)
{
    if (a.mode() != b.mode()) {
        throw ModeMismatch("cannot combine exact and floating-point expanded reals");
    }
}

} // namespace

ExpandedReal::ExpandedReal(const Coefficient& real) : mode_(real.mode())
{
    if (!real.is_zero()) {
        terms_.push_back({Rational(0), real});
    }
}

ExpandedReal ExpandedReal::make(std::vector<Term> terms, Mode mode)
{
    for (auto& t : terms) {
        t.exponent.canonicalize();
        if (sgn(t.exponent) < 0) {
            throw InvalidExponent("negative exponent " + t.exponent.get_str() +
                                  " would be infinitesimal");
        }
        check_mode(mode, t.coefficient);
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    ExpandedReal out(mode);
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
            out.terms_.back().coefficient += t.coefficient;
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
    return out;
}

ExpandedReal ExpandedReal::monomial(const Coefficient& coefficient, const Rational& exponent)
{
    return make({{exponent, coefficient}}, coefficient.mode());
}

bool ExpandedReal::is_real() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && sgn(terms_.front().exponent) == 0);
}

Coefficient ExpandedReal::leading_coefficient() const
{
    return terms_.empty() ? Coefficient::zero(mode_) : terms_.front().coefficient;
}

int ExpandedReal::sign() const noexcept
{
    return terms_.empty() ? 0 : terms_.front().coefficient.sign();
}

Coefficient ExpandedReal::re_part() const
{
    if (!terms_.empty() && sgn(terms_.back().exponent) == 0) {
        return terms_.back().coefficient;
    }
    return Coefficient::zero(mode_);
}

ExpandedReal ExpandedReal::hy_part() const
{
    ExpandedReal out = *this;
    if (!out.terms_.empty() && sgn(out.terms_.back().exponent) == 0) {
        out.terms_.pop_back();
    }
    return out;
}

Coefficient ExpandedReal::coefficient_of(const Rational& exponent) const
{
    for (const auto& t : terms_) {
        if (t.exponent == exponent) {
            return t.coefficient;
        }
    }
    return Coefficient::zero(mode_);
}

ExpandedReal ExpandedReal::operator-() const
{
    ExpandedReal out = *this;
    for (auto& t : out.terms_) {
        t.coefficient = -t.coefficient;
    }
    return out;
}

ExpandedReal operator+(const ExpandedReal& a, const ExpandedReal& b)
{
    check_modes(a, b);
    ExpandedReal out(a.mode_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent > j->exponent)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->exponent > i->exponent) {
            out.terms_.push_back(*j++);
        } else {
            Coefficient sum = i->coefficient + j->coefficient;
            if (!sum.is_zero()) {
                out.terms_.push_back({i->exponent, std::move(sum)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

ExpandedReal operator-(const ExpandedReal& a, const ExpandedReal& b)
{
    return a + (-b);
}

ExpandedReal operator*(const ExpandedReal& a, const ExpandedReal& b)
{
    check_modes(a, b);
    std::vector<Term> product;
    product.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            product.push_back({Rational(s.exponent + t.exponent), s.coefficient * t.coefficient});
        }
    }
    return ExpandedReal::make(std::move(product), a.mode_);
}

ExpandedReal ExpandedReal::scaled(const Coefficient& factor) const
{
    check_mode(mode_, factor);
    if (factor.is_zero()) {
        return ExpandedReal(mode_);
    }
    ExpandedReal out = *this;
    for (auto& t : out.terms_) {
        t.coefficient *= factor;
    }
    return out;
}

ExpandedReal ExpandedReal::divided(const Coefficient& divisor) const
{
    check_mode(mode_, divisor);
    ExpandedReal out = *this;
    for (auto& t : out.terms_) {
        t.coefficient = t.coefficient / divisor;
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
    return out;
}

ExpandedReal ExpandedReal::pow(unsigned exponent) const
{
    ExpandedReal result(Coefficient::one(mode_));
    ExpandedReal base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const ExpandedReal& a, const ExpandedReal& b)
{
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const ExpandedReal& a, const ExpandedReal& b)
{
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string format_exponent(const Rational& exponent)
{
    if (exponent.get_den() == 1) {
        return exponent.get_num().get_str();
    }
    return "(" + exponent.get_str() + ")";
}

std::string ExpandedReal::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const Coefficient shown = first ? t.coefficient : t.coefficient.abs();
        if (!first) {
            out += t.coefficient.sign() < 0 ? " - " : " + ";
        }
        out += shown.to_string();
        if (sgn(t.exponent) != 0) {
            out += "*w";
            if (t.exponent != 1) {
                out += "^" + format_exponent(t.exponent);
            }
        }
        first = false;
    }
    return out;
}

namespace {

class TextReader {
public:
    explicit TextReader(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool done()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::string_view number()
    {
        skip_space();
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            digits();
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            digits();
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return text_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidArgument("bad expanded real '" + std::string(text_) + "': " + what +
                              " at offset " + std::to_string(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExpandedReal ExpandedReal::parse(std::string_view text, Mode mode)
{
    TextReader in(text);
    std::vector<Term> terms;
    bool negative = in.accept('-');
    while (true) {
        Rational exponent(0);
        Coefficient coefficient = Coefficient::parse(in.number(), mode);
        if (in.accept('*')) {
            if (!in.accept('w')) {
                in.fail("expected 'w'");
            }
            exponent = 1;
            if (in.accept('^')) {
                if (in.accept('(')) {
                    exponent = parse_rational(in.number());
                    if (!in.accept(')')) {
                        in.fail("expected ')'");
                    }
                } else {
                    exponent = parse_rational(in.number());
                }
            }
        }
        terms.push_back({exponent, negative ? -coefficient : coefficient});
        if (in.done()) {
            break;
        }
        if (in.accept('+')) {
            negative = false;
        } else if (in.accept('-')) {
            negative = true;
        } else {
            in.fail("expected '+' or '-'");
        }
    }
    return make(std::move(terms), mode);
}

} // namespace xreal
