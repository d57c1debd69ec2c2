#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace xreal {

enum class ErrorKind {
    invalid_exponent,
    mode_mismatch,
    non_finite,
    eval_domain,
    non_convergent,
    not_integrable,
    dimension_too_large,
    permutation_arity,
    lex,
    parse,
    normalize,
    invalid_argument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Byte range [start, end) into a source string.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Base of every error raised by the library. Carries a machine-readable kind
/// and, for front-end errors, the offending span of the input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(message), kind_(kind), span_(span) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<SourceSpan>& span() const noexcept { return span_; }

private:
    ErrorKind kind_;
    std::optional<SourceSpan> span_;
};

#define XREAL_DEFINE_ERROR(Name, Kind)                                                    \
    class Name : public Error {                                                           \
    public:                                                                               \
        explicit Name(const std::string& message,                                         \
                      std::optional<SourceSpan> span = std::nullopt)                      \
            : Error(ErrorKind::Kind, message, span) {}                                    \
    }

XREAL_DEFINE_ERROR(InvalidExponent, invalid_exponent);
XREAL_DEFINE_ERROR(ModeMismatch, mode_mismatch);
XREAL_DEFINE_ERROR(NonFiniteValue, non_finite);
XREAL_DEFINE_ERROR(EvalDomainError, eval_domain);
XREAL_DEFINE_ERROR(NonConvergent, non_convergent);
XREAL_DEFINE_ERROR(NotIntegrable, not_integrable);
XREAL_DEFINE_ERROR(DimensionTooLarge, dimension_too_large);
XREAL_DEFINE_ERROR(PermutationArityError, permutation_arity);
XREAL_DEFINE_ERROR(LexError, lex);
XREAL_DEFINE_ERROR(ParseError, parse);
XREAL_DEFINE_ERROR(NormalizeError, normalize);
XREAL_DEFINE_ERROR(InvalidArgument, invalid_argument);

#undef XREAL_DEFINE_ERROR

} // namespace xreal
