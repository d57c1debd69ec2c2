#include "xreal/error.hpp"

namespace xreal {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_exponent: return "InvalidExponent";
    case ErrorKind::mode_mismatch: return "ModeMismatch";
    case ErrorKind::non_finite: return "NonFiniteValue";
    case ErrorKind::eval_domain: return "EvalDomainError";
    case ErrorKind::non_convergent: return "NonConvergent";
    case ErrorKind::not_integrable: return "NotIntegrable";
    case ErrorKind::dimension_too_large: return "DimensionTooLarge";
    case ErrorKind::permutation_arity: return "PermutationArityError";
    case ErrorKind::lex: return "LexError";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::normalize: return "NormalizeError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace xreal
