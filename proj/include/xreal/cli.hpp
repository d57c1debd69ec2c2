#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xreal/coefficient.hpp"

namespace xreal::cli {

enum class Command { parse, normalize, eval, integrate };
enum class Format { text, json };

struct CliConfig {
    Command command = Command::parse;
    std::optional<std::string> input; // expression text
    std::optional<std::string> file;  // read the expression from this path
    std::optional<std::size_t> dims;
    std::optional<std::vector<std::string>> point;
    double tolerance = 1e-8;
    Format format = Format::text;
    Mode mode = Mode::exact;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_other = 1;
inline constexpr int exit_syntax = 2;
inline constexpr int exit_not_integrable = 3;
inline constexpr int exit_non_convergent = 4;

/// Runs one command. Results go to `out`, a one-line diagnostic to `err`.
/// Without `input` or `file` the expression is read from `in`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err, std::istream& in);

/// Parses command-line arguments (without the program name) and runs them.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in);

} // namespace xreal::cli
