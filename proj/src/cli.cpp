#include "xreal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "xreal/dsl/normalize.hpp"
#include "xreal/dsl/parser.hpp"
#include "xreal/serialize.hpp"

namespace xreal::cli {

namespace {

const char* command_name(Command c)
{
    switch (c) {
    case Command::parse: return "parse";
    case Command::normalize: return "normalize";
    case Command::eval: return "eval";
    case Command::integrate: return "integrate";
    }
    return "?";
}

std::string read_input(const CliConfig& config, std::istream& in)
{
    if (config.input) {
        return *config.input;
    }
    if (config.file) {
        std::ifstream file(*config.file, std::ios::binary);
        if (!file) {
            throw InvalidArgument("cannot read file '" + *config.file + "'");
        }
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::lex:
    case ErrorKind::parse: return exit_syntax;
    case ErrorKind::not_integrable: return exit_not_integrable;
    case ErrorKind::non_convergent: return exit_non_convergent;
    default: return exit_other;
    }
}

std::string one_line(std::string text)
{
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

struct Outcome {
    Json result;
    std::string text;
    std::optional<double> abs_error_estimate;
};

Outcome execute(const CliConfig& config, const std::string& source)
{
    const dsl::AstPtr ast = dsl::parse(source);
    Outcome o;
    switch (config.command) {
    case Command::parse:
        o.result = {{"ast", to_json(*ast)}};
        o.text = dsl::to_source(*ast);
        return o;
    case Command::normalize: {
        const DensityND f = dsl::normalize(*ast, config.dims, config.mode);
        o.result = {{"density", to_json(f)}};
        o.text = dsl::to_source(f);
        return o;
    }
    case Command::eval: {
        if (!config.point) {
            throw InvalidArgument("eval needs --point");
        }
        std::vector<Coefficient> point;
        for (const auto& p : *config.point) {
            point.push_back(Coefficient::parse(p, config.mode));
        }
        const DensityND f = dsl::normalize(*ast, config.dims.value_or(point.size()), config.mode);
        if (point.size() != f.dims()) {
            throw InvalidArgument("point has " + std::to_string(point.size()) +
                                  " coordinates but the density has " + std::to_string(f.dims()) +
                                  " variables");
        }
        const ExpandedReal value = eval_nd(f, point);
        o.result = {{"value", value.to_string()}};
        o.text = value.to_string();
        return o;
    }
    case Command::integrate: {
        if (!(config.tolerance > 0)) {
            throw InvalidArgument("tolerance must be positive");
        }
        QuadratureConfig cfg;
        cfg.abs_tolerance = config.tolerance;
        cfg.rel_tolerance = config.tolerance;
        const DensityND f = dsl::normalize(*ast, config.dims, config.mode);
        const IntegralResult r = integrate_nd(f, cfg);
        o.result = {{"value", r.value.to_string()}};
        o.text = r.value.to_string();
        o.abs_error_estimate = r.abs_error_estimate;
        if (r.abs_error_estimate) {
            o.text += "\nabs_error_estimate " + format_double(*r.abs_error_estimate);
        }
        return o;
    }
    }
    throw InvalidArgument("unknown command");
}

void report(const CliConfig& config, std::ostream& out, std::ostream& err, int code,
            const std::string& kind, const std::string& message,
            std::optional<SourceSpan> span)
{
    std::string line = std::string(command_name(config.command)) + ": " + kind + ": " + one_line(message);
    if (span) {
        line += " (at " + std::to_string(span->start) + ".." + std::to_string(span->end) + ")";
    }
    err << line << '\n';
    if (config.format == Format::json) {
        Json error = {{"code", code}, {"kind", kind}, {"message", one_line(message)}, {"span", nullptr}};
        if (span) {
            error["span"] = {span->start, span->end};
        }
        const Json doc = {{"ok", false}, {"command", command_name(config.command)}, {"error", error}};
        out << doc.dump() << '\n';
    }
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err, std::istream& in)
{
    try {
        const std::string source = read_input(config, in);
        const Outcome o = execute(config, source);
        if (config.format == Format::json) {
            Json doc = {{"ok", true}, {"command", command_name(config.command)}, {"result", o.result}};
            if (o.abs_error_estimate) {
                doc["quadrature"] = {{"abs_error_estimate", *o.abs_error_estimate}};
            }
            out << doc.dump() << '\n';
        } else {
            out << o.text << '\n';
        }
        return exit_ok;
    } catch (const Error& e) {
        const int code = exit_code(e.kind());
        report(config, out, err, code, to_string(e.kind()), e.what(), e.span());
        return code;
    } catch (const std::exception& e) {
        report(config, out, err, exit_other, "Error", e.what(), std::nullopt);
        return exit_other;
    }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in)
{
    CLI::App app{"Expanded-real densities with delta functions"};
    app.name("xreal");
    app.require_subcommand(1);

    CliConfig config;
    std::string input;
    std::string file;
    std::size_t dims = 0;
    std::vector<std::string> point;
    std::string format = "text";
    std::string mode = "exact";

    const std::vector<std::pair<Command, const char*>> commands = {
        {Command::parse, "Parse an expression and print its syntax tree"},
        {Command::normalize, "Print the canonical form of a density"},
        {Command::eval, "Evaluate a density at a point"},
        {Command::integrate, "Integrate a density over all of R^n"},
    };
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [command, help] : commands) {
        CLI::App* sub = app.add_subcommand(command_name(command), help);
        sub->add_option("expression", input, "Density expression (default: read standard input)");
        sub->add_option("--file", file, "Read the expression from a file");
        sub->add_option("--dims", dims, "Number of variables")->check(CLI::PositiveNumber);
        sub->add_option("--point", point, "Evaluation point a,b,c")->delimiter(',');
        sub->add_option("--tol", config.tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--mode", mode, "Coefficient mode")->check(CLI::IsMember({"exact", "float"}));
        subs.emplace_back(command, sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e, out, err);
        }
        err << "usage: " << one_line(e.what()) << '\n';
        return exit_other;
    }

    for (const auto& [command, sub] : subs) {
        if (sub->parsed()) {
            config.command = command;
            if (sub->count("expression") > 0) {
                config.input = input;
            }
            if (sub->count("--file") > 0) {
                config.file = file;
            }
            if (sub->count("--dims") > 0) {
                config.dims = dims;
            }
            if (sub->count("--point") > 0) {
                config.point = point;
            }
        }
    }
    config.format = format == "json" ? Format::json : Format::text;
    config.mode = mode == "float" ? Mode::floating : Mode::exact;
    return run(config, out, err, in);
}

} // namespace xreal::cli
