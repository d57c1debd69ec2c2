#include "xreal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "xreal/error.hpp"

namespace xreal {

void QuadratureConfig::validate() const
{
    if (!(abs_tolerance > 0) || !(rel_tolerance > 0)) {
        throw InvalidArgument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw InvalidArgument("max_subdivisions must be at least 1");
    }
    if (!(tail_cutoff > 0)) {
        throw InvalidArgument("tail_cutoff must be positive");
    }
}

namespace {

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss
// weights (odd Kronrod indices are the Gauss nodes).
constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Sample {
    double value;
    double error; // error density carried from inner integrals
};

using LineFn = std::function<Sample(double)>;

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double inner_error;
};

void require_finite(double v)
{
    if (!std::isfinite(v)) {
        throw NonConvergent("integrand is not finite on the integration domain");
    }
}

Segment gauss_kronrod(const LineFn& f, double scale, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // Integrand in t including the Jacobian of x = L t / (1 - t^2).
    auto g = [&](double t) -> Sample {
        const double one_minus = (1.0 - t) * (1.0 + t);
        const double x = scale * t / one_minus;
        const double jac = scale * (1.0 + t * t) / (one_minus * one_minus);
        if (!std::isfinite(x) || !std::isfinite(jac)) {
            throw NonConvergent("integrand is not finite on the integration domain");
        }
        const Sample s = f(x);
        require_finite(s.value);
        const double v = s.value == 0.0 ? 0.0 : s.value * jac;
        require_finite(v);
        return {v, s.error * jac};
    };

    std::array<double, 15> values{};
    const Sample mid = g(center);
    values[7] = mid.value;
    double kronrod = kronrod_w[7] * mid.value;
    double gauss = gauss_w[3] * mid.value;
    double abs_sum = kronrod_w[7] * std::fabs(mid.value);
    double inner = kronrod_w[7] * std::fabs(mid.error);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_x[j];
        const Sample lo = g(center - dx);
        const Sample hi = g(center + dx);
        values[j] = lo.value;
        values[14 - j] = hi.value;
        kronrod += kronrod_w[j] * (lo.value + hi.value);
        abs_sum += kronrod_w[j] * (std::fabs(lo.value) + std::fabs(hi.value));
        inner += kronrod_w[j] * (std::fabs(lo.error) + std::fabs(hi.error));
        if (j % 2 == 1) {
            gauss += gauss_w[j / 2] * (lo.value + hi.value);
        }
    }
    const double mean = 0.5 * kronrod;
    double asc = kronrod_w[7] * std::fabs(values[7] - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        asc += kronrod_w[j] * (std::fabs(values[j] - mean) + std::fabs(values[14 - j] - mean));
    }

    const double value = kronrod * half;
    double error = std::fabs((kronrod - gauss) * half);
    const double res_asc = asc * std::fabs(half);
    const double res_abs = abs_sum * std::fabs(half);
    if (res_asc != 0.0 && error != 0.0) {
        error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::max(50.0 * eps * res_abs, error);
    }
    return {a, b, value, error, inner * std::fabs(half)};
}

struct ByError {
    bool operator()(const Segment& x, const Segment& y) const
    {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.a > y.a;
    }
};

QuadratureResult adaptive_line(const LineFn& f, const QuadratureConfig& cfg)
{
    cfg.validate();
    std::priority_queue<Segment, std::vector<Segment>, ByError> queue;
    constexpr std::array<double, 5> initial = {-1.0, -0.5, 0.0, 0.5, 1.0};
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < initial.size(); ++i) {
        Segment s = gauss_kronrod(f, cfg.tail_cutoff, initial[i], initial[i + 1]);
        total += s.value;
        total_error += s.error;
        queue.push(s);
    }

    int subdivisions = 0;
    while (total_error > std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::fabs(total))) {
        if (subdivisions >= cfg.max_subdivisions) {
            throw NonConvergent("quadrature did not converge within " +
                                std::to_string(cfg.max_subdivisions) +
                                " subdivisions (error estimate " + format_double(total_error) +
                                ")");
        }
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw NonConvergent("quadrature interval cannot be subdivided further");
        }
        Segment left = gauss_kronrod(f, cfg.tail_cutoff, worst.a, mid);
        Segment right = gauss_kronrod(f, cfg.tail_cutoff, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    // Re-sum in position order so the result does not depend on the
    // floating-point history of the running totals.
    std::vector<Segment> segments;
    segments.reserve(queue.size());
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    QuadratureResult result;
    for (const auto& s : segments) {
        result.value += s.value;
        result.abs_error += s.error + s.inner_error;
    }
    return result;
}

// Flattened postfix form of a SmoothExpr for the quadrature inner loop.
class CompiledExpr {
public:
    explicit CompiledExpr(const SmoothExpr& e)
    {
        emit(e.root());
        std::size_t depth = 0;
        for (const auto& ins : code_) {
            depth += stack_effect(ins.op);
            max_depth_ = std::max(max_depth_, depth);
        }
    }

    double operator()(std::span<const double> point, std::vector<double>& stack) const
    {
        stack.resize(max_depth_ + 1);
        std::size_t top = 0; // number of live entries
        for (const auto& ins : code_) {
            switch (ins.op) {
            case Op::constant: stack[top++] = ins.number; break;
            case Op::variable: stack[top++] = point[ins.index]; break;
            case Op::negate: stack[top - 1] = -stack[top - 1]; break;
            case Op::add: --top; stack[top - 1] += stack[top]; break;
            case Op::sub: --top; stack[top - 1] -= stack[top]; break;
            case Op::mul: --top; stack[top - 1] *= stack[top]; break;
            case Op::div:
                --top;
                if (stack[top] == 0.0) {
                    throw EvalDomainError("division by zero");
                }
                stack[top - 1] /= stack[top];
                break;
            case Op::power: stack[top - 1] = power(stack[top - 1], ins.exponent); break;
            case Op::exp: stack[top - 1] = std::exp(stack[top - 1]); break;
            case Op::sin: stack[top - 1] = std::sin(stack[top - 1]); break;
            case Op::cos: stack[top - 1] = std::cos(stack[top - 1]); break;
            case Op::sqrt:
                if (stack[top - 1] < 0) {
                    throw EvalDomainError("sqrt of a negative number");
                }
                stack[top - 1] = std::sqrt(stack[top - 1]);
                break;
            case Op::abs: stack[top - 1] = std::fabs(stack[top - 1]); break;
            }
        }
        return stack[0];
    }

private:
    enum class Op { constant, variable, negate, add, sub, mul, div, power, exp, sin, cos, sqrt, abs };
    struct Instr {
        Op op;
        double number = 0.0;
        std::size_t index = 0;
        int exponent = 0;
    };

    static std::size_t stack_effect(Op op)
    {
        switch (op) {
        case Op::constant:
        case Op::variable: return 1;
        case Op::add:
        case Op::sub:
        case Op::mul:
        case Op::div: return static_cast<std::size_t>(-1);
        default: return 0;
        }
    }

    static double power(double base, int exponent)
    {
        if (base == 0.0 && exponent < 0) {
            throw EvalDomainError("zero raised to a negative power");
        }
        double result = 1.0;
        double b = exponent < 0 ? 1.0 / base : base;
        unsigned e = static_cast<unsigned>(std::abs(exponent));
        while (e > 0) {
            if (e & 1u) {
                result *= b;
            }
            e >>= 1;
            b *= b;
        }
        return result;
    }

    void emit(const SmoothExpr::Node& n)
    {
        using Kind = SmoothExpr::Kind;
        switch (n.kind) {
        case Kind::constant: code_.push_back({Op::constant, n.number}); return;
        case Kind::variable: code_.push_back({Op::variable, 0.0, n.index}); return;
        case Kind::negate: emit(*n.lhs); code_.push_back({Op::negate}); return;
        case Kind::power: emit(*n.lhs); code_.push_back({Op::power, 0.0, 0, n.exponent}); return;
        case Kind::call: {
            emit(*n.lhs);
            constexpr std::array<Op, 5> ops = {Op::exp, Op::sin, Op::cos, Op::sqrt, Op::abs};
            code_.push_back({ops[static_cast<std::size_t>(n.fn)]});
            return;
        }
        default: break;
        }
        emit(*n.lhs);
        emit(*n.rhs);
        const Op op = n.kind == Kind::add   ? Op::add
                      : n.kind == Kind::sub ? Op::sub
                      : n.kind == Kind::mul ? Op::mul
                                            : Op::div;
        code_.push_back({op});
    }

    std::vector<Instr> code_;
    std::size_t max_depth_ = 0;
};

} // namespace

QuadratureResult integrate_line(const std::function<double(double)>& f, const QuadratureConfig& cfg)
{
    return adaptive_line([&](double x) { return Sample{f(x), 0.0}; }, cfg);
}

QuadratureResult integrate_real_1d(const SmoothExpr& e, const QuadratureConfig& cfg)
{
    if (e.min_arity() > 1) {
        throw InvalidArgument("integrate_real_1d needs an expression of one variable");
    }
    return integrate_real_nd(e.with_arity(1), 1, cfg);
}

QuadratureResult integrate_real_nd(const SmoothExpr& e, std::size_t dims,
                                   const QuadratureConfig& cfg)
{
    cfg.validate();
    if (dims > max_quadrature_dims) {
        throw DimensionTooLarge("quadrature supports at most " +
                                std::to_string(max_quadrature_dims) + " dimensions, got " +
                                std::to_string(dims));
    }
    if (e.min_arity() > dims) {
        throw InvalidArgument("expression references more variables than the integration has");
    }
    if (e.is_zero()) {
        return {};
    }
    const CompiledExpr program(e);
    std::vector<double> point(dims, 0.0);
    std::vector<double> stack;
    if (dims == 0) {
        const double v = program(point, stack);
        require_finite(v);
        return {v, 0.0};
    }

    QuadratureConfig level = cfg;
    level.abs_tolerance = cfg.abs_tolerance / static_cast<double>(dims);
    level.rel_tolerance = cfg.rel_tolerance / static_cast<double>(dims);

    // Variable 0 is the outermost integral.
    std::function<Sample(std::size_t)> integrate_from = [&](std::size_t k) -> Sample {
        if (k == dims) {
            return {program(point, stack), 0.0};
        }
        const QuadratureResult r = adaptive_line(
            [&, k](double x) {
                point[k] = x;
                return integrate_from(k + 1);
            },
            level);
        return {r.value, r.abs_error};
    };
    const Sample total = integrate_from(0);
    return {total.value, total.error};
}

} // namespace xreal
