#include "xreal/density_nd.hpp"

#include <algorithm>

#include "xreal/error.hpp"

namespace xreal {

bool MultiAtom::integrable() const noexcept
{
    return std::all_of(factors.begin(), factors.end(),
                       [](const DeltaFactor& f) { return f.power == 1; });
}

unsigned MultiAtom::total_power() const noexcept
{
    unsigned total = 0;
    for (const auto& f : factors) {
        total += f.power;
    }
    return total;
}

TensorTerm tensor(const SmoothExpr& u, const Coefficient& alpha, const Coefficient& beta)
{
    require_same_mode(alpha, beta);
    return {u, alpha, beta, Permutation::identity(u.arity() + 1)};
}

namespace {

void check_mode(Mode mode, const Coefficient& c)
{
    if (c.mode() != mode) {
        throw ModeMismatch("density coefficient mode does not match the density");
    }
}

std::vector<Coefficient> gather(std::span<const Coefficient> point, const Permutation& sigma,
                                std::size_t count)
{
    std::vector<Coefficient> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(point[sigma(i)]);
    }
    return out;
}

Coefficient constant_value(const SmoothExpr& u, Mode mode)
{
    const std::vector<Coefficient> point(u.arity(), Coefficient::zero(mode));
    return u.eval(point, mode);
}

} // namespace

DensityND::DensityND(std::size_t dims, Mode mode)
    : dims_(dims), mode_(mode), smooth_(SmoothExpr::constant(Rational(0), dims))
{
    if (dims == 0) {
        throw InvalidArgument("a density needs at least one variable");
    }
}

DensityND DensityND::make(std::size_t dims, const SmoothExpr& smooth, std::vector<HyperTerm> terms,
                          Mode mode)
{
    DensityND f(dims, mode);
    f.smooth_ = smooth.with_arity(dims);
    for (auto& term : terms) {
        if (auto* t = std::get_if<TensorTerm>(&term)) {
            if (t->sigma.size() != dims) {
                throw PermutationArityError("tensor term permutation on " +
                                            std::to_string(t->sigma.size()) +
                                            " letters in a " + std::to_string(dims) +
                                            "-dimensional density");
            }
            t->u = t->u.with_arity(dims - 1);
            check_mode(mode, t->alpha);
            check_mode(mode, t->beta);
        } else {
            auto& m = std::get<MultiAtom>(term);
            m.u = m.u.with_arity(dims);
            check_mode(mode, m.alpha);
            if (m.factors.empty()) {
                throw InvalidArgument("multi-atom term without delta factors");
            }
            std::sort(m.factors.begin(), m.factors.end(),
                      [](const DeltaFactor& a, const DeltaFactor& b) { return a.var < b.var; });
            for (std::size_t i = 0; i < m.factors.size(); ++i) {
                const auto& d = m.factors[i];
                if (d.var >= dims || (i > 0 && m.factors[i - 1].var == d.var)) {
                    throw InvalidArgument("multi-atom delta factors must be on distinct variables");
                }
                if (d.power == 0) {
                    throw InvalidArgument("delta factor power must be at least 1");
                }
                if (m.u.references(d.var)) {
                    throw InvalidArgument("multi-atom u references a delta'd variable");
                }
                check_mode(mode, d.beta);
            }
        }
    }
    f.terms_ = std::move(terms);
    return f;
}

bool DensityND::integrable_shape() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const HyperTerm& t) {
        const auto* m = std::get_if<MultiAtom>(&t);
        return m == nullptr || m->integrable();
    });
}

DensityND permute_vars(const Permutation& sigma, const DensityND& f)
{
    if (sigma.size() != f.dims()) {
        throw PermutationArityError("permutation on " + std::to_string(sigma.size()) +
                                    " letters applied to a " + std::to_string(f.dims()) +
                                    "-dimensional density");
    }
    const auto& map = sigma.images();
    std::vector<HyperTerm> terms;
    terms.reserve(f.terms().size());
    for (const auto& term : f.terms()) {
        if (const auto* t = std::get_if<TensorTerm>(&term)) {
            terms.push_back(TensorTerm{t->u, t->alpha, t->beta, compose(sigma, t->sigma)});
        } else {
            const auto& m = std::get<MultiAtom>(term);
            MultiAtom out{m.u.relabel(map, f.dims()), m.alpha, m.factors};
            for (auto& d : out.factors) {
                d.var = sigma(d.var);
            }
            terms.push_back(std::move(out));
        }
    }
    return DensityND::make(f.dims(), f.smooth_part().relabel(map, f.dims()), std::move(terms),
                           f.mode());
}

ExpandedReal eval_nd(const DensityND& f, std::span<const Coefficient> point)
{
    if (point.size() != f.dims()) {
        throw InvalidArgument("point has " + std::to_string(point.size()) +
                              " coordinates, density has " + std::to_string(f.dims()));
    }
    const Mode mode = f.mode();
    ExpandedReal value(f.smooth_part().eval(point, mode));
    for (const auto& term : f.terms()) {
        if (const auto* t = std::get_if<TensorTerm>(&term)) {
            const std::size_t n = f.dims();
            if (point[t->sigma(n - 1)] != t->beta) {
                continue;
            }
            const auto args = gather(point, t->sigma, n - 1);
            const Coefficient weight = t->u.eval(args, mode) * t->alpha;
            value += ExpandedReal::monomial(weight, Rational(1));
        } else {
            const auto& m = std::get<MultiAtom>(term);
            const bool hit = std::all_of(m.factors.begin(), m.factors.end(),
                                         [&](const DeltaFactor& d) { return point[d.var] == d.beta; });
            if (!hit) {
                continue;
            }
            const Coefficient weight = m.u.eval(point, mode) * m.alpha;
            value += ExpandedReal::monomial(weight, Rational(m.total_power()));
        }
    }
    return value;
}

DensityND fn_re_nd(const DensityND& f)
{
    return DensityND::make(f.dims(), f.smooth_part(), {}, f.mode());
}

DensityND fn_hy_nd(const DensityND& f)
{
    return DensityND::make(f.dims(), SmoothExpr(), f.terms(), f.mode());
}

DensityND add_nd(const DensityND& f, const DensityND& g)
{
    if (f.dims() != g.dims()) {
        throw InvalidArgument("cannot add densities of different dimensions");
    }
    if (f.mode() != g.mode()) {
        throw ModeMismatch("cannot combine exact and floating-point densities");
    }
    std::vector<HyperTerm> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return DensityND::make(f.dims(), f.smooth_part() + g.smooth_part(), std::move(terms), f.mode());
}

IntegralResult integrate_nd(const DensityND& f, const QuadratureConfig& cfg)
{
    const Mode mode = f.mode();
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const auto* m = std::get_if<MultiAtom>(&f.terms()[i]);
        if (m != nullptr && !m->integrable()) {
            throw NotIntegrable("term " + std::to_string(i) +
                                ": hyperreal part is not a sum of delta functions (w^" +
                                std::to_string(m->total_power()) + " at a point)");
        }
    }

    Coefficient exact_sum = Coefficient::zero(mode);
    double approx_sum = 0.0;
    double error = 0.0;
    bool approximate = false;

    auto add_quadrature = [&](const QuadratureResult& r) {
        approx_sum += r.value;
        error += r.abs_error;
        approximate = true;
    };

    if (!f.smooth_part().is_zero()) {
        add_quadrature(integrate_real_nd(f.smooth_part(), f.dims(), cfg));
    }

    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        // The factor u integrates over the variables not fixed by deltas.
        SmoothExpr u;
        std::size_t free_dims = 0;
        Coefficient alpha;
        if (const auto* t = std::get_if<TensorTerm>(&f.terms()[i])) {
            u = t->u;
            free_dims = f.dims() - 1;
            alpha = t->alpha;
        } else {
            const auto& m = std::get<MultiAtom>(f.terms()[i]);
            std::vector<std::size_t> mapping(f.dims(), 0);
            std::vector<bool> fixed(f.dims(), false);
            for (const auto& d : m.factors) {
                fixed[d.var] = true;
            }
            for (std::size_t v = 0; v < f.dims(); ++v) {
                if (!fixed[v]) {
                    mapping[v] = free_dims++;
                }
            }
            u = m.u.relabel(mapping, free_dims);
            alpha = m.alpha;
        }

        if (u.is_zero()) {
            continue;
        }
        if (free_dims == 0) {
            exact_sum += constant_value(u, mode) * alpha;
            continue;
        }
        try {
            QuadratureResult r = integrate_real_nd(u, free_dims, cfg);
            const double a = alpha.to_double();
            r.value *= a;
            r.abs_error *= std::abs(a);
            add_quadrature(r);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::non_convergent) {
                throw NonConvergent("term " + std::to_string(i) + ": " + e.what());
            }
            throw;
        }
    }

    if (!approximate) {
        return {exact_sum, std::nullopt};
    }
    return {Coefficient(approx_sum + exact_sum.to_double()), error};
}

DensityND to_nd(const Density1D& f)
{
    const Mode mode = f.mode();
    std::vector<HyperTerm> terms;
    for (const auto& a : f.train().atoms()) {
        terms.push_back(tensor(SmoothExpr::constant(Rational(1)), a.alpha, a.beta));
    }
    for (const auto& r : f.residue()) {
        if (r.exponent.get_den() != 1) {
            throw InvalidArgument("residue with a fractional power of w has no delta-product form");
        }
        MultiAtom m{SmoothExpr::constant(Rational(1), 1), r.coefficient,
                    {{0, r.location, static_cast<unsigned>(r.exponent.get_num().get_ui())}}};
        terms.push_back(std::move(m));
    }
    return DensityND::make(1, f.smooth_part(), std::move(terms), mode);
}

Density1D to_1d(const DensityND& f)
{
    if (f.dims() != 1) {
        throw InvalidArgument("to_1d needs a one-dimensional density");
    }
    const Mode mode = f.mode();
    std::vector<Atom> atoms;
    std::vector<ResidueEntry> residue;
    for (const auto& term : f.terms()) {
        if (const auto* t = std::get_if<TensorTerm>(&term)) {
            atoms.push_back({constant_value(t->u, mode) * t->alpha, t->beta});
        } else {
            const auto& m = std::get<MultiAtom>(term);
            const Coefficient weight = constant_value(m.u, mode) * m.alpha;
            const DeltaFactor& d = m.factors.front();
            if (d.power == 1) {
                atoms.push_back({weight, d.beta});
            } else {
                residue.push_back({Rational(d.power), weight, d.beta});
            }
        }
    }
    return Density1D::from_parts(f.smooth_part(), DeltaTrain::make(std::move(atoms)),
                                 std::move(residue), mode);
}

} // namespace xreal
