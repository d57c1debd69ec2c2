#include "xreal/density1d.hpp"

#include <algorithm>
#include <map>

#include "xreal/error.hpp"

namespace xreal {

DeltaTrain DeltaTrain::make(std::vector<Atom> atoms)
{
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const Atom& a, const Atom& b) { return a.beta < b.beta; });
    DeltaTrain out;
    for (auto& atom : atoms) {
        if (!out.atoms_.empty() && out.atoms_.back().beta == atom.beta) {
            out.atoms_.back().alpha += atom.alpha;
        } else {
            out.atoms_.push_back(std::move(atom));
        }
    }
    std::erase_if(out.atoms_, [](const Atom& a) { return a.alpha.is_zero(); });
    return out;
}

std::optional<Coefficient> DeltaTrain::weight_at(const Coefficient& location) const
{
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), location,
                               [](const Atom& a, const Coefficient& x) { return a.beta < x; });
    if (it != atoms_.end() && it->beta == location) {
        return it->alpha;
    }
    return std::nullopt;
}

Coefficient DeltaTrain::total_weight(Mode mode) const
{
    Coefficient sum = Coefficient::zero(mode);
    for (const auto& a : atoms_) {
        sum += a.alpha;
    }
    return sum;
}

DeltaTrain operator+(const DeltaTrain& a, const DeltaTrain& b)
{
    std::vector<Atom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    return DeltaTrain::make(std::move(atoms));
}

DeltaTrain DeltaTrain::scaled(const Coefficient& factor) const
{
    std::vector<Atom> atoms = atoms_;
    for (auto& a : atoms) {
        a.alpha *= factor;
    }
    return make(std::move(atoms));
}

namespace {

std::vector<ResidueEntry> normalize_residue(std::vector<ResidueEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.location != b.location) {
            return a.location < b.location;
        }
        return a.exponent > b.exponent;
    });
    std::vector<ResidueEntry> out;
    for (auto& e : entries) {
        if (sgn(e.exponent - 1) <= 0) {
            throw InvalidArgument("residue exponents must exceed 1");
        }
        if (!out.empty() && out.back().location == e.location && out.back().exponent == e.exponent) {
            out.back().coefficient += e.coefficient;
        } else {
            out.push_back(std::move(e));
        }
    }
    std::erase_if(out, [](const ResidueEntry& e) { return e.coefficient.is_zero(); });
    return out;
}

void check_mode(Mode mode, const Coefficient& c)
{
    if (c.mode() != mode) {
        throw ModeMismatch("density coefficient mode does not match the density");
    }
}

void check_modes(const Density1D& f, const Density1D& g)
{
    if (f.mode() != g.mode()) {
        throw ModeMismatch("cannot combine exact and floating-point densities");
    }
}

/// The w-bearing part of f at x: atom weight times w plus residue terms.
ExpandedReal hyper_value(const Density1D& f, const Coefficient& x)
{
    std::vector<Term> terms;
    if (auto w = f.train().weight_at(x)) {
        terms.push_back({Rational(1), *w});
    }
    for (const auto& r : f.residue()) {
        if (r.location == x) {
            terms.push_back({r.exponent, r.coefficient});
        }
    }
    return ExpandedReal::make(std::move(terms), f.mode());
}

ExpandedReal smooth_value(const Density1D& f, const Coefficient& x)
{
    if (f.smooth_part().is_zero()) {
        return ExpandedReal(f.mode());
    }
    const Coefficient point[] = {x};
    return ExpandedReal(f.smooth_part().eval(point, f.mode()));
}

} // namespace

Density1D::Density1D(Mode mode) : smooth_(SmoothExpr::constant(Rational(0), 1)), mode_(mode) {}

Density1D Density1D::smooth(const SmoothExpr& e, Mode mode)
{
    Density1D f(mode);
    f.smooth_ = e.with_arity(1);
    return f;
}

Density1D Density1D::from_parts(const SmoothExpr& e, DeltaTrain train,
                                std::vector<ResidueEntry> residue, Mode mode)
{
    for (const auto& a : train.atoms()) {
        check_mode(mode, a.alpha);
        check_mode(mode, a.beta);
    }
    for (const auto& r : residue) {
        check_mode(mode, r.coefficient);
        check_mode(mode, r.location);
    }
    Density1D f = smooth(e, mode);
    f.train_ = std::move(train);
    f.residue_ = normalize_residue(std::move(residue));
    return f;
}

bool Density1D::is_zero() const noexcept
{
    return smooth_.is_zero() && train_.empty() && residue_.empty();
}

Density1D delta(const Coefficient& alpha, const Coefficient& beta)
{
    require_same_mode(alpha, beta);
    return Density1D::from_parts(SmoothExpr(), DeltaTrain::make({{alpha, beta}}), {},
                                 alpha.mode());
}

Density1D add_density(const Density1D& f, const Density1D& g)
{
    check_modes(f, g);
    std::vector<ResidueEntry> residue = f.residue();
    residue.insert(residue.end(), g.residue().begin(), g.residue().end());
    return Density1D::from_parts(f.smooth_part() + g.smooth_part(), f.train() + g.train(),
                                 std::move(residue), f.mode());
}

Density1D scale_density(const Coefficient& c, const Density1D& f)
{
    check_mode(f.mode(), c);
    if (c.is_zero()) {
        return Density1D(f.mode());
    }
    std::vector<ResidueEntry> residue = f.residue();
    for (auto& r : residue) {
        r.coefficient *= c;
    }
    const SmoothExpr smooth =
        f.smooth_part().is_zero() ? f.smooth_part() : SmoothExpr::constant(c, 1) * f.smooth_part();
    return Density1D::from_parts(smooth, f.train().scaled(c), std::move(residue), f.mode());
}

Density1D mul_density(const Density1D& f, const Density1D& g)
{
    check_modes(f, g);
    const Mode mode = f.mode();

    std::vector<Coefficient> locations;
    for (const Density1D* d : {&f, &g}) {
        for (const auto& a : d->train().atoms()) {
            locations.push_back(a.beta);
        }
        for (const auto& r : d->residue()) {
            locations.push_back(r.location);
        }
    }
    std::sort(locations.begin(), locations.end());
    locations.erase(std::unique(locations.begin(), locations.end()), locations.end());

    std::vector<Atom> atoms;
    std::vector<ResidueEntry> residue;
    for (const auto& x : locations) {
        const ExpandedReal hf = hyper_value(f, x);
        const ExpandedReal hg = hyper_value(g, x);
        // Hy((sf + hf)(sg + hg)) = hf hg + hf sg + sf hg; a smooth factor is
        // only evaluated where the other side carries w.
        ExpandedReal product = hf * hg;
        if (!hf.is_zero()) {
            product += hf * smooth_value(g, x);
        }
        if (!hg.is_zero()) {
            product += smooth_value(f, x) * hg;
        }
        for (const auto& t : product.terms()) {
            if (t.exponent == 1) {
                atoms.push_back({t.coefficient, x});
            } else {
                residue.push_back({t.exponent, t.coefficient, x});
            }
        }
    }

    SmoothExpr smooth;
    if (!f.smooth_part().is_zero() && !g.smooth_part().is_zero()) {
        smooth = f.smooth_part() * g.smooth_part();
    }
    return Density1D::from_parts(smooth, DeltaTrain::make(std::move(atoms)), std::move(residue),
                                 mode);
}

ExpandedReal eval_density(const Density1D& f, const Coefficient& x)
{
    check_mode(f.mode(), x);
    return smooth_value(f, x) + hyper_value(f, x);
}

Density1D fn_re(const Density1D& f)
{
    return Density1D::smooth(f.smooth_part(), f.mode());
}

Density1D fn_hy(const Density1D& f)
{
    return Density1D::from_parts(SmoothExpr(), f.train(), f.residue(), f.mode());
}

IntegralResult integrate_1d(const Density1D& f, const QuadratureConfig& cfg)
{
    if (!f.residue().empty()) {
        throw NotIntegrable("hyperreal part is not a sum of delta functions: w^" +
                            format_exponent(f.residue().front().exponent) + " at " +
                            f.residue().front().location.to_string());
    }
    const Coefficient s = f.train().total_weight(f.mode());
    if (f.smooth_part().is_zero()) {
        return {s, std::nullopt};
    }
    const QuadratureResult h = integrate_real_1d(f.smooth_part(), cfg);
    return {Coefficient(h.value + s.to_double()), h.abs_error};
}

} // namespace xreal
