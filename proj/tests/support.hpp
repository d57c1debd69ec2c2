#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "xreal/density1d.hpp"
#include "xreal/density_nd.hpp"
#include "xreal/expanded_real.hpp"

namespace xreal::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long range = 50, long max_den = 12)
{
    Rational r(uniform_int(rng, -range, range), uniform_int(rng, 1, max_den));
    r.canonicalize();
    return r;
}

inline Rational random_nonzero_rational(Rng& rng, long range = 50, long max_den = 12)
{
    for (;;) {
        Rational r = random_rational(rng, range, max_den);
        if (r != 0) {
            return r;
        }
    }
}

inline Coefficient exact(const Rational& r)
{
    return Coefficient(r);
}

inline Coefficient exact(long n)
{
    return Coefficient(Rational(n));
}

inline Rational random_exponent(Rng& rng)
{
    static const Rational choices[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                                       Rational(2), Rational(3)};
    return choices[uniform_int(rng, 0, 5)];
}

inline ExpandedReal random_expanded(Rng& rng, int max_terms = 4)
{
    std::vector<Term> terms;
    const long count = uniform_int(rng, 0, max_terms);
    for (long i = 0; i < count; ++i) {
        terms.push_back({random_exponent(rng), exact(random_rational(rng))});
    }
    return ExpandedReal::make(std::move(terms));
}

inline Permutation random_permutation(Rng& rng, std::size_t n)
{
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = i;
    }
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

/// c * P(x) * exp(-sum a_i (x_i - s_i)^2) with small rational parameters,
/// integrable over R^arity.
inline SmoothExpr random_gaussian(Rng& rng, std::size_t arity)
{
    SmoothExpr exponent = SmoothExpr::constant(Rational(0), arity);
    SmoothExpr poly = SmoothExpr::constant(random_nonzero_rational(rng, 5, 4), arity);
    for (std::size_t i = 0; i < arity; ++i) {
        const SmoothExpr x = SmoothExpr::variable(i, arity);
        const SmoothExpr shifted = x - SmoothExpr::constant(random_rational(rng, 2, 2), arity);
        const SmoothExpr width = SmoothExpr::constant(Rational(uniform_int(rng, 1, 4), 2), arity);
        exponent = exponent - width * shifted.pow(2);
        if (uniform_int(rng, 0, 2) == 0) {
            poly = poly * (x + SmoothExpr::constant(random_rational(rng, 3, 2), arity));
        }
    }
    return poly * SmoothExpr::call(Primitive::exp, exponent);
}

inline Density1D random_density_1d(Rng& rng, bool with_smooth = true)
{
    std::vector<Atom> atoms;
    const long count = uniform_int(rng, 0, 3);
    for (long i = 0; i < count; ++i) {
        atoms.push_back({exact(random_nonzero_rational(rng)), exact(random_rational(rng, 4, 2))});
    }
    const SmoothExpr smooth = with_smooth && uniform_int(rng, 0, 3) != 0
                                  ? random_gaussian(rng, 1)
                                  : SmoothExpr::constant(Rational(0), 1);
    return Density1D::from_parts(smooth, DeltaTrain::make(std::move(atoms)), {}, Mode::exact);
}

/// Smooth Gaussian real part plus tensor terms with Gaussian u and, when
/// dims >= 2, a multi-delta term over two variables.
inline DensityND random_density_nd(Rng& rng, std::size_t dims)
{
    std::vector<HyperTerm> terms;
    const long count = uniform_int(rng, 1, 3);
    for (long i = 0; i < count; ++i) {
        terms.emplace_back(TensorTerm{random_gaussian(rng, dims - 1), exact(random_nonzero_rational(rng, 9, 3)),
                                      exact(random_rational(rng, 3, 2)), random_permutation(rng, dims)});
    }
    if (dims >= 2 && uniform_int(rng, 0, 1) == 0) {
        const Permutation p = random_permutation(rng, dims);
        const std::size_t a = std::min(p(0), p(1));
        const std::size_t b = std::max(p(0), p(1));
        SmoothExpr u = SmoothExpr::constant(Rational(1), dims);
        for (std::size_t v = 0; v < dims; ++v) {
            if (v != a && v != b) {
                u = SmoothExpr::call(Primitive::exp, -SmoothExpr::variable(v, dims).pow(2));
            }
        }
        terms.emplace_back(MultiAtom{u, exact(random_nonzero_rational(rng, 9, 3)),
                                     {{a, exact(random_rational(rng, 3, 2)), 1},
                                      {b, exact(random_rational(rng, 3, 2)), 1}}});
    }
    return DensityND::make(dims, random_gaussian(rng, dims), std::move(terms), Mode::exact);
}

/// Random point whose coordinates come from a small grid so that delta
/// locations are hit regularly.
inline std::vector<Coefficient> random_grid_point(Rng& rng, std::size_t dims)
{
    std::vector<Coefficient> p;
    for (std::size_t i = 0; i < dims; ++i) {
        p.push_back(exact(Rational(uniform_int(rng, -6, 6), 2)));
    }
    return p;
}

} // namespace xreal::testing
