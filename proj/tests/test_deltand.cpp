#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "xreal/density_nd.hpp"
#include "xreal/error.hpp"

namespace xreal {
namespace {

using testing::exact;

const ExpandedReal w = ExpandedReal::monomial(exact(1), Rational(1));

SmoothExpr var(std::size_t i, std::size_t arity)
{
    return SmoothExpr::variable(i, arity);
}

SmoothExpr one(std::size_t arity)
{
    return SmoothExpr::constant(Rational(1), arity);
}

SmoothExpr zero(std::size_t arity)
{
    return SmoothExpr::constant(Rational(0), arity);
}

std::vector<Coefficient> point(std::initializer_list<Rational> values)
{
    std::vector<Coefficient> p;
    for (const auto& v : values) {
        p.push_back(exact(v));
    }
    return p;
}

// sin(x1 x2) delta_0(x3) as a tensor term.
DensityND sine_density()
{
    return DensityND::make(3, zero(3),
                           {tensor(SmoothExpr::call(Primitive::sin, var(0, 2) * var(1, 2)), exact(1), exact(0))},
                           Mode::exact);
}

TEST(Permutation, ValidatesBijection)
{
    EXPECT_THROW(Permutation({0, 0}), InvalidArgument);
    EXPECT_THROW(Permutation({0, 2}), InvalidArgument);
    const Permutation p({1, 2, 0});
    EXPECT_EQ(p(0), 1U);
    EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(3));
    EXPECT_EQ(compose(p, compose(p, p)), Permutation::identity(3));
    EXPECT_THROW(compose(p, Permutation::identity(2)), PermutationArityError);
}

TEST(PermuteVars, CyclicRelabelingOfSineTerm)
{
    // sigma: 1 -> 2, 2 -> 3, 3 -> 1 (0-based images 1, 2, 0).
    const Permutation sigma({1, 2, 0});
    const DensityND lhs = permute_vars(sigma, sine_density());
    testing::Rng rng(51);
    for (int i = 0; i < 200; ++i) {
        std::vector<Coefficient> p = testing::random_grid_point(rng, 3);
        if (i % 4 == 0) {
            p[0] = exact(0);
        }
        // Right-hand side computed directly: sin(x2 x3) delta_0(x1).
        ExpandedReal rhs;
        if (p[0].is_zero()) {
            const SmoothExpr s = SmoothExpr::call(Primitive::sin, var(0, 2) * var(1, 2));
            rhs = w.scaled(s.eval(std::vector{p[1], p[2]}, Mode::exact));
        }
        ASSERT_EQ(eval_nd(lhs, p), rhs);
    }
}

TEST(PermuteVars, IdentityAndInverse)
{
    testing::Rng rng(52);
    for (int i = 0; i < 50; ++i) {
        const std::size_t dims = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
        const DensityND f = testing::random_density_nd(rng, dims);
        const Permutation s = testing::random_permutation(rng, dims);
        EXPECT_EQ(permute_vars(Permutation::identity(dims), f), f);
        const DensityND back = permute_vars(s, permute_vars(s.inverse(), f));
        for (int k = 0; k < 20; ++k) {
            const auto p = testing::random_grid_point(rng, dims);
            ASSERT_EQ(eval_nd(back, p), eval_nd(f, p));
        }
    }
}

TEST(PermuteVars, ActsAsAGroupAction)
{
    testing::Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const std::size_t dims = static_cast<std::size_t>(testing::uniform_int(rng, 2, 3));
        const DensityND f = testing::random_density_nd(rng, dims);
        const Permutation s = testing::random_permutation(rng, dims);
        const Permutation t = testing::random_permutation(rng, dims);
        const DensityND composed = permute_vars(compose(s, t), f);
        const DensityND nested = permute_vars(s, permute_vars(t, f));
        for (int k = 0; k < 20; ++k) {
            const auto p = testing::random_grid_point(rng, dims);
            ASSERT_EQ(eval_nd(composed, p), eval_nd(nested, p));
            // Definition: pi_s(f)(x) = f(x_s(0), ..., x_s(n-1)).
            std::vector<Coefficient> moved;
            for (std::size_t v = 0; v < dims; ++v) {
                moved.push_back(p[s(v)]);
            }
            ASSERT_EQ(eval_nd(permute_vars(s, f), p), eval_nd(f, moved));
        }
    }
}

TEST(PermuteVars, SizeMismatch)
{
    EXPECT_THROW(permute_vars(Permutation::identity(2), sine_density()), PermutationArityError);
}

TEST(Tensor, EvaluatesOnTheDeltaHyperplane)
{
    const SmoothExpr u = SmoothExpr::call(Primitive::exp, -var(0, 1).pow(2));
    const DensityND f = DensityND::make(2, zero(2), {tensor(u, exact(1), exact(0))}, Mode::exact);
    EXPECT_EQ(eval_nd(f, point({0, 0})), w);
    EXPECT_TRUE(eval_nd(f, point({0, 1})).is_zero());
    const DensityND z = DensityND::make(2, zero(2), {tensor(zero(1), exact(3), exact(0))}, Mode::exact);
    EXPECT_TRUE(eval_nd(z, point({5, 0})).is_zero());
    EXPECT_TRUE(eval_nd(z, point({0, 0})).is_zero());
}

TEST(Tensor, ProductOfTwoPointDeltas)
{
    // alpha delta_{b1}(x1) * 1 delta_{b2}(x2), stored as one multi-delta term.
    const MultiAtom m{one(2), exact(7), {{0, exact(1), 1}, {1, exact(-2), 1}}};
    const DensityND f = DensityND::make(2, zero(2), {m}, Mode::exact);
    EXPECT_EQ(eval_nd(f, point({1, -2})), (w * w).scaled(exact(7)));
    EXPECT_TRUE(eval_nd(f, point({1, 0})).is_zero());
    EXPECT_EQ(integrate_nd(f).value, exact(7));
    EXPECT_TRUE(integrate_nd(f).exact());
}

TEST(Tensor, MultiAtomWithFreeVariableIntegratesItsFactor)
{
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-10;
    const SmoothExpr gauss = SmoothExpr::call(Primitive::exp, -var(2, 3).pow(2));
    const MultiAtom m{gauss, exact(2), {{0, exact(0), 1}, {1, exact(1), 1}}};
    const DensityND f = DensityND::make(3, zero(3), {m}, Mode::exact);
    EXPECT_NEAR(integrate_nd(f, cfg).value.to_double(), 2 * std::sqrt(std::numbers::pi), 1e-8);
}

TEST(DensityNDParts, ReHyDecomposition)
{
    const DensityND t = DensityND::make(2, zero(2), {tensor(one(1), exact(2), exact(1))}, Mode::exact);
    const auto p = point({0, 1});
    EXPECT_TRUE(eval_nd(fn_re_nd(t), p).is_zero());
    const SmoothExpr g = SmoothExpr::call(Primitive::exp, -var(0, 2).pow(2));
    const DensityND s = DensityND::make(2, g, {}, Mode::exact);
    EXPECT_TRUE(fn_hy_nd(s).terms().empty());
    testing::Rng rng(54);
    for (int i = 0; i < 100; ++i) {
        const std::size_t dims = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
        const DensityND f = testing::random_density_nd(rng, dims);
        const DensityND parts = add_nd(fn_re_nd(f), fn_hy_nd(f));
        for (int k = 0; k < 10; ++k) {
            const auto q = testing::random_grid_point(rng, dims);
            ASSERT_EQ(eval_nd(parts, q), eval_nd(f, q));
        }
    }
}

TEST(IntegrateND, GaussianProduct)
{
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-9;
    const SmoothExpr g = SmoothExpr::call(Primitive::exp, -var(0, 2).pow(2) - var(1, 2).pow(2));
    const DensityND f = DensityND::make(2, g, {}, Mode::exact);
    const double product = std::pow(integrate_real_1d(SmoothExpr::call(Primitive::exp, -var(0, 1).pow(2)), cfg).value, 2);
    EXPECT_NEAR(integrate_nd(f, cfg).value.to_double(), product, 1e-6);
    EXPECT_NEAR(integrate_nd(f, cfg).value.to_double(), std::numbers::pi, 1e-6);
}

TEST(IntegrateND, SineTermWithGaussianEnvelopeVanishes)
{
    const SmoothExpr u = SmoothExpr::call(Primitive::sin, var(0, 2) * var(1, 2)) *
                         SmoothExpr::call(Primitive::exp, -var(0, 2).pow(2) - var(1, 2).pow(2));
    const DensityND f = permute_vars(Permutation({1, 2, 0}),
                                     DensityND::make(3, zero(3), {tensor(u, exact(1), exact(0))}, Mode::exact));
    const IntegralResult r = integrate_nd(f);
    EXPECT_NEAR(r.value.to_double(), 0.0, 1e-6);
    // Oracle: the 2-D quadrature of u after sifting.
    EXPECT_NEAR(integrate_real_nd(u, 2, {}).value, r.value.to_double(), 1e-9);
}

TEST(IntegrateND, AgreesWithOneDimensionalIntegral)
{
    testing::Rng rng(55);
    for (int i = 0; i < 30; ++i) {
        const Density1D f = testing::random_density_1d(rng);
        const IntegralResult a = integrate_1d(f);
        const IntegralResult b = integrate_nd(to_nd(f));
        ASSERT_EQ(a.value, b.value);
        ASSERT_EQ(a.abs_error_estimate, b.abs_error_estimate);
        ASSERT_EQ(to_1d(to_nd(f)), f);
    }
}

TEST(IntegrateND, TensorSiftingConsistency)
{
    testing::Rng rng(56);
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-10;
    for (int i = 0; i < 20; ++i) {
        const SmoothExpr u = testing::random_gaussian(rng, 1);
        const Coefficient alpha = exact(testing::random_nonzero_rational(rng, 5, 2));
        const Coefficient beta = exact(testing::random_rational(rng, 2, 2));
        // g depends only on the delta'd variable x2.
        const SmoothExpr g = SmoothExpr::call(Primitive::cos, var(1, 2)) + SmoothExpr::constant(Rational(2), 2);
        const Coefficient g_beta = g.substitute(1, beta).eval(std::vector{exact(0), exact(0)}, Mode::exact);
        const DensityND f = DensityND::make(2, zero(2), {tensor(u * SmoothExpr::constant(g_beta.rational(), 1), alpha, beta)},
                                            Mode::exact);
        const Permutation s = testing::random_permutation(rng, 2);
        const double lhs = integrate_nd(permute_vars(s, f), cfg).value.to_double();
        const double rhs = integrate_real_1d(u, cfg).value * g_beta.to_double() * alpha.to_double();
        ASSERT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(IntegrateND, ErrorsName)
{
    const MultiAtom squared{one(1), exact(1), {{0, exact(0), 2}}};
    const DensityND f = DensityND::make(1, zero(1), {squared}, Mode::exact);
    EXPECT_EQ(eval_nd(f, point({0})), w * w);
    try {
        integrate_nd(f);
        FAIL() << "expected NotIntegrable";
    } catch (const NotIntegrable& e) {
        EXPECT_NE(std::string(e.what()).find("term 0"), std::string::npos);
    }
    const DensityND flat = DensityND::make(2, zero(2), {tensor(one(1), exact(1), exact(0))}, Mode::exact);
    EXPECT_THROW(integrate_nd(flat), NonConvergent);
    const SmoothExpr g4 = SmoothExpr::call(Primitive::exp, -var(3, 4).pow(2));
    EXPECT_THROW(integrate_nd(DensityND::make(4, g4, {}, Mode::exact)), DimensionTooLarge);
}

TEST(IntegrateND, PermutationInvariance)
{
    testing::Rng rng(57);
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-8;
    for (int i = 0; i < 10; ++i) {
        const std::size_t dims = static_cast<std::size_t>(testing::uniform_int(rng, 2, 3));
        const DensityND f = testing::random_density_nd(rng, dims);
        const Permutation s = testing::random_permutation(rng, dims);
        const IntegralResult a = integrate_nd(f, cfg);
        const IntegralResult b = integrate_nd(permute_vars(s, f), cfg);
        const double tol = a.abs_error_estimate.value_or(0) + b.abs_error_estimate.value_or(0) +
                           2 * cfg.abs_tolerance * (1 + std::abs(a.value.to_double()));
        ASSERT_NEAR(a.value.to_double(), b.value.to_double(), tol);
    }
}

TEST(DensityND, ValidatesShapes)
{
    EXPECT_THROW(DensityND::make(2, zero(2), {TensorTerm{one(1), exact(1), exact(0), Permutation::identity(3)}},
                                 Mode::exact),
                 PermutationArityError);
    EXPECT_THROW(DensityND::make(2, zero(2), {tensor(one(1), Coefficient(1.0), Coefficient(0.0))}, Mode::exact),
                 ModeMismatch);
    EXPECT_THROW(DensityND::make(1, var(1, 2), {}, Mode::exact), InvalidArgument);
}

} // namespace
} // namespace xreal
