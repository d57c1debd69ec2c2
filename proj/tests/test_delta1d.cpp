#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "xreal/density1d.hpp"
#include "xreal/error.hpp"

namespace xreal {
namespace {

using testing::exact;

const ExpandedReal w = ExpandedReal::monomial(exact(1), Rational(1));

SmoothExpr x()
{
    return SmoothExpr::variable(0, 1);
}

SmoothExpr gaussian()
{
    return SmoothExpr::call(Primitive::exp, -x().pow(2));
}

Density1D smooth(const SmoothExpr& e)
{
    return Density1D::smooth(e);
}

ExpandedReal at(const Density1D& f, const Rational& r)
{
    return eval_density(f, exact(r));
}

// Composite Simpson rule; the integrand of the nascent-delta oracle is
// smooth on each subinterval.
double simpson(const std::function<double(double)>& f, double a, double b, int n)
{
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4 : 2);
    }
    return sum * h / 3;
}

// Integral of g times the box n on (-1/(2n), 1/(2n)).
double nascent(const std::function<double(double)>& g, double n, double shift = 0.0)
{
    const double half = 0.5 / n;
    return n * simpson(g, shift - half, shift + half, 2000);
}

TEST(Delta, EvaluatesToAlphaOmegaAtItsLocation)
{
    const Density1D d = delta(exact(1), exact(0));
    EXPECT_EQ(at(d, 0), w);
    EXPECT_TRUE(at(d, Rational(1, 2)).is_zero());
    EXPECT_EQ(at(delta(exact(Rational(5, 2)), exact(-1)), -1), w.scaled(exact(Rational(5, 2))));
    EXPECT_EQ(at(delta(exact(2), exact(1)), 1), w.scaled(exact(2)));
    EXPECT_TRUE(at(delta(exact(2), exact(1)), 0).is_zero());
}

TEST(Delta, ZeroWeightIsTheZeroDensity)
{
    EXPECT_TRUE(delta(exact(0), exact(3)).is_zero());
}

TEST(Delta, ZeroExactlyOffItsLocation)
{
    testing::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Rational alpha = testing::random_nonzero_rational(rng);
        const Rational beta = testing::random_rational(rng, 4, 2);
        const Density1D d = delta(exact(alpha), exact(beta));
        for (int k = -8; k <= 8; ++k) {
            Rational p(k, 2);
            p.canonicalize();
            ASSERT_EQ(at(d, p).is_zero(), p != beta);
        }
        ASSERT_EQ(integrate_1d(d).value, exact(alpha));
        ASSERT_TRUE(integrate_1d(d).exact());
    }
}

TEST(DensityAdd, MergesAndCancelsAtEqualLocations)
{
    const Density1D sum = add_density(delta(exact(1), exact(0)), delta(exact(2), exact(0)));
    ASSERT_EQ(sum.train().atoms().size(), 1U);
    EXPECT_EQ(sum.train().atoms()[0].alpha, exact(3));
    EXPECT_TRUE(add_density(delta(exact(1), exact(0)), delta(exact(-1), exact(0))).is_zero());
}

TEST(DensityAdd, PointwiseSumMatchesPartwiseEvaluation)
{
    const Density1D g = smooth(gaussian());
    const Density1D d = delta(exact(3), exact(2));
    const Density1D f = add_density(g, d);
    EXPECT_EQ(at(f, 2), at(g, 2) + at(d, 2));
    EXPECT_EQ(at(f, 2).re_part(), gaussian().eval(std::vector{exact(2)}, Mode::exact));
    EXPECT_EQ(at(f, 2).coefficient_of(Rational(1)), exact(3));
    EXPECT_EQ(at(add_density(g, delta(exact(1), exact(0))), 0), ExpandedReal(exact(1)) + w);
}

TEST(DensityScale, ScalesEveryPart)
{
    EXPECT_EQ(scale_density(exact(2), delta(exact(3), exact(1))), delta(exact(6), exact(1)));
    testing::Rng rng(42);
    EXPECT_TRUE(scale_density(exact(0), testing::random_density_1d(rng)).is_zero());
    const Density1D f = add_density(smooth(gaussian()), delta(exact(1), exact(0)));
    const IntegralResult r = integrate_1d(scale_density(exact(-1), f));
    EXPECT_NEAR(r.value.to_double(), -(std::sqrt(std::numbers::pi) + 1), 1e-9);
}

TEST(DensityMul, SmoothTimesDeltaSifts)
{
    const SmoothExpr g = x().pow(2) + SmoothExpr::constant(Rational(1), 1);
    const Density1D product = mul_density(smooth(g), delta(exact(1), exact(3)));
    EXPECT_EQ(product, delta(exact(10), exact(3)));
    const double oracle = nascent([](double t) { return t * t + 1; }, 1e4, 3.0);
    EXPECT_NEAR(oracle, 10.0, 1e-6);
}

TEST(DensityMul, DisjointDeltasAnnihilate)
{
    EXPECT_TRUE(mul_density(delta(exact(1), exact(0)), delta(exact(1), exact(5))).is_zero());
}

TEST(DensityMul, CoincidingDeltasLeaveAResidue)
{
    const Density1D sq = mul_density(delta(exact(1), exact(0)), delta(exact(1), exact(0)));
    ASSERT_EQ(sq.residue().size(), 1U);
    EXPECT_EQ(sq.residue()[0].exponent, Rational(2));
    EXPECT_EQ(sq.residue()[0].coefficient, exact(1));
    EXPECT_EQ(sq.residue()[0].location, exact(0));
    EXPECT_EQ(at(sq, 0), w * w);
    EXPECT_THROW(integrate_1d(sq), NotIntegrable);
}

TEST(DensityMul, UndefinedSmoothFactorAtAnAtom)
{
    const Density1D inv = smooth(SmoothExpr::constant(Rational(1), 1) / x());
    EXPECT_THROW(mul_density(inv, delta(exact(1), exact(0))), EvalDomainError);
}

TEST(DensityMul, AgreesWithPointwiseProduct)
{
    testing::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        const Density1D f = testing::random_density_1d(rng);
        const Density1D g = testing::random_density_1d(rng);
        const Density1D fg = mul_density(f, g);
        for (int k = -8; k <= 8; ++k) {
            Rational p(k, 2);
            p.canonicalize();
            ASSERT_EQ(at(fg, p), at(f, p) * at(g, p));
        }
    }
}

TEST(DensityParts, ReAndHy)
{
    const Density1D d = delta(exact(3), exact(-2));
    EXPECT_EQ(fn_hy(d), d);
    const Density1D f = add_density(smooth(gaussian()), delta(exact(1), exact(0)));
    EXPECT_EQ(fn_re(f), smooth(gaussian()));
    EXPECT_TRUE(fn_hy(smooth(gaussian())).is_zero());
}

TEST(DensityParts, DecompositionHoldsPointwise)
{
    testing::Rng rng(44);
    for (int i = 0; i < 200; ++i) {
        Density1D f = testing::random_density_1d(rng);
        if (i % 3 == 0) {
            f = mul_density(f, testing::random_density_1d(rng));
        }
        const Density1D parts = add_density(fn_re(f), fn_hy(f));
        for (int k = -8; k <= 8; ++k) {
            Rational p(k, 2);
            p.canonicalize();
            ASSERT_EQ(at(parts, p), at(f, p));
            ASSERT_EQ(at(fn_re(f), p), ExpandedReal(at(f, p).re_part()));
            ASSERT_EQ(at(fn_hy(f), p), at(f, p).hy_part());
        }
    }
}

TEST(Integrate1D, PureAtomsAreExact)
{
    const IntegralResult unit = integrate_1d(delta(exact(1), exact(0)));
    EXPECT_EQ(unit.value, exact(1));
    EXPECT_TRUE(unit.exact());
    EXPECT_EQ(integrate_1d(delta(exact(Rational(5, 2)), exact(7))).value, exact(Rational(5, 2)));
}

TEST(Integrate1D, MixedDensity)
{
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-10;
    const Density1D f = add_density(smooth(gaussian()), delta(exact(3), exact(2)));
    const IntegralResult r = integrate_1d(f, cfg);
    EXPECT_NEAR(r.value.to_double(), std::sqrt(std::numbers::pi) + 3, 1e-8);
    ASSERT_TRUE(r.abs_error_estimate.has_value());
}

TEST(Integrate1D, DivergentRealPart)
{
    EXPECT_THROW(integrate_1d(smooth(SmoothExpr::constant(Rational(1), 1))), NonConvergent);
}

TEST(Integrate1D, SiftingMatchesNascentDeltaLimit)
{
    const auto g = [](double t) { return std::exp(-t * t); };
    const Density1D sifted = mul_density(smooth(gaussian()), delta(exact(1), exact(0)));
    const double exact_value = integrate_1d(sifted).value.to_double();
    EXPECT_EQ(exact_value, 1.0);
    double previous = INFINITY;
    for (const double n : {10.0, 100.0, 1000.0, 10000.0}) {
        const double error = std::abs(nascent(g, n) - exact_value);
        EXPECT_LT(error, previous);
        previous = error;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(Integrate1D, Linearity)
{
    testing::Rng rng(45);
    QuadratureConfig cfg;
    cfg.abs_tolerance = cfg.rel_tolerance = 1e-10;
    for (int i = 0; i < 40; ++i) {
        const Density1D f = testing::random_density_1d(rng);
        const Density1D g = testing::random_density_1d(rng);
        const Coefficient c = exact(testing::random_nonzero_rational(rng, 5, 3));
        const IntegralResult rf = integrate_1d(f, cfg);
        const IntegralResult rg = integrate_1d(g, cfg);
        const IntegralResult sum = integrate_1d(add_density(f, g), cfg);
        const IntegralResult scaled = integrate_1d(scale_density(c, f), cfg);
        const double tol = 1e-8 * (1 + std::abs(rf.value.to_double()) + std::abs(rg.value.to_double()));
        ASSERT_NEAR(sum.value.to_double(), rf.value.to_double() + rg.value.to_double(), tol);
        ASSERT_NEAR(scaled.value.to_double(), c.to_double() * rf.value.to_double(),
                    tol * (1 + std::abs(c.to_double())));
    }
}

TEST(DeltaTrain, StaysSortedAndMerged)
{
    const DeltaTrain t = DeltaTrain::make({{exact(1), exact(3)}, {exact(2), exact(-1)}, {exact(4), exact(3)},
                                           {exact(-2), exact(-1)}});
    ASSERT_EQ(t.atoms().size(), 1U);
    EXPECT_EQ(t.atoms()[0].alpha, exact(5));
    EXPECT_EQ(t.atoms()[0].beta, exact(3));
    EXPECT_EQ(t.weight_at(exact(3)), exact(5));
    EXPECT_FALSE(t.weight_at(exact(0)).has_value());
}

TEST(Density1D, FloatModeAtoms)
{
    const Density1D d = delta(Coefficient(2.5), Coefficient(-1.0));
    EXPECT_EQ(eval_density(d, Coefficient(-1.0)).to_string(), "2.5*w");
    EXPECT_EQ(integrate_1d(d).value, Coefficient(2.5));
    EXPECT_THROW(add_density(d, delta(exact(1), exact(0))), ModeMismatch);
}

} // namespace
} // namespace xreal
