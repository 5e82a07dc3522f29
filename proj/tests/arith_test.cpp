#include "planaut/arith.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace planaut;
using planaut::oracle::term_map;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly mono(long c, unsigned i, unsigned j) { return BiPoly::monomial(c, i, j); }

}  // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(make_rational(6, -4).get_str(), "-3/2");
    EXPECT_EQ(make_rational(0, 5).get_den(), 1);
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(make_rational(1, 0), DenominatorZero);
}

TEST(Degree, NegInfOrdersBelowEverything)
{
    EXPECT_LT(NEG_INF, Degree(0));
    EXPECT_EQ(BiPoly().total_degree(), NEG_INF);
    EXPECT_EQ(UniPoly().degree(), NEG_INF);
}

TEST(BiPolyArith, Examples)
{
    EXPECT_TRUE((X * Y + (-(X * Y))).is_zero());
    EXPECT_EQ((X + Y) * (X - Y), X.pow(2) - Y.pow(2));

    const BiPoly base = Y + X.pow(2);
    const BiPoly cube = base * base * base;
    const BiPoly expected = mono(1, 0, 3) + mono(3, 2, 2) + mono(3, 4, 1) + mono(1, 6, 0);
    EXPECT_EQ(cube, expected);
    // Oracle: repeated naive convolution.
    const auto b = term_map(base);
    EXPECT_EQ(term_map(cube), oracle::naive_mul(oracle::naive_mul(b, b), b));
}

TEST(BiPolyArith, ScaleAndZeroPruning)
{
    EXPECT_TRUE((X + Y).scaled(0).is_zero());
    EXPECT_EQ((X + Y).scaled(make_rational(1, 2)).coeff(1, 0), make_rational(1, 2));
    EXPECT_EQ((X - X).size(), 0u);
}

TEST(PartialDerivative, Examples)
{
    EXPECT_EQ(partial_derivative(mono(1, 2, 1), Var::X), mono(2, 1, 1));
    EXPECT_TRUE(partial_derivative(mono(1, 2, 0), Var::Y).is_zero());

    const BiPoly p = X + (Y + X.pow(2)).pow(3);
    const BiPoly expected = BiPoly(1) + mono(6, 1, 0) * (Y + X.pow(2)).pow(2);
    EXPECT_EQ(partial_derivative(p, Var::X), expected);
    EXPECT_EQ(term_map(partial_derivative(p, Var::X)), oracle::naive_dx(term_map(p)));
    // 1 + 6xy^2 + 12x^3y + 6x^5, frozen from the oracle above.
    EXPECT_EQ(expected, BiPoly(1) + mono(6, 1, 2) + mono(12, 3, 1) + mono(6, 5, 0));
}

TEST(JacobianDet, Examples)
{
    EXPECT_EQ(jacobian_det(PolyMap::identity()), BiPoly(1));
    const BiPoly f = X + Y.pow(2);
    EXPECT_EQ(jacobian_det({f, Y + f.pow(3)}), BiPoly(1));
    EXPECT_EQ(jacobian_det({X, Y + Y.pow(2)}), BiPoly(1) + mono(2, 0, 1));
}

TEST(ComposeMap, Examples)
{
    const BiPoly f = X + Y.pow(2);
    const PolyMap outer{X, Y + X.pow(3)};
    const PolyMap inner{f, Y};
    const PolyMap composed = compose_map(outer, inner);
    EXPECT_EQ(composed, (PolyMap{f, Y + f.pow(3)}));
    EXPECT_EQ(term_map(composed.second),
              oracle::naive_substitute(term_map(outer.second), term_map(inner.first), term_map(inner.second)));

    EXPECT_EQ(compose_map(composed, PolyMap::identity()), composed);
    EXPECT_EQ(compose_map({X - Y.pow(2), Y}, {X + Y.pow(2), Y}), PolyMap::identity());
}

TEST(TotalDegree, Examples)
{
    EXPECT_EQ(total_degree(mono(1, 2, 1) + Y), Degree(3));
    EXPECT_EQ(total_degree(BiPoly()), NEG_INF);
    EXPECT_EQ(total_degree(X + (Y + X.pow(2)).pow(3)), Degree(6));
}

TEST(RestrictToLine, Examples)
{
    const UniPoly t = UniPoly::x();
    {
        auto r = restrict_to_line({X, Y + X.pow(2)}, {0, 1, 0});
        EXPECT_EQ(r.gamma, (Parametrization{t, t.pow(2)}));
        EXPECT_TRUE(r.chart.is_identity());
    }
    {
        auto r = restrict_to_line({X + Y.pow(2), Y}, {1, 0, 0});
        EXPECT_EQ(r.gamma, (Parametrization{t.pow(2), t}));
    }
    {
        auto r = restrict_to_line(PolyMap::identity(), {1, 1, 0});
        EXPECT_EQ(r.gamma, (Parametrization{t, -t}));
    }
    EXPECT_THROW(restrict_to_line(PolyMap::identity(), {0, 0, 1}), InvalidLine);
}

TEST(GcdUnivariate, Examples)
{
    const UniPoly t = UniPoly::x();
    EXPECT_EQ(gcd_univariate(t.scaled(2), t.pow(2).scaled(3)), t);
    EXPECT_EQ(gcd_univariate(t.pow(2) + UniPoly(1), t + UniPoly(1)), UniPoly(1));
    const UniPoly p = t.pow(3).scaled(4) - t;
    EXPECT_EQ(gcd_univariate(p, UniPoly()), p.monic());
    EXPECT_TRUE(gcd_univariate(UniPoly(), UniPoly()).is_zero());
}

TEST(ResultantY, Examples)
{
    const UniPoly t = UniPoly::x();
    EXPECT_EQ(resultant_y(Y - X, Y + X), t.scaled(2));
    EXPECT_EQ(resultant_y(Y, Y - BiPoly(1)), UniPoly(-1));
    EXPECT_EQ(resultant_y(X.pow(2) + X * Y + Y.pow(2) + BiPoly(1), X + Y), t.pow(2) + UniPoly(1));
    EXPECT_THROW(resultant_y(X, Y), DegenerateResultant);
}

TEST(ResultantY, AgreesWithLeibnizDeterminant)
{
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 40) {
        const BiPoly p = oracle::random_bipoly(rng, 3, 5, 3);
        const BiPoly q = oracle::random_bipoly(rng, 3, 5, 3);
        if (p.degree_in(Var::Y) < 1 || q.degree_in(Var::Y) < 1) continue;
        const auto s = sylvester_matrix_y(p, q);
        EXPECT_EQ(resultant_y(p, q), oracle::leibniz_det(s)) << to_string(p) << " | " << to_string(q);
        ++checked;
    }
}

TEST(ArithProperties, RingLaws)
{
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const BiPoly a = oracle::random_bipoly(rng, 5, 6);
        const BiPoly b = oracle::random_bipoly(rng, 5, 6);
        const BiPoly c = oracle::random_bipoly(rng, 5, 6);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(term_map(a * b), oracle::naive_mul(term_map(a), term_map(b)));
    }
}

TEST(ArithProperties, ChainRule)
{
    std::mt19937_64 rng(2);
    for (int k = 0; k < 40; ++k) {
        const PolyMap a = oracle::random_polymap(rng, 3, 4);
        const PolyMap b = oracle::random_polymap(rng, 3, 4);
        const BiPoly lhs = jacobian_det(compose_map(a, b));
        const BiPoly rhs = jacobian_det(a).substitute(b.first, b.second) * jacobian_det(b);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(ArithProperties, ComposeAssociative)
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const PolyMap a = oracle::random_polymap(rng, 2, 3);
        const PolyMap b = oracle::random_polymap(rng, 2, 3);
        const PolyMap c = oracle::random_polymap(rng, 2, 3);
        EXPECT_EQ(compose_map(compose_map(a, b), c), compose_map(a, compose_map(b, c)));
    }
}

TEST(ArithProperties, RestrictionMatchesPointwiseEvaluation)
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 5; ++k) {
        const PolyMap h = oracle::random_polymap(rng, 4, 6);
        Line l{oracle::random_rational(rng, 3), oracle::random_rational(rng, 3), oracle::random_rational(rng, 3)};
        if (!l.valid()) l.b = 1;
        const auto r = restrict_to_line(h, l);
        for (int s = 0; s < 100; ++s) {
            const Rational t = oracle::random_rational(rng, 20);
            Rational sx, sy;
            if (l.b != 0) {
                sx = t;
                sy = -(l.a * t + l.c) / l.b;
            } else {
                sx = -l.c / l.a;
                sy = t;
            }
            EXPECT_EQ(l.a * sx + l.b * sy + l.c, 0);
            const auto [u, v] = h(sx, sy);
            EXPECT_EQ(r.gamma.p(t), u);
            EXPECT_EQ(r.gamma.q(t), v);
        }
    }
}

TEST(ArithProperties, GcdDividesAndIsGreatest)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 60; ++k) {
        const UniPoly common = oracle::random_unipoly(rng, 2);
        const UniPoly a = common * oracle::random_unipoly(rng, 3);
        const UniPoly b = common * oracle::random_unipoly(rng, 3);
        const UniPoly g = gcd_univariate(a, b);
        if (g.is_zero()) {
            EXPECT_TRUE(a.is_zero() && b.is_zero());
            continue;
        }
        EXPECT_EQ(g.leading_coefficient(), 1);
        EXPECT_TRUE(g.divides(a));
        EXPECT_TRUE(g.divides(b));
        if (!common.is_zero()) EXPECT_TRUE(common.divides(g));
    }
}

TEST(Rendering, CanonicalGrlex)
{
    EXPECT_EQ(to_string(X - Y.pow(2)), "x - y^2");
    EXPECT_EQ(to_string(mono(1, 2, 1) + BiPoly(make_rational(3, 4)) * X - BiPoly(1)), "-1 + 3/4*x + x^2*y");
    EXPECT_EQ(to_string(BiPoly()), "0");
    EXPECT_EQ(to_string(-X), "-x");
    EXPECT_EQ(to_string(UniPoly::x().pow(2).scaled(-3) + UniPoly(2)), "2 - 3*x^2");
}
