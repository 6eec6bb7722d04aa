#include <gtest/gtest.h>

#include "ttfal/ttfal.hpp"

using namespace ttfal;

namespace {

GaussianRational gr(long long a, long long b, long long c = 0, long long d = 1) {
    return {Rational(a, b), Rational(c, d)};
}

const GaussianRational I = GaussianRational::i();

} // namespace

TEST(GaussianRational, FieldOperations) {
    GaussianRational a = gr(1, 2, 3, 4), b = gr(-2, 3, 1, 5);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a / a, GaussianRational(1));
    EXPECT_EQ(I * I, GaussianRational(-1));
    EXPECT_EQ(a * a.conj(), GaussianRational(Rational(1, 4) + Rational(9, 16)));
}

TEST(GaussianRational, DivisionByZeroThrows) {
    EXPECT_THROW(GaussianRational(1) / GaussianRational(), DivisionByZero);
}

TEST(GaussianRational, ToComplex) {
    ComplexF z = gr(3, 8, -7, 16).to_complex();
    EXPECT_DOUBLE_EQ(z.real(), 0.375);
    EXPECT_DOUBLE_EQ(z.imag(), -0.4375);
}

TEST(GaussianRational, DenominatorLcm) { EXPECT_EQ(denominator_lcm(gr(1, 6, 1, 4)), BigInt(12)); }

TEST(MultiPoly, RingIdentities) {
    MultiPoly x = var("x"), y = var("y");
    MultiPoly p = x * x + y.scaled(I) - MultiPoly(gr(1, 4));
    EXPECT_EQ((x + y).pow(2), x * x + (x * y).scaled(2) + y * y);
    EXPECT_EQ(p - p, MultiPoly());
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.degree_in("x"), 2u);
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_EQ(p.coefficient_in("y", 1), MultiPoly(I));
}

TEST(MultiPoly, SubstituteAndEvaluate) {
    MultiPoly x = var("x"), y = var("y");
    MultiPoly p = x * y + x;
    MultiPoly q = p.substitute("y", x + MultiPoly(1));
    EXPECT_EQ(q, x * x + x.scaled(2));
    ComplexF v = q.eval({{"x", ComplexF(0.0, 1.0)}});
    EXPECT_NEAR(std::abs(v - ComplexF(-1.0, 2.0)), 0.0, 1e-15);
}

TEST(MultiPoly, EvalMissingVariableThrows) {
    EXPECT_THROW(var("x").eval({{"y", 1.0}}), MissingVariable);
}

TEST(MultiPoly, ExactDivision) {
    MultiPoly x = var("x"), y = var("y");
    MultiPoly a = (x + y) * (x - y.scaled(I));
    auto q = a.divide_exact(x + y);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, x - y.scaled(I));
    EXPECT_FALSE(a.divide_exact(x + MultiPoly(1)).has_value());
}

TEST(MultiPoly, RegistryOrderDoesNotMatter) {
    MultiPoly a = var("b") + var("a");
    MultiPoly b = var("a") + var("b");
    EXPECT_EQ(a, b);
}

TEST(UniPoly, DivmodAndGcd) {
    UniPoly p = UniPoly::from_integers({-1, 0, 1});   // x^2 - 1
    UniPoly q = UniPoly::from_integers({1, 1});       // x + 1
    auto [quo, rem] = p.divmod(q);
    EXPECT_EQ(quo, UniPoly::from_integers({-1, 1}));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(gcd(p, UniPoly::from_integers({1, 2, 1})), q);
    EXPECT_TRUE(q.divides(p));
    EXPECT_FALSE(p.divides(q));
}

TEST(UniPoly, SquarefreePart) {
    UniPoly p = UniPoly::from_integers({1, 1}) * UniPoly::from_integers({1, 1}) * UniPoly::from_integers({1, 0, 4});
    UniPoly s = squarefree_part(p);
    EXPECT_EQ(s.degree(), 3);
    EXPECT_TRUE(equal_up_to_unit(s, UniPoly::from_integers({1, 1}) * UniPoly::from_integers({1, 0, 4})));
}

TEST(UniPoly, EqualUpToUnit) {
    UniPoly p = UniPoly::from_integers({1, -3, 4});
    EXPECT_TRUE(equal_up_to_unit(p, p.scaled(I)));
    EXPECT_TRUE(equal_up_to_unit(p, p.scaled(gr(-5, 7))));
    EXPECT_FALSE(equal_up_to_unit(p, UniPoly::from_integers({1, 3, 4})));
}

TEST(UniPoly, IntegerForms) {
    UniPoly p({gr(1, 4), 0, 1});
    IntegerForm f = integer_cleared(p);
    EXPECT_EQ(f.divisor, BigInt(4));
    EXPECT_EQ(format_integer_form(f, "x", false), "4x^2+1");
    EXPECT_EQ(format_integer_form(primitive_form(p.scaled(I)), "x", true), "4*x^2+1");
    EXPECT_EQ(format_integer_form(primitive_form(UniPoly({1, gr(-3, 4), gr(1, 4)})), "x", true), "x^2-3*x+4");
    EXPECT_EQ(format_integer_form(primitive_form(UniPoly({I, 1})), "x", true), "x+i");
}

TEST(UniPoly, FromMultiRejectsOtherVariables) {
    EXPECT_THROW(UniPoly::from_multi(var("x") + var("y"), "x"), Error);
    EXPECT_EQ(UniPoly::from_multi(var("x") * var("x"), "x").degree(), 2);
}

TEST(Roots, QuadraticExact) {
    auto r = find_roots(UniPoly::from_integers({1, -3, 4}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0] - ComplexF(0.375, -std::sqrt(7.0) / 8)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[1] - ComplexF(0.375, std::sqrt(7.0) / 8)), 0.0, 1e-12);
}

TEST(Roots, ZeroRootsAndLinear) {
    auto r = find_roots(UniPoly::from_integers({0, 0, 2, 1}));
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0], ComplexF(-2.0, 0.0));
    EXPECT_EQ(r[1], ComplexF(0.0, 0.0));
    EXPECT_EQ(r[2], ComplexF(0.0, 0.0));
}

TEST(Roots, GaussianCoefficients) {
    // (x - i/3)(x + 2 - i)
    UniPoly p = UniPoly({gr(0, 1, -1, 3), 1}) * UniPoly({gr(2, 1, -1, 1), 1});
    auto r = find_roots(p);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0] - ComplexF(-2.0, 1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[1] - ComplexF(0.0, 1.0 / 3)), 0.0, 1e-12);
}

TEST(Roots, HighDegreeConjugateClosed) {
    UniPoly p = ttpoly_falp(17).poly;
    auto r = symmetrize_conjugates(find_roots(p));
    ASSERT_EQ(r.size(), 16u);
    for (const auto& z : r) {
        EXPECT_LE(std::abs(p.eval(z)), 1e-9);
        bool found = std::any_of(r.begin(), r.end(), [&](ComplexF w) { return std::abs(w - std::conj(z)) < 1e-9; });
        EXPECT_TRUE(found);
    }
}

TEST(Roots, CanonicalOrderIsDeterministic) {
    UniPoly p = UniPoly::from_integers({1, 0, 0, 0, 1});
    EXPECT_EQ(find_roots(p), find_roots(p));
    auto r = find_roots(p);
    EXPECT_LT(r.front().real(), 0.0);
    EXPECT_LT(r.front().imag(), 0.0);
}

TEST(Roots, NonConvergenceCarriesPartialRoots) {
    UniPoly p = ttpoly_falp(21).poly;
    try {
        find_roots(p, RootOptions{1e-300, 1});
        FAIL() << "expected NonConvergence";
    } catch (const NonConvergence& e) {
        EXPECT_EQ(e.partial_roots().size(), 20u);
    }
}

TEST(Roots, ConstantRejected) { EXPECT_THROW(find_roots(UniPoly::from_integers({3})), Error); }

TEST(Mat2, CrossingEdgeProducts) {
    MultiPoly w = var("w");
    Mat2 m = Mat2::crossing(w) * Mat2::edge(MultiPoly(1));
    EXPECT_EQ(m.e11, MultiPoly(0));
    EXPECT_EQ(m.e12, w);
    EXPECT_EQ(m.e21, MultiPoly(1));
    EXPECT_EQ(m.e22, MultiPoly(1));
    EXPECT_EQ(Mat2::edge(w, -1).e12, -w);
}
