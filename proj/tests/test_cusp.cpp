#include <gtest/gtest.h>

#include "ttfal/ttfal.hpp"

using namespace ttfal;

namespace {

std::string data(const std::string& name) { return std::string(TTFAL_DATA_DIR) + "/diagrams/" + name; }

const ComplexF I(0.0, 1.0);

std::vector<ComplexF> shapes_of(const std::string& name) {
    PipelineResult r = run_pipeline(load_diagram(data(name)));
    std::vector<ComplexF> out;
    for (const auto& c : r.report.roots[r.chosen].cusps)
        out.push_back(c.shape);
    return out;
}

void expect_shapes(const std::vector<ComplexF>& got, const std::vector<ComplexF>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
        EXPECT_LT(std::abs(got[k] - want[k]), 1e-9) << "cusp " << k << ": " << got[k];
}

} // namespace

TEST(CuspCircle, Formulas) {
    EXPECT_LT(std::abs(cusp_shape_circle(0.5 * I, HalfTwist::None) - 2.0 * I), 1e-15);
    EXPECT_LT(std::abs(cusp_shape_circle(0.5 * I, HalfTwist::Left) - ComplexF(-1.0, 1.0)), 1e-15);
    EXPECT_LT(std::abs(cusp_shape_circle(0.25 * I, HalfTwist::Left) - ComplexF(-0.4, 0.8)), 1e-15);
    EXPECT_LT(std::abs(cusp_shape_circle(0.5 * I, HalfTwist::Right) - ComplexF(1.0, 1.0)), 1e-15);
}

TEST(CuspCircle, VanishingDenominator) {
    EXPECT_THROW(cusp_shape_circle(-0.5, HalfTwist::Right), DivisionByZero);
    EXPECT_THROW(cusp_shape_circle(0.5, HalfTwist::Left), DivisionByZero);
    EXPECT_NO_THROW(cusp_shape_circle(0.5, HalfTwist::None));
}

TEST(CuspCircle, TwistFormulasAgreeToFirstOrder) {
    for (ComplexF w : {ComplexF(1e-6, 0.0), ComplexF(0.0, 1e-6), ComplexF(7e-7, -7e-7)}) {
        EXPECT_LT(std::abs(cusp_shape_circle(w, HalfTwist::Right) - 4.0 * w), 1e-5);
        EXPECT_LT(std::abs(cusp_shape_circle(w, HalfTwist::Left) - 4.0 * w), 1e-5);
    }
}

TEST(CuspCircle, ConjugateRootsGiveConjugateShapes) {
    const ComplexF w(0.375, std::sqrt(7.0) / 8);
    for (auto t : {HalfTwist::None, HalfTwist::Right, HalfTwist::Left})
        EXPECT_LT(std::abs(cusp_shape_circle(std::conj(w), t) - std::conj(cusp_shape_circle(w, t))), 1e-15);
}

TEST(CuspProjection, SumAndShear) {
    Assignment at{{"u1", 0.5 * I}, {"u2", 0.5 * I}, {"u4", 0.5 * I}, {"u6", 0.5 * I}};
    ProjectionComponent plain{"sy", {{"u1", 1}, {"u6", 1}}, 0, 1};
    EXPECT_LT(std::abs(cusp_shape_projection(plain, at) - I), 1e-15);
    ProjectionComponent sheared{"rstq", {{"u2", 1}, {"u6", 1}, {"u1", 1}, {"u4", 1}}, 4, 1};
    EXPECT_LT(std::abs(cusp_shape_projection(sheared, at) - ComplexF(-2.0, 2.0)), 1e-15);
    sheared.shear_sign = -1;
    EXPECT_LT(std::abs(cusp_shape_projection(sheared, at) - ComplexF(2.0, 2.0)), 1e-15);
    ProjectionComponent negated{"k", {{"u1", -1}, {"u2", -1}}, 0, 1};
    EXPECT_LT(std::abs(cusp_shape_projection(negated, at) + I), 1e-15);
}

TEST(CuspProjection, MissingAssignment) {
    ProjectionComponent c{"k", {{"u9", 1}}, 0, 1};
    EXPECT_THROW(cusp_shape_projection(c, {}), MissingVariable);
}

TEST(CuspShapes, Borromean) { expect_shapes(shapes_of("borromean.json"), {2.0 * I, 2.0 * I, 2.0 * I}); }

TEST(CuspShapes, BorromeanHalfTwist) {
    expect_shapes(shapes_of("borromean-ht.json"), {2.0 * I, ComplexF(-1.0, 1.0), 2.0 * I});
}

TEST(CuspShapes, ThreePretzel) { expect_shapes(shapes_of("3-pretzel.json"), std::vector<ComplexF>(6, I)); }

TEST(CuspShapes, ThreePretzelHalfTwist) {
    expect_shapes(shapes_of("3-pretzel-ht.json"), {ComplexF(-0.4, 0.8), I, I, ComplexF(-2.0, 2.0), I});
}

TEST(CuspShapes, FormulaTags) {
    PipelineResult r = run_pipeline(load_diagram(data("3-pretzel-ht.json")));
    const auto& cs = r.report.roots[r.chosen].cusps;
    EXPECT_EQ(std::string(formula_name(cs[0].formula)), "lh-twist");
    EXPECT_EQ(std::string(formula_name(cs[1].formula)), "no-twist");
    EXPECT_EQ(std::string(formula_name(cs[3].formula)), "projection-sheared");
    EXPECT_EQ(std::string(formula_name(cs[4].formula)), "projection");
}

TEST(CuspShapes, GeometricRootsAreInUpperHalfPlane) {
    for (auto name : {"borromean.json", "borromean-ht.json", "hamantash.json", "fal41.json", "3-pretzel.json",
                      "3-pretzel-ht.json"})
        for (const auto& s : shapes_of(name))
            EXPECT_GT(s.imag(), 0.0) << name;
}

TEST(FieldMembership, RootProximityAndDirect) {
    UniPoly x2p1 = UniPoly::from_integers({1, 0, 1});
    FieldCheck a = check_field_membership(I, x2p1);
    EXPECT_TRUE(a.root_proximity);
    EXPECT_TRUE(a.direct);
    EXPECT_FALSE(check_field_membership(2.0 * I, x2p1).member());
    // Hamantash: x^2 - x + 2 has the root (1 + sqrt(7) i)/2 and w = (1 + x)/4.
    const ComplexF w(0.375, std::sqrt(7.0) / 8);
    UniPoly field = UniPoly::from_integers({2, -1, 1});
    EXPECT_FALSE(check_field_membership(w, field).member());
    EXPECT_TRUE(check_field_membership(4.0 * w - 1.0, field).member());
    EXPECT_THROW(check_field_membership(I, UniPoly()), Error);
}
