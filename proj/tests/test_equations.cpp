#include <gtest/gtest.h>

#include "ttfal/ttfal.hpp"

using namespace ttfal;

namespace {

std::string data(const std::string& name) { return std::string(TTFAL_DATA_DIR) + "/diagrams/" + name; }

LabelExpr v(const std::string& name) { return LabelExpr::var(name); }
GaussianRational q(long long a, long long b) { return GaussianRational::fraction(a, b); }
FaceEntry E(LabelExpr e, Direction d = Direction::With) { return FaceEntry::edge(std::move(e), d); }
FaceEntry X(LabelExpr e) { return FaceEntry::crossing(std::move(e)); }

Mat2 scalar(const MultiPoly& s) { return {s, MultiPoly(0), MultiPoly(0), s}; }

} // namespace

TEST(ShapeParams, SignFollowsEdgeDirections) {
    Face f{"f", {E(v("a")), X(v("w")), E(v("b"), Direction::Against), X(v("z")), E(v("c"), Direction::Against), X(v("y"))}};
    auto s = shape_params(f);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].sign, 1);  // a with, b against
    EXPECT_EQ(s[1].sign, -1); // b against, c against
    EXPECT_EQ(s[2].sign, 1);  // c against, a with
    EXPECT_EQ(s[0].prev, v("a"));
    EXPECT_EQ(s[0].next, v("b"));
    Assignment at{{"w", 2.0}, {"a", 1.0}, {"b", 4.0}};
    EXPECT_DOUBLE_EQ(s[0].eval(at).real(), 0.5);
}

TEST(RegionMatrix, EntryOrder) {
    Face f{"f", {E(v("u")), X(v("w"))}};
    Mat2 m = region_matrix(f);
    EXPECT_EQ(m, Mat2::edge(var("u")) * Mat2::crossing(var("w")));
    EXPECT_EQ(region_matrix(f, 1), Mat2::crossing(var("w")) * Mat2::edge(var("u")));
}

TEST(FaceEquations, TriangleGivesXiMinusOne) {
    // u, w, 1, 1/4, 1, w with all edges "with": xi = -w/u, -1/4, -w/u
    Face f{"f", {E(v("u")), X(v("w")), E(1), X(LabelExpr(q(1, 4))), E(1), X(v("w"))}};
    std::vector<MultiPoly> sides;
    auto eqs = face_equations(f, &sides);
    ASSERT_EQ(eqs.size(), 3u);
    // -w/u - 1 = 0 clears to a multiple of w + u; -1/4 - 1 is a nonzero constant.
    EXPECT_TRUE(eqs[0].substitute("u", -var("w")).is_zero());
    EXPECT_TRUE(eqs[2].substitute("u", -var("w")).is_zero());
    EXPECT_TRUE(eqs[1].is_constant());
    EXPECT_FALSE(eqs[1].is_zero());
    ASSERT_EQ(sides.size(), 1u);
    EXPECT_TRUE(sides[0] == var("u") || sides[0] == -var("u"));
}

TEST(FaceEquations, QuadrilateralCyclicConsistency) {
    // 4-sided faces: xi_k + xi_{k+1} = 1 for all k forces xi_1 = xi_3, xi_2 = xi_4.
    FALDiagram d = load_diagram(data("fal41.json"));
    const Face& f = d.faces[3];
    ASSERT_EQ(f.sides(), 4u);
    auto eqs = face_equations(f);
    ASSERT_EQ(eqs.size(), 4u);
    const double h = std::sqrt(2.0) / 4;
    Assignment at;
    for (int k = 1; k <= 8; ++k)
        at["u" + std::to_string(k)] = ComplexF(0.0, -2.0 * h);
    for (int k = 1; k <= 4; ++k)
        at["w" + std::to_string(k)] = ComplexF(0.0, h);
    for (const auto& e : eqs)
        EXPECT_LT(std::abs(e.eval(at)), 1e-12);
    auto xi = shape_params(f);
    EXPECT_LT(std::abs(xi[0].eval(at) - xi[2].eval(at)), 1e-12);
    EXPECT_LT(std::abs(xi[1].eval(at) - xi[3].eval(at)), 1e-12);
    EXPECT_LT(std::abs(xi[0].eval(at) + xi[1].eval(at) - 1.0), 1e-12);
}

TEST(FaceEquations, LargeFacesUseMatrixEntries) {
    Face big = falp_face(6);
    std::vector<MultiPoly> sides;
    auto eqs = face_equations(big, &sides);
    ASSERT_EQ(eqs.size(), 3u);
    Mat2 m = region_matrix(big);
    EXPECT_EQ(eqs[0], m.e12);
    EXPECT_EQ(eqs[1], m.e21);
    EXPECT_EQ(eqs[2], m.e11 - m.e22);
    EXPECT_FALSE(sides.empty());
}

TEST(FaceEquations, DegenerateFaces) {
    Face bigon{"b", {E(v("u")), X(v("w")), E(v("t")), X(v("w"))}};
    EXPECT_THROW(face_equations(bigon), DegenerateFace);
    Face zero{"z", {E(0), X(v("w")), E(1), X(v("w")), E(1), X(v("w"))}};
    EXPECT_THROW(face_equations(zero), DegenerateFace);
}

TEST(FaceEquations, RegionMatrixVanishesAtSolution) {
    // Scalar region matrix at the geometric solution of every shipped example.
    for (auto name : {"borromean.json", "fal41.json", "3-pretzel.json", "hamantash.json"}) {
        SCOPED_TRACE(name);
        PipelineResult r = run_pipeline(load_diagram(data(name)));
        const auto& at = r.report.roots[r.chosen].assignment;
        for (const auto& f : r.diagram.faces) {
            auto m = region_matrix(f).eval(at);
            EXPECT_LT(std::abs(m[1]), 1e-9);
            EXPECT_LT(std::abs(m[2]), 1e-9);
            EXPECT_LT(std::abs(m[0] - m[3]), 1e-9);
        }
    }
}

TEST(AssembleSystem, BorromeanShape) {
    TTSystem sys = assemble_system(load_diagram(data("borromean.json")));
    EXPECT_EQ(sys.variables, (std::vector<std::string>{"w1", "w2", "u1", "u2", "u3", "u4"}));
    EXPECT_EQ(sys.equations.size(), 9u);
    EXPECT_EQ(sys.side_conditions.size(), 4u);
}

// Products around one half of a thrice-punctured sphere, with the labels the
// labeling rules assign and u = 2w substituted.
TEST(ThricePuncturedSphere, ParallelProductIsScalar) {
    const MultiPoly w = var("w");
    const MultiPoly half(q(1, 2));
    Mat2 m = Mat2::crossing(w) * Mat2::edge(half) * Mat2::crossing(MultiPoly(q(-1, 4))) * Mat2::edge(half) *
             Mat2::crossing(w) * Mat2::edge(w.scaled(2), -1);
    // The product is +w/2 times the identity, i.e. -w/2 * I in PSL(2,C).
    EXPECT_EQ(m, scalar(w.scaled(q(1, 2))));
}

TEST(ThricePuncturedSphere, AntiparallelProductIsScalar) {
    const MultiPoly w = var("w");
    const MultiPoly half(q(1, 2));
    Mat2 m = Mat2::crossing(w) * Mat2::edge(half) * Mat2::crossing(MultiPoly(q(1, 4))) * Mat2::edge(half, -1) *
             Mat2::crossing(-w) * Mat2::edge(w.scaled(2), -1);
    EXPECT_EQ(m, scalar(w.scaled(q(-1, 2))));
}

TEST(ThricePuncturedSphere, LabeledFilesGiveTheSameProducts) {
    for (bool parallel : {true, false}) {
        FALDiagram d = apply_fal_labeling(load_diagram(data(parallel ? "tps_parallel.json" : "tps_antiparallel.json")));
        const MultiPoly w = var("wa");
        // The second half walks its edges the other way round, which
        // conjugates by diag(1, -1) and flips the overall sign.
        for (std::size_t k = 0; k < d.faces.size(); ++k) {
            Mat2 m = region_matrix(d.faces[k], 1).substitute("u", w.scaled(2));
            const long long s = (parallel ? 1 : -1) * (k == 0 ? 1 : -1);
            EXPECT_EQ(m, scalar(w.scaled(q(s, 2)))) << d.faces[k].id;
        }
        // Every face equation reduces to u = 2w.
        TTSystem sys = assemble_system(d);
        for (const auto& e : sys.equations)
            EXPECT_TRUE(e.substitute("u", w.scaled(2)).is_zero());
    }
}
