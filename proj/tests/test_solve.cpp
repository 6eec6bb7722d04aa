#include <gtest/gtest.h>

#include <random>

#include "ttfal/ttfal.hpp"

using namespace ttfal;

namespace {

std::string data(const std::string& name) { return std::string(TTFAL_DATA_DIR) + "/diagrams/" + name; }

GaussianRational q(long long a, long long b) { return GaussianRational::fraction(a, b); }

TTSystem system_of(const std::string& name) { return assemble_system(apply_fal_labeling(load_diagram(data(name)))); }

const ComplexF I(0.0, 1.0);

} // namespace

TEST(Eliminate, BorromeanTargetU1) {
    EliminationResult r = eliminate(system_of("borromean.json"), "u1");
    EXPECT_TRUE(equal_up_to_unit(r.tt_poly, UniPoly::from_integers({1, 0, 4}, "u1")));
    EXPECT_FALSE(r.used_resultants);
    for (ComplexF u1 : {-0.5 * I, 0.5 * I}) {
        Assignment at = r.assignment_at(u1);
        EXPECT_LT(std::abs(at.at("w1") + u1), 1e-15);
        EXPECT_LT(std::abs(at.at("w2") + u1), 1e-15);
    }
}

TEST(Eliminate, HamantashTargetW1) {
    EliminationResult r = eliminate(assemble_system(load_diagram(data("hamantash.json"))), "w1");
    EXPECT_TRUE(equal_up_to_unit(r.tt_poly, UniPoly::from_integers({1, -3, 4}, "w1")));
    EXPECT_EQ(format_integer_form(primitive_form(r.tt_poly), "x", true), "4*x^2-3*x+1");
}

TEST(Eliminate, Fal41TargetW1) {
    EliminationResult r = eliminate(system_of("fal41.json"), "w1");
    auto roots = find_roots(r.tt_poly);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_LT(std::abs(roots[0] + std::sqrt(2.0) / 4 * I), 1e-12);
    EXPECT_LT(std::abs(roots[1] - std::sqrt(2.0) / 4 * I), 1e-12);
}

TEST(Eliminate, BackSubstitutionSatisfiesSystem) {
    for (auto name : {"borromean.json", "fal41.json", "3-pretzel.json", "3-pretzel-ht.json"}) {
        SCOPED_TRACE(name);
        TTSystem sys = system_of(name);
        EliminationResult r = eliminate(sys, sys.variables.front());
        for (const auto& z : find_roots(r.tt_poly)) {
            Assignment at = r.assignment_at(z);
            for (const auto& e : sys.equations)
                EXPECT_LT(std::abs(e.eval(at)), 1e-9);
        }
    }
}

TEST(Eliminate, Inconsistent) {
    TTSystem sys;
    sys.variables = {"x", "y"};
    sys.equations = {var("x") - var("y"), var("x") - var("y") - MultiPoly(1)};
    try {
        eliminate(sys, "x");
        FAIL();
    } catch (const EliminationError& e) {
        EXPECT_EQ(e.kind(), EliminationError::Kind::Inconsistent);
    }
}

TEST(Eliminate, StuckOnMissingTargetOrFreeVariables) {
    TTSystem sys;
    sys.variables = {"x", "y"};
    sys.equations = {var("x") - var("y")};
    try {
        eliminate(sys, "x");
        FAIL();
    } catch (const EliminationError& e) {
        EXPECT_EQ(e.kind(), EliminationError::Kind::Stuck);
    }
    try {
        eliminate(sys, "z");
        FAIL();
    } catch (const EliminationError& e) {
        EXPECT_EQ(e.kind(), EliminationError::Kind::Stuck);
    }
}

TEST(Eliminate, ResultantFallback) {
    // y only occurs squared: x^2 + y^2 - 1, y^2 - x.
    TTSystem sys;
    sys.variables = {"x", "y"};
    sys.equations = {var("x") * var("x") + var("y") * var("y") - MultiPoly(1), var("y") * var("y") - var("x")};
    EliminationResult r = eliminate(sys, "x");
    EXPECT_TRUE(r.used_resultants);
    EXPECT_FALSE(r.warnings.empty());
    // Res_y = (x^2 + x - 1)^2
    EXPECT_TRUE(equal_up_to_unit(r.tt_poly, UniPoly::from_integers({-1, 1, 1}, "x")));
    for (const auto& z : find_roots(r.tt_poly)) {
        Assignment at = r.assignment_at(z);
        for (const auto& e : sys.equations)
            EXPECT_LT(std::abs(e.eval(at)), 1e-9);
    }
}

TEST(Eliminate, SquarefreeReductionRecordsDrop) {
    TTSystem sys;
    sys.variables = {"x"};
    sys.equations = {(var("x") * var("x") + MultiPoly(q(1, 4))).pow(2)};
    EliminationResult r = eliminate(sys, "x");
    EXPECT_EQ(r.tt_poly.degree(), 2);
    EXPECT_EQ(r.multiplicity_drop, 2);
}

TEST(Eliminate, SideConditionsAreSaturatedAway) {
    // x*(4x^2+1) with x != 0 leaves 4x^2+1.
    TTSystem sys;
    sys.variables = {"x"};
    sys.equations = {var("x") * (var("x") * var("x") * MultiPoly(4) + MultiPoly(1))};
    sys.side_conditions = {var("x")};
    EliminationResult r = eliminate(sys, "x");
    EXPECT_TRUE(equal_up_to_unit(r.tt_poly, UniPoly::from_integers({1, 0, 4}, "x")));
}

TEST(Roots, SpecPolynomials) {
    auto r = find_roots(UniPoly::from_integers({1, 0, 4}));
    EXPECT_LT(std::abs(r[0] + 0.5 * I), 1e-12);
    EXPECT_LT(std::abs(r[1] - 0.5 * I), 1e-12);
    auto c6 = find_roots(UniPoly::from_integers({0, 3, 0, 16, 0, 16}));
    std::vector<ComplexF> want{-std::sqrt(3.0) / 2 * I, -0.5 * I, 0.0, 0.5 * I, std::sqrt(3.0) / 2 * I};
    ASSERT_EQ(c6.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
        EXPECT_LT(std::abs(c6[k] - want[k]), 1e-12);
}

TEST(Roots, RandomProductRoundTrip) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(-40, 40);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<GaussianRational> rs;
        while (rs.size() < 7) {
            GaussianRational c(Rational(pick(rng), 8), Rational(pick(rng), 8));
            bool separated = std::all_of(rs.begin(), rs.end(),
                                         [&](const GaussianRational& o) { return std::abs((o - c).to_complex()) > 0.2; });
            if (separated)
                rs.push_back(c);
        }
        UniPoly p = UniPoly::from_integers({1});
        for (const auto& c : rs)
            p = p * UniPoly({-c, 1});
        auto found = find_roots(p);
        for (const auto& c : rs) {
            double best = 1e9;
            for (const auto& z : found)
                best = std::min(best, std::abs(z - c.to_complex()));
            EXPECT_LT(best, 1e-9);
        }
    }
}

TEST(Select, BorromeanPicksPositiveCusp) {
    PipelineResult r = run_pipeline(load_diagram(data("borromean.json")), {"u1"});
    const RootInfo& g = r.report.roots[r.chosen];
    EXPECT_LT(std::abs(g.value + 0.5 * I), 1e-12);
    EXPECT_LT(std::abs(g.assignment.at("w1") - 0.5 * I), 1e-12);
    EXPECT_FALSE(r.report.ambiguous);
    for (const auto& ri : r.report.roots)
        if (&ri != &g) {
            EXPECT_FALSE(ri.cusps_positive);
            EXPECT_LT(ri.cusps.front().shape.imag(), 0.0);
        }
}

TEST(Select, HamantashWithReference) {
    PipelineOptions opt;
    opt.target = "w1";
    opt.reference = Reference{{"red", {1.5, 1.32287565553}}};
    PipelineResult r = run_pipeline(load_diagram(data("hamantash.json")), opt);
    const ComplexF w = r.report.roots[r.chosen].value;
    EXPECT_LT(std::abs(w - ComplexF(0.375, std::sqrt(7.0) / 8)), 1e-12);
    EXPECT_LE(*r.report.roots[r.chosen].reference_deviation, 1e-6);
}

TEST(Select, ReferenceErrors) {
    PipelineOptions opt;
    opt.reference = Reference{{"nope", {0.0, 1.0}}};
    EXPECT_THROW(run_pipeline(load_diagram(data("hamantash.json")), opt), ParseError);
    opt.reference = Reference{{"red", {1.5, 1.4}}};
    EXPECT_THROW(run_pipeline(load_diagram(data("hamantash.json")), opt), NoGeometricRoot);
}

TEST(Select, SingleRoot) {
    SolutionReport rep;
    RootInfo ri;
    ri.qualifies = true;
    rep.roots.push_back(ri);
    EXPECT_EQ(select_geometric(rep), 0u);
    EXPECT_FALSE(rep.ambiguous);
}

TEST(Select, AmbiguousAndNone) {
    SolutionReport rep;
    RootInfo ri;
    ri.qualifies = true;
    rep.roots = {ri, ri};
    EXPECT_EQ(select_geometric(rep), 0u);
    EXPECT_TRUE(rep.ambiguous);
    ASSERT_EQ(rep.warnings.size(), 1u);
    EXPECT_EQ(rep.warnings[0].rfind("AmbiguousGeometric", 0), 0u);

    SolutionReport none;
    none.roots = {RootInfo{}};
    EXPECT_THROW(select_geometric(none), NoGeometricRoot);
}

TEST(Select, NegatedCircleHasNoGeometricRoot) {
    // Mirror image: every cusp shape flips to the lower half plane for the
    // root that makes the projection component positive.
    FALDiagram d = load_diagram(data("borromean.json"));
    d.components[0].edges = {{"u1", 1}, {"u2", 1}, {"u3", 1}, {"u4", 1}};
    EXPECT_THROW(run_pipeline(d), NoGeometricRoot);
}

TEST(Select, RootIndexOverride) {
    PipelineOptions opt;
    opt.root_index = 0;
    PipelineResult r = run_pipeline(load_diagram(data("3-pretzel.json")), opt);
    EXPECT_EQ(r.chosen, 0u);
    EXPECT_EQ(r.report.geometric_index, std::optional<std::size_t>(1));
    EXPECT_TRUE(r.verify.pass);
    opt.root_index = 7;
    EXPECT_THROW(run_pipeline(load_diagram(data("3-pretzel.json")), opt), ParseError);
}

TEST(Verify, BorromeanPassAndBrokenAssignment) {
    FALDiagram d = load_diagram(data("borromean.json"));
    Assignment at{{"w1", 0.5 * I}, {"w2", 0.5 * I}, {"u1", -0.5 * I}, {"u2", -0.5 * I}, {"u3", -0.5 * I}, {"u4", -0.5 * I}};
    EXPECT_TRUE(verify_solution(d, at, 1e-10).pass);
    at["u1"] = -at["u1"];
    VerifyReport rep = verify_solution(d, at, 1e-10);
    EXPECT_FALSE(rep.pass);
    EXPECT_GT(rep.faces[0].off_diagonal + rep.faces[0].diagonal_mismatch, 1e-3);
    EXPECT_LT(rep.faces[1].off_diagonal, 1e-12);
}

TEST(Verify, ThreePretzelStatedValues) {
    FALDiagram d = load_diagram(data("3-pretzel.json"));
    Assignment at;
    for (int k = 1; k <= 6; ++k)
        at["u" + std::to_string(k)] = 0.5 * I;
    for (int k = 1; k <= 3; ++k)
        at["w" + std::to_string(k)] = 0.25 * I;
    EXPECT_TRUE(verify_solution(d, at).pass);
}

TEST(Pipeline, RootSetsConjugateClosed) {
    for (auto name : {"borromean.json", "hamantash.json", "fal41.json", "3-pretzel.json", "3-pretzel-ht.json"}) {
        SCOPED_TRACE(name);
        PipelineResult r = run_pipeline(load_diagram(data(name)));
        ASSERT_TRUE(r.elimination.tt_poly.has_real_coefficients());
        for (const auto& a : r.report.roots) {
            bool found = std::any_of(r.report.roots.begin(), r.report.roots.end(), [&](const RootInfo& b) {
                return std::abs(b.value - std::conj(a.value)) < 1e-9;
            });
            EXPECT_TRUE(found);
        }
    }
}

TEST(Pipeline, DefaultTarget) {
    EXPECT_EQ(default_target(load_diagram(data("borromean-ht.json"))), "w2");
    EXPECT_EQ(default_target(load_diagram(data("hamantash.json"))), "w1");
}
