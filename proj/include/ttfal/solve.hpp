#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttfal/cusp.hpp"
#include "ttfal/eliminate.hpp"
#include "ttfal/labeling.hpp"

namespace ttfal {

struct FaceResidual {
    std::string face;
    double off_diagonal = 0.0;      ///< max(|e12|, |e21|)
    double diagonal_mismatch = 0.0; ///< |e11 - e22|
};

struct VerifyReport {
    std::vector<FaceResidual> faces;
    double max_residual = 0.0;
    bool pass = true;
};

/// Numeric region matrix of a face at an assignment.
inline std::array<ComplexF, 4> region_matrix_value(const Face& f, const Assignment& at) {
    std::array<ComplexF, 4> m{1.0, 0.0, 0.0, 1.0};
    for (const auto& e : f.entries) {
        ComplexF v = e.expr.eval(at);
        std::array<ComplexF, 4> t;
        if (e.kind == EntryKind::Crossing)
            t = {0.0, v, 1.0, 0.0};
        else
            t = {1.0, static_cast<double>(e.sign()) * v, 0.0, 1.0};
        m = {m[0] * t[0] + m[1] * t[2], m[0] * t[1] + m[1] * t[3], m[2] * t[0] + m[3] * t[2],
             m[2] * t[1] + m[3] * t[3]};
    }
    return m;
}

/// Every face's region matrix must be a scalar multiple of the identity.
inline VerifyReport verify_solution(const FALDiagram& d, const Assignment& at, double tol = 1e-9) {
    VerifyReport r;
    for (const auto& f : d.faces) {
        auto m = region_matrix_value(f, at);
        FaceResidual fr{f.id, std::max(std::abs(m[1]), std::abs(m[2])), std::abs(m[0] - m[3])};
        r.max_residual = std::max({r.max_residual, fr.off_diagonal, fr.diagonal_mismatch});
        r.faces.push_back(fr);
    }
    r.pass = r.max_residual <= tol;
    return r;
}

/// Values of all face labels plus the labels pinned by the labeling rules.
inline Assignment full_assignment(const FALDiagram& d, const EliminationResult& elim, ComplexF root,
                                  const RootOptions& opt = {}) {
    Assignment at = elim.assignment_at(root, opt);
    for (const auto& [v, e] : d.fixed)
        at[v] = e.eval(at);
    return at;
}

struct RootInfo {
    ComplexF value;
    bool assignable = false;  ///< back-substitution succeeded
    Assignment assignment;
    double residual = 0.0;    ///< max |equation| over the system
    bool side_ok = false;
    std::vector<CuspShapeResult> cusps;
    bool cusps_positive = false;
    bool qualifies = false;
    std::optional<double> reference_deviation;
    std::string note;
};

struct SolutionReport {
    std::vector<RootInfo> roots;
    std::optional<std::size_t> geometric_index;
    bool ambiguous = false;
    std::vector<std::string> warnings;
};

using Reference = std::map<std::string, ComplexF>;

/// Residuals, side conditions and cusp shapes for every root. Roots whose
/// residual exceeds `prune_tol` are treated as spurious.
inline SolutionReport evaluate_roots(const FALDiagram& d, const TTSystem& sys, const EliminationResult& elim,
                                     const std::vector<ComplexF>& roots, const RootOptions& opt = {},
                                     double prune_tol = 1e-6) {
    SolutionReport rep;
    for (const auto& z : roots) {
        RootInfo info;
        info.value = z;
        try {
            info.assignment = full_assignment(d, elim, z, opt);
            info.assignable = true;
        } catch (const Error& e) {
            info.note = e.what();
            rep.roots.push_back(std::move(info));
            continue;
        }
        for (const auto& e : sys.equations)
            info.residual = std::max(info.residual, std::abs(e.eval(info.assignment)));
        info.side_ok = true;
        for (const auto* list : {&sys.side_conditions, &elim.side_conditions})
            for (const auto& s : *list)
                if (std::abs(s.eval(info.assignment)) <= 1e-9)
                    info.side_ok = false;
        try {
            info.cusps = cusp_shapes(d, info.assignment);
            info.cusps_positive = std::all_of(info.cusps.begin(), info.cusps.end(),
                                              [](const CuspShapeResult& c) { return c.shape.imag() > 0.0; });
        } catch (const Error& e) {
            info.note = e.what();
        }
        if (!info.side_ok)
            info.note = "violates a side condition";
        else if (info.residual > prune_tol)
            info.note = "spurious: residual too large";
        info.qualifies = info.side_ok && info.residual <= prune_tol && info.cusps_positive;
        rep.roots.push_back(std::move(info));
    }
    return rep;
}

/// Pick the geometric root. Without a reference it is the unique qualifying
/// root (the first in canonical order when several qualify, flagged
/// ambiguous). With a reference, the qualifying root closest to it in the
/// max-over-cusps sense, which must lie within ref_tol.
inline std::size_t select_geometric(SolutionReport& rep, const std::optional<Reference>& reference = std::nullopt,
                                    double ref_tol = 1e-6) {
    std::vector<std::size_t> ok;
    for (std::size_t k = 0; k < rep.roots.size(); ++k)
        if (rep.roots[k].qualifies)
            ok.push_back(k);
    if (ok.empty())
        throw NoGeometricRoot("no root has all cusp shapes in the upper half plane");

    if (reference) {
        std::optional<std::size_t> best;
        for (auto k : ok) {
            double dev = 0.0;
            for (const auto& [id, want] : *reference) {
                auto& cs = rep.roots[k].cusps;
                auto it = std::find_if(cs.begin(), cs.end(), [&](const CuspShapeResult& c) { return c.id == id; });
                if (it == cs.end())
                    throw ParseError("reference names unknown cusp '" + id + "'");
                dev = std::max(dev, std::abs(it->shape - want));
            }
            rep.roots[k].reference_deviation = dev;
            if (!best || dev < *rep.roots[*best].reference_deviation)
                best = k;
        }
        if (*rep.roots[*best].reference_deviation > ref_tol)
            throw NoGeometricRoot("no root matches the reference cusp shapes within tolerance");
        rep.geometric_index = best;
        return *best;
    }

    if (ok.size() > 1) {
        rep.ambiguous = true;
        rep.warnings.push_back("AmbiguousGeometric: " + std::to_string(ok.size()) +
                               " roots qualify; the first in canonical order was chosen");
    }
    rep.geometric_index = ok.front();
    return ok.front();
}

/// Default elimination target: the first circle's omega, else the first
/// variable found on a crossing.
inline std::string default_target(const FALDiagram& d) {
    const auto used = d.face_variables();
    for (const auto& c : d.circles)
        if (used.count(c.omega))
            return c.omega;
    for (const auto& f : d.faces)
        for (const auto& e : f.entries)
            if (e.kind == EntryKind::Crossing && !e.expr.linear.empty())
                return e.expr.linear.begin()->first;
    if (!used.empty())
        return *used.begin();
    throw EliminationError(EliminationError::Kind::Stuck, "diagram has no variables");
}

struct PipelineOptions {
    std::optional<std::string> target;
    double tol = 1e-9;
    std::optional<Reference> reference;
    std::optional<std::size_t> root_index;
    int max_iters = 500;
};

struct PipelineResult {
    FALDiagram diagram; ///< after labeling
    TTSystem system;
    EliminationResult elimination;
    SolutionReport report;
    std::size_t chosen = 0;
    VerifyReport verify;
};

/// labeling -> equations -> elimination -> roots -> selection -> verification.
inline PipelineResult run_pipeline(const FALDiagram& input, const PipelineOptions& opt = {}) {
    PipelineResult r;
    r.diagram = input.generic ? input : apply_fal_labeling(input);
    r.system = assemble_system(r.diagram);
    const std::string target = opt.target ? *opt.target : default_target(r.diagram);
    r.elimination = eliminate(r.system, target);

    const RootOptions ro{1e-12, opt.max_iters};
    std::vector<ComplexF> roots = find_roots(r.elimination.tt_poly, ro);
    if (r.elimination.tt_poly.has_real_coefficients())
        roots = symmetrize_conjugates(std::move(roots));
    r.report = evaluate_roots(r.diagram, r.system, r.elimination, roots, ro);
    for (const auto& w : r.elimination.warnings)
        r.report.warnings.push_back(w);

    if (opt.root_index) {
        if (*opt.root_index >= r.report.roots.size())
            throw ParseError("root index " + std::to_string(*opt.root_index) + " out of range");
        if (!r.report.roots[*opt.root_index].assignable)
            throw Error("root " + std::to_string(*opt.root_index) + " cannot be back-substituted");
        r.chosen = *opt.root_index;
        try {
            select_geometric(r.report, opt.reference);
        } catch (const NoGeometricRoot&) {
        }
    } else {
        r.chosen = select_geometric(r.report, opt.reference);
    }
    r.verify = verify_solution(r.diagram, r.report.roots[r.chosen].assignment, opt.tol);
    return r;
}

} // namespace ttfal
