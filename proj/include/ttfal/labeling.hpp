#pragma once

#include <map>
#include <string>

#include "ttfal/diagram.hpp"

namespace ttfal {

namespace detail {

inline void pin(std::map<std::string, LabelExpr>& targets, const std::string& circle, const std::string& v,
                const LabelExpr& target) {
    auto [it, inserted] = targets.emplace(v, target);
    if (!inserted && !(it->second == target))
        throw LabelingError(LabelingError::Kind::ContradictoryIdentification,
                            "circle " + circle + ": label '" + v + "' would be both " + it->second.to_string() +
                                " and " + target.to_string());
}

} // namespace detail

/// Apply the crossing-circle labeling rules to every tagged circle:
///   bigon_a labels -> omega, bigon_b labels -> omega (parallel) or -omega
///   (antiparallel), sphere crossing -> -1/4 or +1/4, meridian arcs -> 1,
///   cusp-torus half edges -> 1/2.
/// Circles with no slots are taken as already labeled. The pinned values are
/// recorded in the diagram's fixed map; slots are kept so a second pass
/// finds nothing left to do.
inline FALDiagram apply_fal_labeling(const FALDiagram& d) {
    if (d.generic)
        throw LabelingError(LabelingError::Kind::GenericDiagram, "labeling rules apply only to FAL diagrams");

    std::map<std::string, LabelExpr> targets;
    for (const auto& c : d.circles) {
        const CircleSlots& s = c.slots;
        if (s.empty())
            continue;
        if (s.bigon_a.size() != 2 || s.bigon_b.size() != 2)
            throw LabelingError(LabelingError::Kind::UntaggedSlot,
                                "circle " + c.id + ": bigon_a and bigon_b must each tag two crossing labels");
        if (s.sphere.size() > 2)
            throw LabelingError(LabelingError::Kind::UntaggedSlot,
                                "circle " + c.id + ": at most one sphere crossing per hexagon half");

        const bool parallel = c.strands == Strands::Parallel;
        const LabelExpr w = LabelExpr::var(c.omega);
        for (const auto& v : s.bigon_a)
            if (v != c.omega)
                detail::pin(targets, c.id, v, w);
        for (const auto& v : s.bigon_b) {
            if (v == c.omega && !parallel)
                throw LabelingError(LabelingError::Kind::ContradictoryIdentification,
                                    "circle " + c.id + ": omega cannot sit on the negated bigon");
            if (v != c.omega)
                detail::pin(targets, c.id, v, parallel ? w : -w);
        }
        auto constant = [&](const std::vector<std::string>& vars, GaussianRational value) {
            for (const auto& v : vars) {
                if (v == c.omega)
                    throw LabelingError(LabelingError::Kind::ContradictoryIdentification,
                                        "circle " + c.id + ": omega cannot be pinned to a constant");
                detail::pin(targets, c.id, v, LabelExpr(value));
            }
        };
        constant(s.sphere, GaussianRational::fraction(parallel ? -1 : 1, 4));
        constant(s.meridians, GaussianRational(1));
        constant(s.half_edges, GaussianRational::fraction(1, 2));
    }

    // Circles may not pin each other's omega.
    for (const auto& c : d.circles)
        if (targets.count(c.omega) != 0 && !c.slots.empty())
            throw LabelingError(LabelingError::Kind::ContradictoryIdentification,
                                "omega '" + c.omega + "' of circle " + c.id + " is pinned by another circle");

    FALDiagram out = d;
    for (const auto& [v, t] : targets) {
        auto prev = out.fixed.find(v);
        if (prev != out.fixed.end() && !(prev->second == t))
            throw LabelingError(LabelingError::Kind::ContradictoryIdentification,
                                "label '" + v + "' was already pinned to " + prev->second.to_string());
        out.fixed[v] = t;
        for (auto& f : out.faces)
            for (auto& e : f.entries)
                e.expr = e.expr.substitute(v, t);
    }
    return out;
}

} // namespace ttfal
