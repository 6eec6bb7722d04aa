#pragma once

#include <string>
#include <vector>

#include "ttfal/diagram.hpp"
#include "ttfal/roots.hpp"

namespace ttfal {

enum class CuspFormula { NoTwist, RightTwist, LeftTwist, Projection, ProjectionSheared };

inline const char* formula_name(CuspFormula f) {
    switch (f) {
    case CuspFormula::NoTwist: return "no-twist";
    case CuspFormula::RightTwist: return "rh-twist";
    case CuspFormula::LeftTwist: return "lh-twist";
    case CuspFormula::Projection: return "projection";
    case CuspFormula::ProjectionSheared: return "projection-sheared";
    }
    return "?";
}

struct CuspShapeResult {
    std::string id;
    ComplexF shape;
    CuspFormula formula = CuspFormula::NoTwist;
};

/// 4w, 4w/(1+2w) with a right-handed half twist, 4w/(1-2w) with a left-handed one.
inline ComplexF cusp_shape_circle(ComplexF w, HalfTwist twist) {
    const ComplexF four_w = 4.0 * w;
    if (twist == HalfTwist::None)
        return four_w;
    const ComplexF den = twist == HalfTwist::Right ? 1.0 + 2.0 * w : 1.0 - 2.0 * w;
    if (std::abs(den) < 1e-12)
        throw DivisionByZero("half-twist cusp formula has a vanishing denominator");
    return four_w / den;
}

/// Signed sum of the component's edge labels, sheared by -k/2 * s.
inline ComplexF cusp_shape_projection(const ProjectionComponent& c, const Assignment& at) {
    ComplexF sum(0.0, 0.0);
    for (const auto& [v, sign] : c.edges) {
        auto it = at.find(v);
        if (it == at.end())
            throw MissingVariable(v);
        sum += static_cast<double>(sign) * it->second;
    }
    return sum - 0.5 * static_cast<double>(c.half_twist_passes) * static_cast<double>(c.shear_sign);
}

/// Shapes of every cusp: crossing circles first, then projection components.
inline std::vector<CuspShapeResult> cusp_shapes(const FALDiagram& d, const Assignment& at) {
    std::vector<CuspShapeResult> out;
    for (const auto& c : d.circles) {
        auto it = at.find(c.omega);
        if (it == at.end())
            throw MissingVariable(c.omega);
        CuspFormula f = c.half_twist == HalfTwist::None    ? CuspFormula::NoTwist
                        : c.half_twist == HalfTwist::Right ? CuspFormula::RightTwist
                                                           : CuspFormula::LeftTwist;
        out.push_back({c.id, cusp_shape_circle(it->second, c.half_twist), f});
    }
    for (const auto& c : d.components)
        out.push_back({c.id, cusp_shape_projection(c, at),
                       c.half_twist_passes == 0 ? CuspFormula::Projection : CuspFormula::ProjectionSheared});
    return out;
}

struct FieldCheck {
    bool root_proximity = false; ///< some root of the candidate lies within tol
    bool direct = false;         ///< |candidate(value)| <= tol
    bool member() const { return root_proximity || direct; }
};

/// Weak membership test: root proximity or near-vanishing evaluation only.
inline FieldCheck check_field_membership(ComplexF value, const UniPoly& candidate, double tol = 1e-9) {
    if (candidate.is_zero())
        throw Error("candidate polynomial is zero");
    FieldCheck fc;
    if (candidate.degree() >= 1) {
        for (const auto& r : find_roots(candidate))
            if (std::abs(r - value) <= tol)
                fc.root_proximity = true;
    }
    fc.direct = std::abs(candidate.eval(value)) <= tol;
    return fc;
}

} // namespace ttfal
