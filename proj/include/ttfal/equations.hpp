#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttfal/diagram.hpp"
#include "ttfal/mat2.hpp"

namespace ttfal {

/// xi = sign * numerator / (prev * next): the shape parameter at one crossing
/// of a face, prev and next being the edge labels on either side of it.
struct ShapeParam {
    LabelExpr numerator;
    LabelExpr prev;
    LabelExpr next;
    int sign = 1;

    ComplexF eval(const Assignment& at) const {
        return static_cast<double>(sign) * numerator.eval(at) / (prev.eval(at) * next.eval(at));
    }
};

/// The sign is positive when the two edges point the same way relative to
/// the crossing (both toward it or both away), i.e. when they have opposite
/// orientations with respect to the direction of travel.
inline std::vector<ShapeParam> shape_params(const Face& f) {
    std::vector<ShapeParam> out;
    const std::size_t n = f.entries.size();
    for (std::size_t k = 0; k < n; ++k) {
        const FaceEntry& e = f.entries[k];
        if (e.kind != EntryKind::Crossing)
            continue;
        const FaceEntry& p = f.entries[(k + n - 1) % n];
        const FaceEntry& q = f.entries[(k + 1) % n];
        if (p.kind != EntryKind::Edge || q.kind != EntryKind::Edge)
            throw DegenerateFace("face " + f.id + ": crossing entries must be flanked by edges");
        out.push_back({e.expr, p.expr, q.expr, -p.sign() * q.sign()});
    }
    return out;
}

/// Product of the entry matrices around the face, starting at entry `start`:
/// [0 w; 1 0] for a crossing w and [1 eps*u; 0 1] for an edge u.
inline Mat2 region_matrix(const Face& f, std::size_t start = 0) {
    Mat2 m;
    const std::size_t n = f.entries.size();
    for (std::size_t k = 0; k < n; ++k) {
        const FaceEntry& e = f.entries[(start + k) % n];
        m *= e.kind == EntryKind::Crossing ? Mat2::crossing(e.expr.to_poly()) : Mat2::edge(e.expr.to_poly(), e.sign());
    }
    return m;
}

namespace detail {

/// e = scale * factor, with factor monic in its first variable (or 1).
struct AffineSplit {
    GaussianRational scale;
    LabelExpr factor;
    std::string key;
};

inline AffineSplit split_affine(const LabelExpr& e) {
    if (e.is_constant())
        return {e.constant, LabelExpr(1), ""};
    GaussianRational lead = e.linear.begin()->second;
    LabelExpr f = e.scaled(GaussianRational(1) / lead);
    return {lead, f, f.to_string()};
}

/// A rational function N / prod(factors), factors counted with multiplicity.
struct Fraction {
    MultiPoly numerator;
    std::map<std::string, std::pair<LabelExpr, int>> factors;
};

inline Fraction shape_fraction(const Face& f, const ShapeParam& s) {
    Fraction fr;
    GaussianRational scale(s.sign);
    for (const LabelExpr* edge : {&s.prev, &s.next}) {
        if (edge->is_constant() && edge->constant.is_zero())
            throw DegenerateFace("face " + f.id + ": zero edge label next to crossing " + s.numerator.to_string());
        AffineSplit sp = split_affine(*edge);
        scale = scale / sp.scale;
        if (!sp.key.empty()) {
            auto& slot = fr.factors[sp.key];
            slot.first = sp.factor;
            ++slot.second;
        }
    }
    fr.numerator = s.numerator.to_poly().scaled(scale);
    return fr;
}

inline MultiPoly product(const std::map<std::string, std::pair<LabelExpr, int>>& fs) {
    MultiPoly p(1);
    for (const auto& [k, fe] : fs)
        p *= fe.first.to_poly().pow(static_cast<std::uint32_t>(fe.second));
    return p;
}

/// Sum of fractions minus `rhs`, multiplied through by the lcm of denominators.
inline MultiPoly cleared_sum(const std::vector<Fraction>& parts, const GaussianRational& rhs,
                             std::map<std::string, LabelExpr>& sides) {
    std::map<std::string, std::pair<LabelExpr, int>> lcm;
    for (const auto& p : parts)
        for (const auto& [k, fe] : p.factors) {
            auto& slot = lcm[k];
            slot.first = fe.first;
            slot.second = std::max(slot.second, fe.second);
            sides.emplace(k, fe.first);
        }
    MultiPoly sum = -product(lcm).scaled(rhs);
    for (const auto& p : parts) {
        auto rest = lcm;
        for (const auto& [k, fe] : p.factors)
            rest[k].second -= fe.second;
        sum += p.numerator * product(rest);
    }
    return sum;
}

} // namespace detail

/// Equations of one face, cleared of denominators. Non-constant edge factors
/// that were cleared are appended to `side_conditions` (each must be nonzero).
inline std::vector<MultiPoly> face_equations(const Face& f, std::vector<MultiPoly>* side_conditions = nullptr) {
    const std::size_t n = f.sides();
    if (n < 3)
        throw DegenerateFace("face " + f.id + " has " + std::to_string(n) + " sides; bigons must be collapsed");
    if (f.entries.size() != 2 * n)
        throw DegenerateFace("face " + f.id + " does not alternate edges and crossings");

    const auto params = shape_params(f);
    std::vector<detail::Fraction> fr;
    fr.reserve(params.size());
    for (const auto& s : params)
        fr.push_back(detail::shape_fraction(f, s));

    std::map<std::string, LabelExpr> sides;
    std::vector<MultiPoly> eqs;
    if (n == 3) {
        for (const auto& x : fr)
            eqs.push_back(detail::cleared_sum({x}, GaussianRational(1), sides));
    } else if (n == 4) {
        for (std::size_t k = 0; k < 4; ++k)
            eqs.push_back(detail::cleared_sum({fr[k], fr[(k + 1) % 4]}, GaussianRational(1), sides));
    } else {
        Mat2 m = region_matrix(f);
        eqs = {m.e12, m.e21, m.e11 - m.e22};
        for (const auto& x : fr)
            for (const auto& [k, fe] : x.factors)
                sides.emplace(k, fe.first);
    }
    if (side_conditions)
        for (const auto& [k, e] : sides)
            side_conditions->push_back(e.to_poly());
    return eqs;
}

/// Polynomial system: equations (each = 0), side conditions (each != 0) and
/// the substitutions already performed.
struct TTSystem {
    std::vector<std::string> variables;
    std::vector<MultiPoly> equations;
    std::vector<MultiPoly> side_conditions;
    std::vector<std::pair<std::string, MultiPoly>> substitution_chain;
};

inline void add_side_condition(std::vector<MultiPoly>& sides, const MultiPoly& s) {
    if (s.is_constant())
        return;
    for (const auto& t : sides)
        if (t == s || t == -s)
            return;
    sides.push_back(s);
}

inline TTSystem assemble_system(const FALDiagram& d) {
    TTSystem sys;
    const auto used = d.face_variables();
    for (const auto& v : d.variables)
        if (used.count(v))
            sys.variables.push_back(v);
    for (const auto& v : used)
        if (!d.declares(v))
            sys.variables.push_back(v);
    for (const auto& f : d.faces) {
        std::vector<MultiPoly> sides;
        for (auto& e : face_equations(f, &sides))
            if (!e.is_zero())
                sys.equations.push_back(e.with_registry(MultiPoly::merged_registry(sys.variables, e.registry())));
        for (const auto& s : sides)
            add_side_condition(sys.side_conditions, s);
    }
    return sys;
}

} // namespace ttfal
