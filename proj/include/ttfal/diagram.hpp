#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ttfal/multi_poly.hpp"

namespace ttfal {

/// Affine label c + sum(a_v * v). Every label drawn on a diagram has this form.
struct LabelExpr {
    GaussianRational constant;
    std::map<std::string, GaussianRational> linear; ///< no zero coefficients

    LabelExpr() = default;
    LabelExpr(GaussianRational c) : constant(std::move(c)) {} // NOLINT(google-explicit-constructor)
    LabelExpr(long long c) : constant(c) {}                   // NOLINT

    static LabelExpr var(const std::string& name, GaussianRational coeff = GaussianRational(1)) {
        LabelExpr e;
        if (!coeff.is_zero())
            e.linear.emplace(name, std::move(coeff));
        return e;
    }

    bool is_constant() const { return linear.empty(); }
    bool mentions(const std::string& v) const { return linear.count(v) != 0; }

    LabelExpr operator-() const {
        LabelExpr e = *this;
        e.constant = -e.constant;
        for (auto& [v, c] : e.linear)
            c = -c;
        return e;
    }
    friend LabelExpr operator+(LabelExpr a, const LabelExpr& b) {
        a.constant += b.constant;
        for (const auto& [v, c] : b.linear) {
            auto& slot = a.linear[v];
            slot += c;
            if (slot.is_zero())
                a.linear.erase(v);
        }
        return a;
    }
    LabelExpr scaled(const GaussianRational& s) const {
        if (s.is_zero())
            return {};
        LabelExpr e = *this;
        e.constant *= s;
        for (auto& [v, c] : e.linear)
            c *= s;
        return e;
    }

    /// Replace variable v by an affine expression; the result stays affine.
    LabelExpr substitute(const std::string& v, const LabelExpr& r) const {
        auto it = linear.find(v);
        if (it == linear.end())
            return *this;
        LabelExpr rest = *this;
        GaussianRational k = it->second;
        rest.linear.erase(v);
        return rest + r.scaled(k);
    }

    MultiPoly to_poly() const {
        MultiPoly p(constant);
        for (const auto& [v, c] : linear)
            p += MultiPoly::variable(v).scaled(c);
        return p;
    }

    ComplexF eval(const Assignment& at) const { return to_poly().eval(at); }

    std::string to_string() const { return to_poly().to_string(); }

    friend bool operator==(const LabelExpr&, const LabelExpr&) = default;
};

enum class EntryKind { Edge, Crossing };

/// Orientation of an edge relative to the direction of travel around a face.
enum class Direction { With, Against };

struct FaceEntry {
    EntryKind kind = EntryKind::Edge;
    LabelExpr expr;
    Direction direction = Direction::With; ///< meaningful for edges only

    static FaceEntry edge(LabelExpr e, Direction d = Direction::With) { return {EntryKind::Edge, std::move(e), d}; }
    static FaceEntry crossing(LabelExpr e) { return {EntryKind::Crossing, std::move(e), Direction::With}; }

    int sign() const { return direction == Direction::With ? 1 : -1; }

    friend bool operator==(const FaceEntry&, const FaceEntry&) = default;
};

/// A region of the diagram: the cyclic alternating sequence of edge and
/// crossing labels met when travelling around its boundary.
struct Face {
    std::string id;
    std::vector<FaceEntry> entries;

    std::size_t sides() const {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                      [](const FaceEntry& e) { return e.kind == EntryKind::Crossing; }));
    }

    friend bool operator==(const Face&, const Face&) = default;
};

enum class HalfTwist { None, Right, Left };
enum class Strands { Parallel, Antiparallel };

/// Raw labels attached to one crossing circle before the FAL labeling rules
/// are applied. bigon_a and bigon_b each hold the two crossing labels that
/// share a bigon; the pairs sit on opposite sides of the circle. sphere lists
/// the crossing label of the projection-plane geodesic inside the thrice
/// punctured sphere, meridians the arcs of the circle itself and half_edges
/// the two halves of the strands' longitudes on the cusp torus.
struct CircleSlots {
    std::vector<std::string> bigon_a;
    std::vector<std::string> bigon_b;
    std::vector<std::string> sphere;
    std::vector<std::string> meridians;
    std::vector<std::string> half_edges;

    bool empty() const {
        return bigon_a.empty() && bigon_b.empty() && sphere.empty() && meridians.empty() && half_edges.empty();
    }
    std::vector<std::string> crossing_vars() const {
        std::vector<std::string> out = bigon_a;
        out.insert(out.end(), bigon_b.begin(), bigon_b.end());
        out.insert(out.end(), sphere.begin(), sphere.end());
        return out;
    }
    std::vector<std::string> all_vars() const {
        std::vector<std::string> out = crossing_vars();
        out.insert(out.end(), meridians.begin(), meridians.end());
        out.insert(out.end(), half_edges.begin(), half_edges.end());
        return out;
    }

    friend bool operator==(const CircleSlots&, const CircleSlots&) = default;
};

struct CrossingCircle {
    std::string id;
    std::string omega;
    HalfTwist half_twist = HalfTwist::None;
    Strands strands = Strands::Parallel;
    CircleSlots slots;

    friend bool operator==(const CrossingCircle&, const CrossingCircle&) = default;
};

/// A link component lying in the projection plane. Its longitude is the
/// signed sum of edge labels plus a shear of -k/2 * shear_sign, where k counts
/// the half-twist passages.
struct ProjectionComponent {
    std::string id;
    std::vector<std::pair<std::string, int>> edges;
    int half_twist_passes = 0;
    int shear_sign = 1;

    friend bool operator==(const ProjectionComponent&, const ProjectionComponent&) = default;
};

struct FALDiagram {
    bool generic = false; ///< true for diagrams that are not fully augmented
    std::vector<std::string> variables;
    std::vector<Face> faces;
    std::vector<CrossingCircle> circles;
    std::vector<ProjectionComponent> components;
    /// Labels pinned to constants or other labels by apply_fal_labeling.
    std::map<std::string, LabelExpr> fixed;

    bool declares(const std::string& v) const {
        return std::find(variables.begin(), variables.end(), v) != variables.end();
    }

    /// Variables referenced by any face entry.
    std::set<std::string> face_variables() const {
        std::set<std::string> out;
        for (const auto& f : faces)
            for (const auto& e : f.entries)
                for (const auto& [v, c] : e.expr.linear)
                    out.insert(v);
        return out;
    }

    friend bool operator==(const FALDiagram&, const FALDiagram&) = default;
};

// --- validation -----------------------------------------------------------

enum class Rule {
    EmptyDiagram,
    DuplicateId,
    NonAlternatingFace,
    FaceTooSmall,
    DanglingVariable,
    UnusedCircle,
    UnownedCrossingVariable,
    SharedCrossingVariable,
    BadComponent,
};

inline const char* rule_name(Rule r) {
    switch (r) {
    case Rule::EmptyDiagram: return "EmptyDiagram";
    case Rule::DuplicateId: return "DuplicateId";
    case Rule::NonAlternatingFace: return "NonAlternatingFace";
    case Rule::FaceTooSmall: return "FaceTooSmall";
    case Rule::DanglingVariable: return "DanglingVariable";
    case Rule::UnusedCircle: return "UnusedCircle";
    case Rule::UnownedCrossingVariable: return "UnownedCrossingVariable";
    case Rule::SharedCrossingVariable: return "SharedCrossingVariable";
    case Rule::BadComponent: return "BadComponent";
    }
    return "?";
}

struct Finding {
    Rule rule;
    std::string where; ///< face, circle or component id
    std::string message;
};

/// Structural checks. An empty result means the diagram is well formed.
inline std::vector<Finding> validate(const FALDiagram& d) {
    std::vector<Finding> out;
    auto add = [&](Rule r, const std::string& where, std::string msg) { out.push_back({r, where, std::move(msg)}); };

    if (d.faces.empty())
        add(Rule::EmptyDiagram, "", "diagram has no faces");

    std::set<std::string> ids;
    auto check_id = [&](const std::string& id) {
        if (!ids.insert(id).second)
            add(Rule::DuplicateId, id, "id '" + id + "' is used more than once");
    };

    for (const auto& f : d.faces) {
        check_id(f.id);
        const auto n = f.entries.size();
        if (f.sides() < 2 || n < 4)
            add(Rule::FaceTooSmall, f.id, "a face needs at least two crossings");
        bool alternating = n % 2 == 0;
        for (std::size_t k = 0; alternating && k < n; ++k)
            if (f.entries[k].kind == f.entries[(k + 1) % n].kind)
                alternating = false;
        if (!alternating)
            add(Rule::NonAlternatingFace, f.id, "entries must alternate edge, crossing, edge, ...");
        for (const auto& e : f.entries)
            for (const auto& [v, c] : e.expr.linear)
                if (!d.declares(v))
                    add(Rule::DanglingVariable, f.id, "undeclared variable '" + v + "'");
    }

    const auto used = d.face_variables();

    std::map<std::string, int> owners;
    for (const auto& c : d.circles) {
        check_id(c.id);
        if (!d.declares(c.omega))
            add(Rule::DanglingVariable, c.id, "undeclared omega variable '" + c.omega + "'");
        for (const auto& v : c.slots.all_vars())
            if (!d.declares(v))
                add(Rule::DanglingVariable, c.id, "undeclared slot variable '" + v + "'");
        bool appears = used.count(c.omega) != 0 || d.fixed.count(c.omega) != 0;
        for (const auto& v : c.slots.bigon_a)
            appears = appears || used.count(v) != 0;
        for (const auto& v : c.slots.bigon_b)
            appears = appears || used.count(v) != 0;
        if (!appears)
            add(Rule::UnusedCircle, c.id, "omega '" + c.omega + "' appears in no face");
        std::set<std::string> mine{c.omega};
        for (const auto& v : c.slots.crossing_vars())
            mine.insert(v);
        for (const auto& v : mine)
            ++owners[v];
    }

    if (!d.generic) {
        std::set<std::string> reported;
        for (const auto& f : d.faces)
            for (const auto& e : f.entries) {
                if (e.kind != EntryKind::Crossing)
                    continue;
                for (const auto& [v, c] : e.expr.linear) {
                    if (!reported.insert(v).second)
                        continue;
                    auto it = owners.find(v);
                    if (it == owners.end())
                        add(Rule::UnownedCrossingVariable, f.id,
                            "crossing variable '" + v + "' belongs to no crossing circle");
                    else if (it->second > 1)
                        add(Rule::SharedCrossingVariable, f.id,
                            "crossing variable '" + v + "' belongs to several crossing circles");
                }
            }
    }

    for (const auto& comp : d.components) {
        check_id(comp.id);
        if (comp.half_twist_passes < 0)
            add(Rule::BadComponent, comp.id, "half_twist_passes must be >= 0");
        if (comp.shear_sign != 1 && comp.shear_sign != -1)
            add(Rule::BadComponent, comp.id, "shear_sign must be +1 or -1");
        for (const auto& [v, s] : comp.edges) {
            if (s != 1 && s != -1)
                add(Rule::BadComponent, comp.id, "edge sign must be +1 or -1");
            if (!d.declares(v) || (used.count(v) == 0 && d.fixed.count(v) == 0))
                add(Rule::DanglingVariable, comp.id, "component references unknown edge variable '" + v + "'");
        }
    }
    return out;
}

} // namespace ttfal
