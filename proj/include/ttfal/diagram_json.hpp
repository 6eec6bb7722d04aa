#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ttfal/diagram.hpp"

namespace ttfal {

namespace detail {

using json = nlohmann::ordered_json;

inline long long as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + ": expected an integer");
    return j.get<long long>();
}

/// [num, den] or [num, den, num_i, den_i].
inline GaussianRational parse_number(const json& j, const std::string& what) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 4))
        throw ParseError(what + ": expected [num, den, num_i, den_i]");
    auto part = [&](std::size_t k) {
        long long n = as_int(j[k], what);
        long long d = as_int(j[k + 1], what);
        if (d == 0)
            throw ParseError(what + ": zero denominator");
        return Rational(n, d);
    };
    return j.size() == 2 ? GaussianRational(part(0)) : GaussianRational(part(0), part(2));
}

inline json dump_number(const GaussianRational& g) {
    namespace mp = boost::multiprecision;
    auto to_ll = [](const BigInt& b) {
        if (b > std::numeric_limits<long long>::max() || b < std::numeric_limits<long long>::min())
            throw Error("rational component does not fit the JSON integer range");
        return b.convert_to<long long>();
    };
    return json::array({to_ll(mp::numerator(g.re())), to_ll(mp::denominator(g.re())),
                        to_ll(mp::numerator(g.im())), to_ll(mp::denominator(g.im()))});
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string())
        throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string())
            throw ParseError(where + ": expected a list of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline LabelExpr parse_expr(const json& j, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expr must be an object");
    LabelExpr e;
    if (auto it = j.find("const"); it != j.end())
        e.constant = parse_number(*it, where + " const");
    if (auto it = j.find("terms"); it != j.end()) {
        if (!it->is_object())
            throw ParseError(where + ": terms must be an object");
        for (const auto& [v, c] : it->items()) {
            GaussianRational g = parse_number(c, where + " term '" + v + "'");
            if (!g.is_zero())
                e.linear[v] = g;
        }
    }
    return e;
}

inline json dump_expr(const LabelExpr& e) {
    json terms = json::object();
    for (const auto& [v, c] : e.linear)
        terms[v] = dump_number(c);
    return json{{"const", dump_number(e.constant)}, {"terms", terms}};
}

inline const char* to_str(HalfTwist h) {
    return h == HalfTwist::None ? "none" : h == HalfTwist::Right ? "right" : "left";
}
inline const char* to_str(Strands s) { return s == Strands::Parallel ? "parallel" : "antiparallel"; }

} // namespace detail

/// Parse without running validation.
inline FALDiagram parse_diagram_unchecked(const std::string& text) {
    using detail::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("top level must be an object");

    FALDiagram d;
    if (auto it = root.find("generic"); it != root.end()) {
        if (!it->is_boolean())
            throw ParseError("'generic' must be a boolean");
        d.generic = it->get<bool>();
    }
    if (auto it = root.find("variables"); it != root.end())
        for (auto& v : detail::string_list(*it, "variables"))
            if (!d.declares(v))
                d.variables.push_back(std::move(v));

    const json& faces = detail::require(root, "faces", "diagram");
    if (!faces.is_array())
        throw ParseError("'faces' must be a list");
    for (const auto& jf : faces) {
        Face f;
        f.id = detail::require_string(jf, "id", "face");
        const json& entries = detail::require(jf, "entries", "face " + f.id);
        if (!entries.is_array())
            throw ParseError("face " + f.id + ": entries must be a list");
        for (const auto& je : entries) {
            FaceEntry e;
            std::string kind = detail::require_string(je, "kind", "face " + f.id);
            if (kind == "edge")
                e.kind = EntryKind::Edge;
            else if (kind == "crossing")
                e.kind = EntryKind::Crossing;
            else
                throw ParseError("face " + f.id + ": unknown entry kind '" + kind + "'");
            e.expr = detail::parse_expr(detail::require(je, "expr", "face " + f.id), "face " + f.id);
            if (auto it = je.find("direction"); it != je.end()) {
                std::string dir = it->is_string() ? it->get<std::string>() : "";
                if (dir == "with")
                    e.direction = Direction::With;
                else if (dir == "against")
                    e.direction = Direction::Against;
                else
                    throw ParseError("face " + f.id + ": direction must be 'with' or 'against'");
            }
            f.entries.push_back(std::move(e));
        }
        d.faces.push_back(std::move(f));
    }

    if (auto it = root.find("circles"); it != root.end()) {
        if (!it->is_array())
            throw ParseError("'circles' must be a list");
        for (const auto& jc : *it) {
            CrossingCircle c;
            c.id = detail::require_string(jc, "id", "circle");
            const std::string where = "circle " + c.id;
            c.omega = detail::require_string(jc, "omega", where);
            std::string ht = jc.value("half_twist", std::string("none"));
            if (ht == "none")
                c.half_twist = HalfTwist::None;
            else if (ht == "right")
                c.half_twist = HalfTwist::Right;
            else if (ht == "left")
                c.half_twist = HalfTwist::Left;
            else
                throw ParseError(where + ": half_twist must be none, right or left");
            std::string st = jc.value("strands", std::string("parallel"));
            if (st == "parallel")
                c.strands = Strands::Parallel;
            else if (st == "antiparallel")
                c.strands = Strands::Antiparallel;
            else
                throw ParseError(where + ": strands must be parallel or antiparallel");
            if (auto s = jc.find("slots"); s != jc.end()) {
                if (!s->is_object())
                    throw ParseError(where + ": slots must be an object");
                auto list = [&](const char* key) {
                    auto f = s->find(key);
                    return f == s->end() ? std::vector<std::string>{} : detail::string_list(*f, where + " " + key);
                };
                c.slots = {list("bigon_a"), list("bigon_b"), list("sphere"), list("meridians"), list("half_edges")};
            }
            d.circles.push_back(std::move(c));
        }
    }

    if (auto it = root.find("components"); it != root.end()) {
        if (!it->is_array())
            throw ParseError("'components' must be a list");
        for (const auto& jc : *it) {
            ProjectionComponent c;
            c.id = detail::require_string(jc, "id", "component");
            const std::string where = "component " + c.id;
            const json& edges = detail::require(jc, "edges", where);
            if (!edges.is_array())
                throw ParseError(where + ": edges must be a list");
            for (const auto& je : edges) {
                if (!je.is_array() || je.size() != 2 || !je[0].is_string())
                    throw ParseError(where + ": each edge is [var, 1|-1]");
                c.edges.emplace_back(je[0].get<std::string>(), static_cast<int>(detail::as_int(je[1], where)));
            }
            if (auto k = jc.find("half_twist_passes"); k != jc.end())
                c.half_twist_passes = static_cast<int>(detail::as_int(*k, where));
            if (auto s = jc.find("shear_sign"); s != jc.end())
                c.shear_sign = static_cast<int>(detail::as_int(*s, where));
            d.components.push_back(std::move(c));
        }
    }

    if (auto it = root.find("fixed"); it != root.end()) {
        if (!it->is_object())
            throw ParseError("'fixed' must be an object");
        for (const auto& [v, e] : it->items())
            d.fixed[v] = detail::parse_expr(e, "fixed " + v);
    }
    return d;
}

/// Parse and validate; any finding becomes a ParseError listing all of them.
inline FALDiagram parse_diagram(const std::string& text) {
    FALDiagram d = parse_diagram_unchecked(text);
    auto findings = validate(d);
    if (!findings.empty()) {
        std::string msg = "invalid diagram:";
        for (const auto& f : findings)
            msg += std::string("\n  ") + rule_name(f.rule) + (f.where.empty() ? "" : " [" + f.where + "]") + ": " +
                   f.message;
        throw ParseError(msg);
    }
    return d;
}

inline FALDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

/// Canonical JSON form. Field order is fixed so output is deterministic.
inline nlohmann::ordered_json to_json(const FALDiagram& d) {
    using detail::json;
    json root;
    root["generic"] = d.generic;
    root["variables"] = d.variables;
    json faces = json::array();
    for (const auto& f : d.faces) {
        json entries = json::array();
        for (const auto& e : f.entries) {
            json je;
            je["kind"] = e.kind == EntryKind::Edge ? "edge" : "crossing";
            je["expr"] = detail::dump_expr(e.expr);
            if (e.kind == EntryKind::Edge)
                je["direction"] = e.direction == Direction::With ? "with" : "against";
            entries.push_back(std::move(je));
        }
        faces.push_back(json{{"id", f.id}, {"entries", std::move(entries)}});
    }
    root["faces"] = std::move(faces);
    json circles = json::array();
    for (const auto& c : d.circles) {
        json jc{{"id", c.id}, {"omega", c.omega}, {"half_twist", detail::to_str(c.half_twist)},
                {"strands", detail::to_str(c.strands)}};
        jc["slots"] = json{{"bigon_a", c.slots.bigon_a},
                           {"bigon_b", c.slots.bigon_b},
                           {"sphere", c.slots.sphere},
                           {"meridians", c.slots.meridians},
                           {"half_edges", c.slots.half_edges}};
        circles.push_back(std::move(jc));
    }
    root["circles"] = std::move(circles);
    json comps = json::array();
    for (const auto& c : d.components) {
        json edges = json::array();
        for (const auto& [v, s] : c.edges)
            edges.push_back(json::array({v, s}));
        comps.push_back(json{{"id", c.id},
                             {"edges", std::move(edges)},
                             {"half_twist_passes", c.half_twist_passes},
                             {"shear_sign", c.shear_sign}});
    }
    root["components"] = std::move(comps);
    if (!d.fixed.empty()) {
        json fixed = json::object();
        for (const auto& [v, e] : d.fixed)
            fixed[v] = detail::dump_expr(e);
        root["fixed"] = std::move(fixed);
    }
    return root;
}

inline std::string serialize_diagram(const FALDiagram& d) { return to_json(d).dump(2); }

} // namespace ttfal
