#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttfal/ttfal.hpp"

namespace ttfal::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { Ok = 0, Failure = 1, BadInput = 2, EliminationFailed = 3, NoGeometric = 4 };

/// 12 significant digits, with -0 folded into 0.
inline double round12(double v) {
    if (!std::isfinite(v))
        return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

inline Json complex_json(ComplexF z) { return Json::array({round12(z.real()), round12(z.imag())}); }

inline std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Reference load_reference(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw ParseError("reference file '" + path + "': " + e.what());
    }
    if (!j.is_object())
        throw ParseError("reference file must map cusp ids to [re, im]");
    Reference ref;
    for (const auto& [id, v] : j.items()) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("reference entry '" + id + "' is not [re, im]");
        ref[id] = {v[0].get<double>(), v[1].get<double>()};
    }
    return ref;
}

inline int max_iters_from_env() {
    const char* s = std::getenv("TTFAL_MAX_ITERS");
    if (s == nullptr || *s == '\0')
        return 500;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v <= 0 || v > 1000000)
        throw ParseError(std::string("TTFAL_MAX_ITERS must be a positive integer, got '") + s + "'");
    return static_cast<int>(v);
}

/// The pipeline part of a report, shared by solve and cusps.
inline Json pipeline_json(const PipelineResult& r) {
    const auto& el = r.elimination;
    Json j;
    j["target"] = el.target;
    j["tt_variable"] = el.target;
    j["tt_poly"] = format_integer_form(primitive_form(el.tt_poly), "x", true);
    j["degree"] = el.tt_poly.degree();
    j["multiplicity_drop"] = el.multiplicity_drop;
    j["used_resultants"] = el.used_resultants;

    Json roots = Json::array();
    for (std::size_t k = 0; k < r.report.roots.size(); ++k) {
        const RootInfo& ri = r.report.roots[k];
        Json e;
        e["index"] = k;
        e["value"] = complex_json(ri.value);
        e["residual"] = round12(ri.residual);
        e["side_conditions_ok"] = ri.side_ok;
        e["cusps_upper_half_plane"] = ri.cusps_positive;
        e["qualifies"] = ri.qualifies;
        if (ri.reference_deviation)
            e["reference_deviation"] = round12(*ri.reference_deviation);
        if (!ri.note.empty())
            e["note"] = ri.note;
        roots.push_back(e);
    }
    j["roots"] = roots;

    if (r.report.geometric_index) {
        std::size_t g = *r.report.geometric_index;
        j["geometric_root"] = {{"index", g}, {"value", complex_json(r.report.roots[g].value)},
                               {"ambiguous", r.report.ambiguous}};
    } else {
        j["geometric_root"] = nullptr;
    }
    const RootInfo& chosen = r.report.roots[r.chosen];
    j["chosen_root"] = {{"index", r.chosen}, {"value", complex_json(chosen.value)}};

    Json assignment = Json::object();
    for (const auto& [v, z] : chosen.assignment)
        assignment[v] = complex_json(z);
    j["assignment"] = assignment;

    Json cusps = Json::array();
    for (const auto& c : chosen.cusps)
        cusps.push_back({{"id", c.id}, {"formula", formula_name(c.formula)}, {"shape", complex_json(c.shape)}});
    j["cusp_shapes"] = cusps;

    Json faces = Json::array();
    for (const auto& f : r.verify.faces)
        faces.push_back({{"face", f.face},
                         {"off_diagonal", round12(f.off_diagonal)},
                         {"diagonal_mismatch", round12(f.diagonal_mismatch)}});
    j["verification"] = {{"max_residual", round12(r.verify.max_residual)}, {"pass", r.verify.pass}, {"faces", faces}};

    Json warnings = Json::array();
    for (const auto& w : r.report.warnings)
        warnings.push_back(w);
    for (std::size_t k = 0; k < r.report.roots.size(); ++k)
        if (!r.report.roots[k].qualifies)
            warnings.push_back("root " + std::to_string(k) + " pruned: " +
                               (r.report.roots[k].note.empty() ? "a cusp shape is not in the upper half plane"
                                                               : r.report.roots[k].note));
    j["warnings"] = warnings;
    return j;
}

struct PipelineArgs {
    std::string file;
    std::optional<std::string> target;
    double tol = 1e-9;
    std::optional<std::string> reference;
    std::optional<std::size_t> root_index;
};

inline int cmd_pipeline(const std::string& command, const PipelineArgs& a, std::ostream& out, std::ostream& err) {
    const std::string bytes = read_file(a.file);
    FALDiagram d;
    try {
        d = parse_diagram(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + a.file + "': " + e.what());
    }
    PipelineOptions opt;
    opt.target = a.target;
    opt.tol = a.tol;
    opt.root_index = a.root_index;
    opt.max_iters = max_iters_from_env();
    if (a.reference)
        opt.reference = load_reference(*a.reference);

    PipelineResult r = run_pipeline(d, opt);
    Json j;
    j["command"] = command;
    j["input_digest"] = fnv1a64(bytes);
    const Json body = pipeline_json(r);
    for (const auto& [k, v] : body.items())
        j[k] = v;
    out << j.dump(2) << '\n';
    if (!r.verify.pass) {
        err << "ttfal: region matrices are not scalar at the chosen root (max residual " << r.verify.max_residual
            << ")\n";
        return Failure;
    }
    return Ok;
}

struct PretzelArgs {
    std::optional<int> n;
    bool direct = false;
    std::optional<int> scan_div;
    bool verify_table = false;
};

inline int cmd_pretzel(const PretzelArgs& a, std::ostream& out) {
    if (!a.n && !a.scan_div && !a.verify_table)
        throw ParseError("pretzel needs --n, --scan-div or --verify-table");
    if (a.direct && !a.n)
        throw ParseError("--direct needs --n");
    if (a.n && *a.n < 3)
        throw ParseError("--n must be >= 3");
    if (a.scan_div && *a.scan_div < 6)
        throw ParseError("--scan-div must be >= 6");

    bool ok = true;
    Json j;
    j["command"] = "pretzel";
    if (a.n) {
        const PretzelPoly c = ttpoly_falp(*a.n);
        j["n"] = *a.n;
        j["degree"] = c.poly.degree();
        j["tt_poly"] = format_cleared(c.poly);
        if (a.direct) {
            bool same = ttpoly_falp_direct(*a.n).poly == c.poly;
            ok = ok && same;
            j["direct"] = {{"equal", same}, {"summary", std::string("recurrence == direct: ") + (same ? "true" : "false")}};
        }
    }
    if (a.scan_div) {
        const DivisibilityScan s = divisibility_scan(*a.scan_div);
        Json pairs = Json::array();
        for (const auto& [mn, d] : s.divides)
            if (d)
                pairs.push_back(Json::array({mn.first, mn.second}));
        Json viol = Json::array();
        for (const auto& [m, n] : s.violations)
            viol.push_back({{"m", m}, {"n", n}, {"divides", s.divides.at({m, n})}, {"m_divides_n", n % m == 0}});
        j["divisibility"] = {{"max_n", s.max_n}, {"containments", pairs}, {"iff_violations", viol}};
    }
    if (a.verify_table) {
        Json rows = Json::array();
        bool all = true;
        for (const auto& c : verify_table1()) {
            all = all && c.exact_match;
            rows.push_back({{"n", c.n},
                            {"match", c.exact_match},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"field_check", field_status_name(c.field)}});
        }
        ok = ok && all;
        j["table1"] = {{"all_match", all}, {"rows", rows}};
    }
    out << j.dump(2) << '\n';
    return ok ? Ok : Failure;
}

/// Entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"T-T polynomials and cusp shapes of fully augmented links", "ttfal"};
    app.require_subcommand(1);

    PipelineArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve a labeled diagram and report the geometric solution");
    solve->add_option("file", solve_args.file, "Diagram JSON")->required();
    solve->add_option("--target", solve_args.target, "Variable to keep in the final polynomial");
    solve->add_option("--tol", solve_args.tol, "Verification tolerance")->check(CLI::PositiveNumber);
    solve->add_option("--reference", solve_args.reference, "JSON map cusp id -> [re, im]");

    PipelineArgs cusps_args;
    auto* cusps = app.add_subcommand("cusps", "Cusp shapes at the geometric root or a chosen root");
    cusps->add_option("file", cusps_args.file, "Diagram JSON")->required();
    cusps->add_option("--root-index", cusps_args.root_index, "Index into the sorted root list");
    cusps->add_option("--target", cusps_args.target, "Variable to keep in the final polynomial");

    PretzelArgs pz;
    auto* pretzel = app.add_subcommand("pretzel", "Polynomials of the fully augmented pretzel family");
    pretzel->add_option("--n", pz.n, "Index n >= 3");
    pretzel->add_flag("--direct", pz.direct, "Compare with the explicit matrix product");
    pretzel->add_option("--scan-div", pz.scan_div, "Divisibility scan up to this n");
    pretzel->add_flag("--verify-table", pz.verify_table, "Check the tabulated polynomials for n = 3..17");

    try {
        std::vector<std::string> args;
        for (int k = argc - 1; k > 0; --k)
            args.emplace_back(argv[k]);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (solve->parsed())
            return cmd_pipeline("solve", solve_args, out, err);
        if (cusps->parsed())
            return cmd_pipeline("cusps", cusps_args, out, err);
        return cmd_pretzel(pz, out);
    } catch (const ParseError& e) {
        err << "ttfal: " << e.what() << '\n';
        return BadInput;
    } catch (const LabelingError& e) {
        err << "ttfal: labeling: " << e.what() << '\n';
        return BadInput;
    } catch (const DegenerateFace& e) {
        err << "ttfal: " << e.what() << '\n';
        return BadInput;
    } catch (const EliminationError& e) {
        err << "ttfal: elimination: " << e.what() << '\n';
        return EliminationFailed;
    } catch (const NonConvergence& e) {
        err << "ttfal: " << e.what() << '\n';
        return EliminationFailed;
    } catch (const NoGeometricRoot& e) {
        err << "ttfal: " << e.what() << '\n';
        return NoGeometric;
    } catch (const std::exception& e) {
        err << "ttfal: " << e.what() << '\n';
        return Failure;
    }
}

} // namespace ttfal::cli
