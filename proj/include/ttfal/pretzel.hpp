#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttfal/cusp.hpp"
#include "ttfal/equations.hpp"
#include "ttfal/uni_poly.hpp"

namespace ttfal {

struct PretzelPoly {
    int n = 0;
    UniPoly poly;
};

namespace detail {

inline void require_n(int n) {
    if (n < 3)
        throw Error("pretzel index must be >= 3, got " + std::to_string(n));
}

inline GaussianRational q(long long a, long long b = 1) { return GaussianRational::fraction(a, b); }

} // namespace detail

/// C_3 = x^2 + 1/4, C_4 = x^3 + x/2, C_n = C_{n-2}/4 + x C_{n-1}.
inline PretzelPoly ttpoly_falp(int n) {
    detail::require_n(n);
    UniPoly prev({detail::q(1, 4), 0, 1});
    UniPoly cur({0, detail::q(1, 2), 0, 1});
    if (n == 3)
        return {3, prev};
    const UniPoly x = UniPoly::monomial();
    for (int k = 5; k <= n; ++k) {
        UniPoly next = prev.scaled(detail::q(1, 4)) + x * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur};
}

/// The boundary of region aleph of the fully augmented n-pretzel: crossings
/// -1/4, 1/4 (n-2 times), -1/4 separated by edges x, closed by the edge z
/// traversed backwards.
inline Face falp_face(int n) {
    detail::require_n(n);
    Face f{"aleph", {}};
    const LabelExpr x = LabelExpr::var("x");
    f.entries.push_back(FaceEntry::crossing(detail::q(-1, 4)));
    f.entries.push_back(FaceEntry::edge(x));
    for (int k = 0; k < n - 2; ++k) {
        f.entries.push_back(FaceEntry::crossing(detail::q(1, 4)));
        f.entries.push_back(FaceEntry::edge(x));
    }
    f.entries.push_back(FaceEntry::crossing(detail::q(-1, 4)));
    f.entries.push_back(FaceEntry::edge(LabelExpr::var("z"), Direction::Against));
    return f;
}

/// The region-aleph matrix product built directly; returns its (2,1) entry.
inline PretzelPoly ttpoly_falp_direct(int n) {
    detail::require_n(n);
    const MultiPoly x = var("x"), z = var("z");
    const Mat2 cross_neg = Mat2::crossing(detail::q(-1, 4));
    const Mat2 step = Mat2::crossing(detail::q(1, 4)) * Mat2::edge(x);
    Mat2 m = cross_neg * Mat2::edge(x);
    for (int k = 0; k < n - 2; ++k)
        m *= step;
    m *= cross_neg * Mat2::edge(z, -1);
    if (m.e21.contains("z"))
        throw Error("internal inconsistency: (2,1) entry depends on z for n=" + std::to_string(n));
    return {n, UniPoly::from_multi(m.e21, "x")};
}

// --- tabulated polynomials, n = 3..17 -----------------------------------------

struct Table1Row {
    int n;
    std::vector<std::vector<long long>> factors; ///< integer factors, highest degree first
    long long divisor;
    int bold = -1;                               ///< index into factors, -1 if none
    std::vector<long long> field;                ///< invariant trace field polynomial, highest first
};

inline const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {3, {{4, 0, 1}}, 4, -1, {1, 0, 1}},
        {4, {{1, 0}, {2, 0, 1}}, 2, -1, {1, 0, 2}},
        {5, {{16, 0, 12, 0, 1}}, 16, -1, {1, 0, 3, 0, 1}},
        {6, {{1, 0}, {4, 0, 1}, {4, 0, 3}}, 16, 2, {1, -1, 1}},
        {7, {{64, 0, 80, 0, 24, 0, 1}}, 64, -1, {1, 0, 5, 0, 6, 0, 1}},
        {8, {{1, 0}, {2, 0, 1}, {8, 0, 8, 0, 1}}, 16, 2, {1, 0, 4, 0, 2}},
        {9, {{4, 0, 1}, {64, 0, 96, 0, 36, 0, 1}}, 256, 1, {1, 0, 6, 0, 9, 0, 1}},
        {10, {{1, 0}, {16, 0, 12, 0, 1}, {16, 0, 20, 0, 5}}, 256, 2, {1, -1, 1, -1, 1}},
        {11, {{1024, 0, 2304, 0, 1792, 0, 560, 0, 60, 0, 1}}, 1024, -1, {1, 0, 9, 0, 28, 0, 35, 0, 15, 0, 1}},
        {12, {{1, 0}, {2, 0, 1}, {4, 0, 1}, {4, 0, 3}, {16, 0, 16, 0, 1}}, 512, 4, {1, 0, 4, 0, 1}},
        {13,
         {{4096, 0, 11264, 0, 11520, 0, 5376, 0, 1120, 0, 84, 0, 1}},
         4096,
         -1,
         {1, 0, 11, 0, 45, 0, 84, 0, 70, 0, 21, 0, 1}},
        {14, {{1, 0}, {64, 0, 80, 0, 24, 0, 1}, {64, 0, 112, 0, 56, 0, 7}}, 4096, 2, {1, -1, 1, -1, 1, -1, 1}},
        {15,
         {{4, 0, 1}, {16, 0, 12, 0, 1}, {256, 0, 576, 0, 416, 0, 96, 0, 1}},
         16384,
         2,
         {1, 0, 9, 0, 26, 0, 24, 0, 1}},
        {16,
         {{1, 0}, {2, 0, 1}, {8, 0, 8, 0, 1}, {128, 0, 256, 0, 160, 0, 32, 0, 1}},
         2048,
         3,
         {1, 0, 8, 0, 20, 0, 16, 0, 2}},
        {17,
         {{65536, 0, 245760, 0, 372736, 0, 292864, 0, 126720, 0, 29568, 0, 3360, 0, 144, 0, 1}},
         65536,
         -1,
         {1, 0, 15, 0, 91, 0, 286, 0, 495, 0, 462, 0, 210, 0, 36, 0, 1}},
    };
    return rows;
}

inline UniPoly from_high_first(std::vector<long long> cs) {
    std::reverse(cs.begin(), cs.end());
    return UniPoly::from_integers(cs);
}

/// Exact expansion of a row: product of its factors divided by the divisor.
inline UniPoly table1_poly(const Table1Row& row) {
    UniPoly p = UniPoly::from_integers({1});
    for (const auto& f : row.factors)
        p = p * from_high_first(f);
    return p.scaled(GaussianRational(1) / GaussianRational(row.divisor));
}

inline const Table1Row& table1_row(int n) {
    for (const auto& r : table1())
        if (r.n == n)
            return r;
    throw Error("no tabulated row for n = " + std::to_string(n));
}

enum class FieldStatus { Direct, Scaled, Unverifiable };

inline const char* field_status_name(FieldStatus s) {
    switch (s) {
    case FieldStatus::Direct: return "verified: roots are roots of the field polynomial";
    case FieldStatus::Scaled: return "consistent: doubled roots are roots of the field polynomial (informational)";
    case FieldStatus::Unverifiable: return "unverifiable here";
    }
    return "?";
}

struct Table1Check {
    int n = 0;
    std::string expected;  ///< integer form with divisor, as printed in the table
    std::string computed;
    bool exact_match = false;
    FieldStatus field = FieldStatus::Unverifiable;
};

/// "1024x^10+...+1 (/1024)"
inline std::string format_cleared(const UniPoly& p) {
    IntegerForm f = integer_cleared(p);
    return format_integer_form(f, "x", false) + " (/" + f.divisor.str() + ")";
}

/// The polynomial whose roots the field column speaks about: the bold factor,
/// or the whole numerator without its factor x.
inline UniPoly table1_field_factor(const Table1Row& row) {
    if (row.bold >= 0)
        return from_high_first(row.factors[static_cast<std::size_t>(row.bold)]);
    UniPoly p = UniPoly::from_integers({1});
    for (const auto& f : row.factors)
        if (f != std::vector<long long>{1, 0})
            p = p * from_high_first(f);
    return p;
}

inline FieldStatus table1_field_status(const Table1Row& row, double tol = 1e-9) {
    const UniPoly factor = table1_field_factor(row);
    const UniPoly field = from_high_first(row.field);
    const auto roots = find_roots(factor);
    bool direct = true, scaled = true;
    for (const auto& r : roots) {
        direct = direct && check_field_membership(r, field, tol).root_proximity;
        scaled = scaled && check_field_membership(2.0 * r, field, tol).root_proximity;
    }
    return direct ? FieldStatus::Direct : scaled ? FieldStatus::Scaled : FieldStatus::Unverifiable;
}

inline std::vector<Table1Check> verify_table1(int from = 3, int to = 17) {
    std::vector<Table1Check> out;
    for (int n = from; n <= to; ++n) {
        const Table1Row& row = table1_row(n);
        const UniPoly expected = table1_poly(row);
        const UniPoly got = ttpoly_falp(n).poly;
        Table1Check c;
        c.n = n;
        c.expected = format_cleared(expected);
        c.computed = format_cleared(got);
        c.exact_match = expected == got && c.expected == c.computed;
        c.field = table1_field_status(row);
        out.push_back(c);
    }
    return out;
}

// --- divisibility ---------------------------------------------------------------

struct DivisibilityScan {
    int max_n = 0;
    std::map<std::pair<int, int>, bool> divides; ///< (m, n) for 3 <= m < n <= max_n
    std::vector<std::pair<int, int>> violations; ///< pairs where C_m | C_n disagrees with m | n
};

inline DivisibilityScan divisibility_scan(int max_n) {
    if (max_n < 6)
        throw Error("divisibility scan needs max_n >= 6");
    std::vector<UniPoly> c(static_cast<std::size_t>(max_n) + 1);
    for (int n = 3; n <= max_n; ++n)
        c[static_cast<std::size_t>(n)] = ttpoly_falp(n).poly;
    DivisibilityScan s;
    s.max_n = max_n;
    for (int n = 4; n <= max_n; ++n)
        for (int m = 3; m < n; ++m) {
            bool d = c[static_cast<std::size_t>(m)].divides(c[static_cast<std::size_t>(n)]);
            s.divides[{m, n}] = d;
            if (d != (n % m == 0))
                s.violations.emplace_back(m, n);
        }
    return s;
}

struct IrreducibilityScreen {
    bool no_rational_root = false;
    bool no_smaller_divisor = false;
    bool no_quadratic_factor = false; ///< over the bounded search only
    bool passed() const { return no_rational_root && no_smaller_divisor && no_quadratic_factor; }
};

namespace detail {

inline std::vector<long long> positive_divisors(long long v) {
    v = v < 0 ? -v : v;
    std::vector<long long> out;
    for (long long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// A screen, not a proof: rational roots, divisors among smaller C_m, and
/// quadratic factors a x^2 + b x + c with a | lead, c | const, |b| <= b_bound.
inline IrreducibilityScreen irreducibility_screen(int n, long long b_bound = 64) {
    const UniPoly p = ttpoly_falp(n).poly;
    IntegerForm f = integer_cleared(p);
    const long long lead = f.re.back().convert_to<long long>();
    const long long c0 = f.re.front().convert_to<long long>();
    IrreducibilityScreen s;

    s.no_rational_root = true;
    if (c0 == 0) {
        s.no_rational_root = false;
    } else {
        for (auto num : detail::positive_divisors(c0))
            for (auto den : detail::positive_divisors(lead))
                for (long long sign : {1LL, -1LL})
                    if (p.eval(GaussianRational::fraction(sign * num, den)).is_zero())
                        s.no_rational_root = false;
    }

    s.no_smaller_divisor = true;
    for (int m = 3; m < n; ++m)
        if (ttpoly_falp(m).poly.divides(p))
            s.no_smaller_divisor = false;

    s.no_quadratic_factor = true;
    if (p.degree() > 2 && c0 != 0) {
        for (auto a : detail::positive_divisors(lead))
            for (auto cabs : detail::positive_divisors(c0))
                for (long long csign : {1LL, -1LL})
                    for (long long b = -b_bound; b <= b_bound; ++b)
                        if (UniPoly::from_integers({csign * cabs, b, a}).divides(p))
                            s.no_quadratic_factor = false;
    }
    return s;
}

// --- the rotated-circle family ---------------------------------------------------

/// Best rational approximation with denominator <= max_den, accepted only
/// within tol (continued-fraction convergents).
inline std::optional<Rational> rational_reconstruct(double v, long long max_den = 10000, double tol = 1e-9) {
    if (!std::isfinite(v))
        return std::nullopt;
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        if (std::abs(a) > 1e15)
            break;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(v - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
            return Rational(h1, k1);
        double frac = x - a;
        if (frac < 1e-18)
            break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

/// A Gaussian rational within tol of z, if one with small denominators exists.
inline std::optional<GaussianRational> reconstruct_qi(ComplexF z, long long max_den = 10000, double tol = 1e-9) {
    auto re = rational_reconstruct(z.real(), max_den, tol);
    auto im = rational_reconstruct(z.imag(), max_den, tol);
    if (!re || !im)
        return std::nullopt;
    return GaussianRational(*re, *im);
}

struct FalrSystem {
    TTSystem system;
    std::string target; ///< the free crossing label of the rotated circle
    Mat2 matrix;
};

/// Region aleph of FALR_n with the untouched circles pinned to i/2 (their
/// edges to i) and the rotated circle's crossing labels -x; the closing edge
/// is z. The equations are e12 = e21 = e11 - e22 = 0 in x, z.
inline FalrSystem falr_system(int n) {
    detail::require_n(n);
    const GaussianRational I = GaussianRational::i();
    const MultiPoly x = var("x"), z = var("z");
    Mat2 m = Mat2::crossing(detail::q(-1, 4)) * Mat2::edge(MultiPoly(I));
    for (int k = 0; k < n - 3; ++k)
        m *= Mat2::crossing(detail::q(1, 4)) * Mat2::edge(MultiPoly(I));
    m *= Mat2::crossing(detail::q(-1, 4)) * Mat2::edge(MultiPoly(I * detail::q(1, 2)), -1);
    m *= Mat2::crossing(-x) * Mat2::edge(MultiPoly(1));
    m *= Mat2::crossing(-x) * Mat2::edge(z, -1);
    FalrSystem s;
    s.system.variables = {"x", "z"};
    for (const auto& e : {m.e12, m.e21, m.e11 - m.e22})
        if (!e.is_zero())
            s.system.equations.push_back(e.with_registry(MultiPoly::merged_registry({"x", "z"}, e.registry())));
    s.system.side_conditions.push_back(z);
    s.target = "x";
    s.matrix = m;
    return s;
}

/// Region gimel of FALR_n: omega_2 - u_2, omega_2 - u_4, -1/4 - u_2 u_4.
inline TTSystem falr_gimel_system() {
    const MultiPoly w = var("w2"), u2 = var("u2"), u4 = var("u4");
    TTSystem s;
    s.variables = {"u2", "w2", "u4"};
    s.equations = {w - u2, w - u4, MultiPoly(detail::q(-1, 4)) - u2 * u4};
    s.side_conditions = {u2, u4};
    return s;
}

} // namespace ttfal
