#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ttfal/equations.hpp"
#include "ttfal/roots.hpp"

namespace ttfal {

/// One elimination step, undone in reverse order. A rational step recovers
/// var = numerator / denominator. A numeric step (left by the resultant
/// fallback) picks the root of `relations` in var with the smallest residual.
struct BackSubstitution {
    std::string var;
    MultiPoly numerator;
    MultiPoly denominator{1};
    bool numeric = false;
    std::vector<MultiPoly> relations;
};

struct EliminationResult {
    std::string target;
    UniPoly tt_poly;             ///< squarefree, monic
    UniPoly tt_poly_raw;         ///< gcd of the final univariate equations
    int multiplicity_drop = 0;   ///< deg(raw) - deg(squarefree)
    std::vector<BackSubstitution> back_substitution;
    std::vector<MultiPoly> side_conditions; ///< accumulated during elimination
    std::vector<std::string> warnings;
    bool used_resultants = false;

    /// Values of every eliminated variable at target = root. Throws
    /// DivisionByZero when a back-substitution denominator vanishes.
    Assignment assignment_at(ComplexF root, const RootOptions& opt = {}) const {
        Assignment at{{target, root}};
        for (auto it = back_substitution.rbegin(); it != back_substitution.rend(); ++it) {
            if (!it->numeric) {
                ComplexF den = it->denominator.eval(at);
                if (std::abs(den) < 1e-12)
                    throw DivisionByZero("back-substitution for '" + it->var + "' divides by zero");
                at[it->var] = it->numerator.eval(at) / den;
                continue;
            }
            std::vector<ComplexF> candidates;
            for (const auto& rel : it->relations) {
                std::vector<ComplexF> cs(rel.degree_in(it->var) + 1);
                for (std::uint32_t k = 0; k < cs.size(); ++k)
                    cs[k] = rel.coefficient_in(it->var, k).eval(at);
                while (!cs.empty() && std::abs(cs.back()) < 1e-14)
                    cs.pop_back();
                if (cs.size() < 2)
                    continue;
                try {
                    auto rs = find_roots(cs, {1e-9, opt.max_iters});
                    candidates.insert(candidates.end(), rs.begin(), rs.end());
                } catch (const NonConvergence& e) {
                    candidates.insert(candidates.end(), e.partial_roots().begin(), e.partial_roots().end());
                }
            }
            if (candidates.empty())
                throw DivisionByZero("no numeric value recovers '" + it->var + "'");
            ComplexF best = candidates.front();
            double best_res = -1.0;
            for (const auto& c : candidates) {
                Assignment trial = at;
                trial[it->var] = c;
                double res = 0.0;
                for (const auto& rel : it->relations)
                    res = std::max(res, std::abs(rel.eval(trial)));
                if (best_res < 0.0 || res < best_res) {
                    best_res = res;
                    best = c;
                }
            }
            at[it->var] = best;
        }
        return at;
    }
};

namespace detail {

/// Scale so the leading coefficient is 1; keeps the working set canonical.
inline MultiPoly monic_multi(const MultiPoly& p) {
    if (p.is_zero())
        return p;
    return p.scaled(GaussianRational(1) / p.terms().rbegin()->second);
}

/// p with var := num/den, multiplied by den^deg_var(p).
inline MultiPoly substitute_fraction(const MultiPoly& p, const std::string& var, const MultiPoly& num,
                                     const MultiPoly& den) {
    const std::uint32_t d = p.degree_in(var);
    if (d == 0)
        return p;
    MultiPoly out;
    for (std::uint32_t k = 0; k <= d; ++k) {
        MultiPoly c = p.coefficient_in(var, k);
        if (c.is_zero())
            continue;
        out += c * num.pow(k) * den.pow(d - k);
    }
    return out;
}

/// Remove every factor that is a side condition (known to be nonzero).
inline MultiPoly saturate(MultiPoly p, const std::vector<MultiPoly>& sides) {
    bool progress = true;
    while (progress && !p.is_constant()) {
        progress = false;
        for (const auto& s : sides) {
            if (s.is_constant() || s.total_degree() > p.total_degree())
                continue;
            if (auto q = p.divide_exact(s)) {
                p = std::move(*q);
                progress = true;
            }
        }
    }
    return p;
}

/// Determinant by fraction-free Bareiss elimination.
inline MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return MultiPoly(1);
    MultiPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero())
                ++r;
            if (r == n)
                return MultiPoly(0);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = t.divide_exact(prev);
                if (!q)
                    throw Error("Bareiss step is not exact");
                a[i][j] = std::move(*q);
            }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Resultant of p and q with respect to var, via the Sylvester matrix.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    const std::uint32_t m = p.degree_in(var), n = q.degree_in(var);
    if (m == 0)
        return p.pow(n);
    if (n == 0)
        return q.pow(m);
    const std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::uint32_t k = 0; k <= m; ++k)
            s[r][r + (m - k)] = p.coefficient_in(var, k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::uint32_t k = 0; k <= n; ++k)
            s[n + r][r + (n - k)] = q.coefficient_in(var, k);
    return bareiss_det(std::move(s));
}

inline bool mentions_only(const MultiPoly& p, const std::string& v) {
    for (const auto& s : p.support())
        if (s != v)
            return false;
    return true;
}

inline std::size_t registry_index(const std::vector<std::string>& reg, const std::string& v) {
    return static_cast<std::size_t>(std::find(reg.begin(), reg.end(), v) - reg.begin());
}

} // namespace detail

/// Reduce the system to one squarefree polynomial in `target`.
///
/// Equations linear in some other variable v (a*v + b = 0) are used first:
/// v = -b/a is substituted everywhere and a joins the side conditions.
/// Candidates with a constant coefficient a are preferred, then simpler a,
/// then simpler equations. Side-condition factors are divided out of the
/// working equations after every step. When nothing is linear, the variable
/// first in registry order is removed with resultants, and its value is later
/// recovered numerically.
inline EliminationResult eliminate(const TTSystem& sys, const std::string& target) {
    using Kind = EliminationError::Kind;
    EliminationResult res;
    res.target = target;

    std::vector<MultiPoly> eqs;
    bool target_seen = false;
    for (const auto& e : sys.equations)
        target_seen = target_seen || e.contains(target);
    if (!target_seen)
        throw EliminationError(Kind::Stuck, "target '" + target + "' does not occur in the system");

    std::vector<MultiPoly> sides;
    for (const auto& s : sys.side_conditions)
        add_side_condition(sides, detail::monic_multi(s));

    std::set<std::string> pending;
    for (const auto& e : sys.equations)
        for (const auto& v : e.support())
            if (v != target)
                pending.insert(v);

    auto tidy = [&](std::vector<MultiPoly> in) {
        std::vector<MultiPoly> out;
        for (auto& e : in) {
            e = detail::monic_multi(detail::saturate(std::move(e), sides));
            if (e.is_zero())
                continue;
            if (e.is_constant())
                throw EliminationError(Kind::Inconsistent, "system reduces to a nonzero constant = 0");
            if (std::none_of(out.begin(), out.end(), [&](const MultiPoly& o) { return o == e; }))
                out.push_back(std::move(e));
        }
        return out;
    };
    eqs = tidy(sys.equations);

    while (true) {
        bool univariate = std::all_of(eqs.begin(), eqs.end(),
                                      [&](const MultiPoly& e) { return detail::mentions_only(e, target); });
        if (univariate)
            break;

        // Best linear candidate.
        using Score = std::tuple<int, std::uint32_t, std::size_t, std::uint32_t, std::size_t, std::size_t, std::size_t>;
        std::optional<Score> best;
        std::size_t best_eq = 0;
        std::string best_var;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            for (const auto& v : eqs[i].support()) {
                if (v == target || eqs[i].degree_in(v) != 1)
                    continue;
                MultiPoly a = eqs[i].coefficient_in(v, 1);
                Score s{a.is_constant() ? 0 : 1, a.total_degree(), a.term_count(), eqs[i].total_degree(),
                        eqs[i].term_count(), detail::registry_index(sys.variables, v), i};
                if (!best || s < *best) {
                    best = s;
                    best_eq = i;
                    best_var = v;
                }
            }

        if (best) {
            const MultiPoly& e = eqs[best_eq];
            MultiPoly a = e.coefficient_in(best_var, 1);
            MultiPoly num = -e.coefficient_in(best_var, 0);
            res.back_substitution.push_back({best_var, num, a, false, {}});
            std::vector<MultiPoly> next;
            for (std::size_t i = 0; i < eqs.size(); ++i)
                if (i != best_eq)
                    next.push_back(detail::substitute_fraction(eqs[i], best_var, num, a));
            std::vector<MultiPoly> new_sides;
            for (const auto& s : sides) {
                MultiPoly t = detail::substitute_fraction(s, best_var, num, a);
                if (t.is_zero())
                    throw EliminationError(Kind::Inconsistent,
                                           "side condition " + s.to_string() + " vanishes identically");
                add_side_condition(new_sides, detail::monic_multi(t));
            }
            if (!a.is_constant()) {
                add_side_condition(new_sides, detail::monic_multi(a));
                add_side_condition(res.side_conditions, a);
            }
            sides = std::move(new_sides);
            pending.erase(best_var);
            eqs = tidy(std::move(next));
            continue;
        }

        // Resultant fallback on the first remaining non-target variable.
        std::string v;
        for (const auto& name : sys.variables) {
            if (name == target)
                continue;
            if (std::any_of(eqs.begin(), eqs.end(), [&](const MultiPoly& e) { return e.contains(name); })) {
                v = name;
                break;
            }
        }
        if (v.empty())
            for (const auto& e : eqs)
                for (const auto& s : e.support())
                    if (s != target && v.empty())
                        v = s;
        std::vector<MultiPoly> with, without;
        for (auto& e : eqs)
            (e.contains(v) ? with : without).push_back(e);
        if (with.size() < 2)
            throw EliminationError(Kind::Stuck, "variable '" + v + "' occurs in a single nonlinear equation");
        std::sort(with.begin(), with.end(), [&](const MultiPoly& a, const MultiPoly& b) {
            return std::make_pair(a.degree_in(v), a.term_count()) < std::make_pair(b.degree_in(v), b.term_count());
        });
        res.used_resultants = true;
        res.warnings.push_back("resultant elimination of '" + v + "'; spurious factors may appear");
        res.back_substitution.push_back({v, MultiPoly(0), MultiPoly(1), true, with});
        for (std::size_t k = 1; k < with.size(); ++k) {
            MultiPoly r = detail::resultant(with[0], with[k], v);
            if (!r.is_zero())
                without.push_back(std::move(r));
        }
        pending.erase(v);
        eqs = tidy(std::move(without));
    }

    if (!pending.empty()) {
        std::string names;
        for (const auto& v : pending)
            names += (names.empty() ? "" : ", ") + v;
        throw EliminationError(Kind::Stuck, "variables left undetermined: " + names);
    }
    if (eqs.empty())
        throw EliminationError(Kind::Stuck, "no equation constrains target '" + target + "'");

    UniPoly g;
    for (const auto& e : eqs)
        g = gcd(g, UniPoly::from_multi(e, target));
    if (g.degree() < 1)
        throw EliminationError(Kind::Inconsistent, "the final equations in '" + target + "' have no common root");
    res.tt_poly_raw = g.renamed(target);
    res.tt_poly = squarefree_part(g).renamed(target);
    res.multiplicity_drop = g.degree() - res.tt_poly.degree();
    if (res.multiplicity_drop > 0)
        res.warnings.push_back("repeated roots removed (degree drop " + std::to_string(res.multiplicity_drop) + ")");
    for (const auto& s : sys.side_conditions)
        add_side_condition(res.side_conditions, s);
    return res;
}

} // namespace ttfal
