#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ttfal/gaussian_rational.hpp"

namespace ttfal {

/// Exponent vector aligned with a variable registry.
using Monomial = std::vector<std::uint32_t>;

/// Assignment of complex values to variable names.
using Assignment = std::map<std::string, ComplexF>;

/// Sparse multivariate polynomial over Q(i).
///
/// Every polynomial carries its own ordered variable registry (first
/// appearance order). Binary operations merge registries: the left operand's
/// order is kept and unseen variables of the right operand are appended.
/// Terms are keyed by exponent vectors ordered lexicographically over the
/// registry, and zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    MultiPoly() = default;
    MultiPoly(const GaussianRational& c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero())
            terms_.emplace(Monomial{}, c);
    }
    MultiPoly(long long c) : MultiPoly(GaussianRational(c)) {} // NOLINT

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_.push_back(name);
        p.terms_.emplace(Monomial{1}, GaussianRational(1));
        return p;
    }

    const std::vector<std::string>& registry() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_unit_monomial(t.first); });
    }
    GaussianRational constant_term() const {
        for (const auto& [m, c] : terms_)
            if (is_unit_monomial(m))
                return c;
        return {};
    }

    /// Variables that actually occur with a positive exponent, in registry order.
    std::vector<std::string> support() const {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (degree_at(k) > 0)
                out.push_back(vars_[k]);
        return out;
    }

    bool contains(std::string_view var) const {
        auto k = index_of(var);
        return k && degree_at(*k) > 0;
    }

    std::uint32_t degree_in(std::string_view var) const {
        auto k = index_of(var);
        return k ? degree_at(*k) : 0;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) {
            std::uint32_t s = 0;
            for (auto e : m)
                s += e;
            d = std::max(d, s);
        }
        return d;
    }

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient_in(std::string_view var, std::uint32_t k) const {
        MultiPoly out;
        out.vars_ = vars_;
        auto idx = index_of(var);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = idx && *idx < m.size() ? m[*idx] : 0;
            if (e != k)
                continue;
            Monomial mm = m;
            if (idx && *idx < mm.size())
                mm[*idx] = 0;
            out.add_term(normalized(std::move(mm)), c);
        }
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly out = *this;
        for (auto& [m, c] : out.terms_)
            c = -c;
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, false); }
    MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, true); }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        out.vars_ = merged_registry(a.vars_, b.vars_);
        if (a.is_zero() || b.is_zero())
            return out;
        const auto bmap = remap(b.vars_, out.vars_);
        const auto n = out.vars_.size();
        std::map<Monomial, GaussianRational> acc;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(n, 0);
                for (std::size_t k = 0; k < ma.size(); ++k)
                    m[k] += ma[k];
                for (std::size_t k = 0; k < mb.size(); ++k)
                    m[bmap[k]] += mb[k];
                acc[normalized(std::move(m))] += ca * cb;
            }
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero())
                out.terms_.emplace(m, std::move(c));
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const GaussianRational& s) const {
        MultiPoly out;
        out.vars_ = vars_;
        if (s.is_zero())
            return out;
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, c * s);
        return out;
    }

    MultiPoly pow(std::uint32_t e) const {
        MultiPoly result(1);
        MultiPoly base = *this;
        while (e) {
            if (e & 1u)
                result *= base;
            e >>= 1u;
            if (e)
                base *= base;
        }
        return result;
    }

    /// Replace every occurrence of var by the given polynomial.
    MultiPoly substitute(std::string_view var, const MultiPoly& replacement) const {
        auto idx = index_of(var);
        if (!idx || degree_at(*idx) == 0)
            return *this;
        // Group terms by the exponent of var, then evaluate by Horner in the replacement.
        std::uint32_t deg = degree_at(*idx);
        std::vector<MultiPoly> coeffs(deg + 1);
        for (auto& c : coeffs)
            c.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = *idx < m.size() ? m[*idx] : 0;
            Monomial mm = m;
            if (*idx < mm.size())
                mm[*idx] = 0;
            coeffs[e].add_term(normalized(std::move(mm)), c);
        }
        MultiPoly out = coeffs[deg];
        for (std::uint32_t k = deg; k-- > 0;)
            out = out * replacement + coeffs[k];
        return out;
    }

    /// Re-embed into a registry that contains every variable of the support.
    MultiPoly with_registry(const std::vector<std::string>& reg) const {
        MultiPoly out;
        out.vars_ = reg;
        const auto map = remap(vars_, reg);
        for (const auto& [m, c] : terms_) {
            Monomial mm(reg.size(), 0);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0)
                    continue;
                if (map[k] >= reg.size())
                    throw Error("with_registry: variable '" + vars_[k] + "' not in target registry");
                mm[map[k]] = m[k];
            }
            out.terms_.emplace(normalized(std::move(mm)), c);
        }
        return out;
    }

    /// Exact quotient self / d, or nullopt when d does not divide self.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        if (d.is_zero())
            throw DivisionByZero("polynomial division by zero");
        auto reg = merged_registry(vars_, d.vars_);
        MultiPoly rem = with_registry(reg);
        MultiPoly den = d.with_registry(reg);
        MultiPoly quot;
        quot.vars_ = reg;
        const auto& [lm_d, lc_d] = *den.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [lm_r, lc_r] = *rem.terms_.rbegin();
            Monomial q(reg.size(), 0);
            for (std::size_t k = 0; k < reg.size(); ++k) {
                std::uint32_t er = k < lm_r.size() ? lm_r[k] : 0;
                std::uint32_t ed = k < lm_d.size() ? lm_d[k] : 0;
                if (er < ed)
                    return std::nullopt;
                q[k] = er - ed;
            }
            MultiPoly t;
            t.vars_ = reg;
            t.terms_.emplace(normalized(std::move(q)), lc_r / lc_d);
            quot += t;
            rem -= t * den;
        }
        return quot;
    }

    ComplexF eval(const Assignment& at) const {
        // Powers are computed once per variable, then terms are summed.
        std::vector<std::vector<ComplexF>> powers(vars_.size());
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            auto deg = degree_at(k);
            if (deg == 0)
                continue;
            auto it = at.find(vars_[k]);
            if (it == at.end())
                throw MissingVariable(vars_[k]);
            powers[k].assign(deg + 1, ComplexF(1.0, 0.0));
            for (std::uint32_t e = 1; e <= deg; ++e)
                powers[k][e] = powers[k][e - 1] * it->second;
        }
        ComplexF sum(0.0, 0.0);
        for (const auto& [m, c] : terms_) {
            ComplexF t = c.to_complex();
            for (std::size_t k = 0; k < m.size(); ++k)
                if (m[k])
                    t *= powers[k][m[k]];
            sum += t;
        }
        return sum;
    }

    /// Mathematical equality (registries may differ).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += vars_[k];
                if (m[k] > 1)
                    mono += "^" + std::to_string(m[k]);
            }
            std::string coef = c.to_string();
            bool negative = c.is_real() && c.re() < 0;
            if (negative)
                coef = (-c).to_string();
            if (!first)
                os << (negative ? " - " : " + ");
            else if (negative)
                os << "-";
            if (mono.empty())
                os << coef;
            else if (coef == "1")
                os << mono;
            else
                os << coef << "*" << mono;
            first = false;
        }
        return os.str();
    }

    static std::vector<std::string> merged_registry(const std::vector<std::string>& a,
                                                    const std::vector<std::string>& b) {
        std::vector<std::string> out = a;
        for (const auto& v : b)
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        return out;
    }

private:
    static bool is_unit_monomial(const Monomial& m) {
        return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    }

    /// Trailing zeros are trimmed so that structurally equal monomials compare equal.
    static Monomial normalized(Monomial m) {
        while (!m.empty() && m.back() == 0)
            m.pop_back();
        return m;
    }

    std::optional<std::size_t> index_of(std::string_view var) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == var)
                return k;
        return std::nullopt;
    }

    std::uint32_t degree_at(std::size_t k) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_)
            if (k < m.size())
                d = std::max(d, m[k]);
        return d;
    }

    static std::vector<std::size_t> remap(const std::vector<std::string>& from,
                                          const std::vector<std::string>& to) {
        std::vector<std::size_t> map(from.size(), to.size());
        for (std::size_t k = 0; k < from.size(); ++k)
            for (std::size_t j = 0; j < to.size(); ++j)
                if (to[j] == from[k]) {
                    map[k] = j;
                    break;
                }
        return map;
    }

    void add_term(Monomial m, const GaussianRational& c) {
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    MultiPoly& accumulate(const MultiPoly& o, bool negate) {
        auto reg = merged_registry(vars_, o.vars_);
        vars_ = reg; // appending keeps existing exponent vectors valid
        const auto map = remap(o.vars_, reg);
        for (const auto& [m, c] : o.terms_) {
            Monomial mm(reg.size(), 0);
            for (std::size_t k = 0; k < m.size(); ++k)
                mm[map[k]] = m[k];
            add_term(normalized(std::move(mm)), negate ? -c : c);
        }
        return *this;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

inline MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

} // namespace ttfal
