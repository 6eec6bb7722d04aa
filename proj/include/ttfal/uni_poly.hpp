#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttfal/multi_poly.hpp"

namespace ttfal {

/// Dense univariate polynomial over Q(i), lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> coeffs, std::string var = "x")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    /// The polynomial x (in the given variable).
    static UniPoly monomial(std::string var = "x", std::size_t degree = 1,
                            GaussianRational c = GaussianRational(1)) {
        std::vector<GaussianRational> cs(degree + 1);
        cs[degree] = std::move(c);
        return UniPoly(std::move(cs), std::move(var));
    }

    /// Integer coefficients, lowest degree first.
    static UniPoly from_integers(const std::vector<long long>& cs, std::string var = "x") {
        std::vector<GaussianRational> g;
        g.reserve(cs.size());
        for (auto c : cs)
            g.emplace_back(c);
        return UniPoly(std::move(g), std::move(var));
    }

    /// Throws unless p involves no variable other than var.
    static UniPoly from_multi(const MultiPoly& p, const std::string& var) {
        for (const auto& v : p.support())
            if (v != var)
                throw Error("polynomial is not univariate in '" + var + "': contains '" + v + "'");
        std::vector<GaussianRational> cs(p.degree_in(var) + 1);
        for (std::uint32_t k = 0; k < cs.size(); ++k)
            cs[k] = p.coefficient_in(var, k).constant_term();
        return UniPoly(std::move(cs), var);
    }

    MultiPoly to_multi() const {
        MultiPoly out;
        MultiPoly x = MultiPoly::variable(var_);
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            out = out * x + MultiPoly(coeffs_[k]);
        return out;
    }

    const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
    const std::string& variable() const noexcept { return var_; }
    UniPoly renamed(std::string v) const { return UniPoly(coeffs_, std::move(v)); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    GaussianRational leading() const { return coeffs_.empty() ? GaussianRational() : coeffs_.back(); }
    GaussianRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }

    bool is_monic() const { return !is_zero() && leading().is_one(); }
    bool has_real_coefficients() const {
        for (const auto& c : coeffs_)
            if (!c.is_real())
                return false;
        return true;
    }

    UniPoly monic() const {
        if (is_zero())
            return *this;
        GaussianRational inv = GaussianRational(1) / leading();
        std::vector<GaussianRational> cs = coeffs_;
        for (auto& c : cs)
            c *= inv;
        return UniPoly(std::move(cs), var_);
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1)
            return UniPoly({}, var_);
        std::vector<GaussianRational> cs(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            cs[k - 1] = coeffs_[k] * GaussianRational(static_cast<long long>(k));
        return UniPoly(std::move(cs), var_);
    }

    UniPoly operator-() const {
        std::vector<GaussianRational> cs = coeffs_;
        for (auto& c : cs)
            c = -c;
        return UniPoly(std::move(cs), var_);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussianRational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < cs.size(); ++k)
            cs[k] = a.coeff(k) + b.coeff(k);
        return UniPoly(std::move(cs), a.var_);
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly({}, a.var_);
        std::vector<GaussianRational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(cs), a.var_);
    }

    UniPoly scaled(const GaussianRational& s) const {
        std::vector<GaussianRational> cs = coeffs_;
        for (auto& c : cs)
            c *= s;
        return UniPoly(std::move(cs), var_);
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero())
            throw DivisionByZero("univariate polynomial division by zero");
        std::vector<GaussianRational> rem = coeffs_;
        if (degree() < d.degree())
            return {UniPoly({}, var_), *this};
        std::vector<GaussianRational> quot(coeffs_.size() - d.coeffs_.size() + 1);
        GaussianRational inv = GaussianRational(1) / d.leading();
        for (std::size_t k = quot.size(); k-- > 0;) {
            GaussianRational q = rem[k + d.coeffs_.size() - 1] * inv;
            if (q.is_zero())
                continue;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
                rem[k + j] -= q * d.coeffs_[j];
            quot[k] = std::move(q);
        }
        return {UniPoly(std::move(quot), var_), UniPoly(std::move(rem), var_)};
    }

    bool divides(const UniPoly& p) const { return p.divmod(*this).second.is_zero(); }

    ComplexF eval(ComplexF x) const {
        ComplexF acc(0.0, 0.0);
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * x + coeffs_[k].to_complex();
        return acc;
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * x + coeffs_[k];
        return acc;
    }

    std::vector<ComplexF> complex_coeffs() const {
        std::vector<ComplexF> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.to_complex());
        return out;
    }

    /// Structural equality of coefficients; the variable name is ignored.
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
    std::string var_ = "x";
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p / gcd(p, p'), made monic.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0)
        return p.monic();
    UniPoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

/// True when a = u*b for a nonzero unit u of Q(i).
inline bool equal_up_to_unit(const UniPoly& a, const UniPoly& b) {
    return a.monic() == b.monic();
}

/// A polynomial with Gaussian-integer coefficients scaled from a rational one.
struct IntegerForm {
    std::vector<BigInt> re; ///< lowest degree first
    std::vector<BigInt> im;
    BigInt divisor;         ///< original = (re + i*im) / divisor
};

/// Multiply by the lcm of all coefficient denominators.
inline IntegerForm integer_cleared(const UniPoly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs())
        l = boost::multiprecision::lcm(l, denominator_lcm(c));
    IntegerForm f;
    f.divisor = l;
    for (const auto& c : p.coeffs()) {
        Rational r = c.re() * l;
        Rational i = c.im() * l;
        f.re.push_back(boost::multiprecision::numerator(r));
        f.im.push_back(boost::multiprecision::numerator(i));
    }
    return f;
}

/// Primitive Gaussian-integer representative of p up to units of Q(i):
/// content 1 and, when possible, a positive real leading coefficient.
inline IntegerForm primitive_form(const UniPoly& p) {
    IntegerForm f = integer_cleared(p.monic());
    BigInt g = 0;
    for (std::size_t k = 0; k < f.re.size(); ++k) {
        g = boost::multiprecision::gcd(g, f.re[k]);
        g = boost::multiprecision::gcd(g, f.im[k]);
    }
    if (g > 1) {
        for (std::size_t k = 0; k < f.re.size(); ++k) {
            f.re[k] /= g;
            f.im[k] /= g;
        }
    }
    f.divisor = 1;
    return f;
}

namespace detail {

inline std::string gaussian_integer_str(const BigInt& re, const BigInt& im) {
    if (im == 0)
        return re.str();
    std::string imag = im == 1 ? "i" : im == -1 ? "-i" : im.str() + "*i";
    if (re == 0)
        return imag;
    return "(" + re.str() + (im > 0 ? "+" : "") + imag + ")";
}

} // namespace detail

/// Render an integer form, highest degree first. With star=true: "4*x^2-3*x+1";
/// otherwise the compact table style "4x^2-3x+1".
inline std::string format_integer_form(const IntegerForm& f, const std::string& var = "x",
                                       bool star = true) {
    std::string out;
    const std::string times = star ? "*" : "";
    for (std::size_t k = f.re.size(); k-- > 0;) {
        const BigInt& re = f.re[k];
        const BigInt& im = f.im[k];
        if (re == 0 && im == 0)
            continue;
        std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
        bool negative = im == 0 && re < 0;
        std::string c = negative ? detail::gaussian_integer_str(-re, im) : detail::gaussian_integer_str(re, im);
        if (!out.empty() || negative)
            out += negative ? "-" : "+";
        if (mono.empty())
            out += c;
        else if (c == "1")
            out += mono;
        else
            out += c + times + mono;
    }
    return out.empty() ? "0" : out;
}

} // namespace ttfal
