#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttfal/errors.hpp"

namespace ttfal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using ComplexF = std::complex<double>;

/// Exact element re + im*i of Q(i). Components are always in lowest terms
/// with positive denominators (guaranteed by the rational backend).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational fraction(long long num, long long den) { return {Rational(num, den)}; }
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero())
            throw DivisionByZero("division of Gaussian rational by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    ComplexF to_complex() const {
        return {re_.convert_to<double>(), im_.convert_to<double>()};
    }

    /// Human-readable form: "3/8", "-1/4*i", "(1/2+3*i)".
    std::string to_string() const {
        auto rat = [](const Rational& q) {
            std::string s = boost::multiprecision::numerator(q).str();
            if (boost::multiprecision::denominator(q) != 1)
                s += "/" + boost::multiprecision::denominator(q).str();
            return s;
        };
        if (im_ == 0)
            return rat(re_);
        std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : rat(im_) + "*i";
        if (re_ == 0)
            return imag;
        return "(" + rat(re_) + (im_ > 0 ? "+" : "") + imag + ")";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.to_string();
}

/// Least common multiple of the denominators of both components.
inline BigInt denominator_lcm(const GaussianRational& g) {
    return boost::multiprecision::lcm(boost::multiprecision::denominator(g.re()),
                                      boost::multiprecision::denominator(g.im()));
}

} // namespace ttfal
