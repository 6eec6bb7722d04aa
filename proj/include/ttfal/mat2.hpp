#pragma once

#include <array>

#include "ttfal/multi_poly.hpp"

namespace ttfal {

/// 2x2 matrix with polynomial entries.
struct Mat2 {
    MultiPoly e11{1}, e12{0}, e21{0}, e22{1};

    static Mat2 identity() { return {}; }

    /// [0 w; 1 0], the matrix attached to a crossing label w.
    static Mat2 crossing(const MultiPoly& w) { return {MultiPoly(0), w, MultiPoly(1), MultiPoly(0)}; }

    /// [1 s*u; 0 1], the matrix attached to an edge label u traversed with sign s.
    static Mat2 edge(const MultiPoly& u, int sign = 1) {
        return {MultiPoly(1), sign >= 0 ? u : -u, MultiPoly(0), MultiPoly(1)};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
    Mat2& operator*=(const Mat2& o) { return *this = *this * o; }

    Mat2 substitute(std::string_view v, const MultiPoly& r) const {
        return {e11.substitute(v, r), e12.substitute(v, r), e21.substitute(v, r), e22.substitute(v, r)};
    }

    std::array<ComplexF, 4> eval(const Assignment& at) const {
        return {e11.eval(at), e12.eval(at), e21.eval(at), e22.eval(at)};
    }

    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
    }
};

} // namespace ttfal
