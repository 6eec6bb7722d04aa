#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ttfal/uni_poly.hpp"

namespace ttfal {

struct RootOptions {
    double tol = 1e-12;
    int max_iters = 500;
};

namespace detail {

inline ComplexF horner(const std::vector<ComplexF>& c, ComplexF z) {
    ComplexF acc(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * z + c[k];
    return acc;
}

inline std::pair<ComplexF, ComplexF> horner_d(const std::vector<ComplexF>& c, ComplexF z) {
    ComplexF p(0.0, 0.0), dp(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

/// Rounding noise of evaluating c at z: a residual below this is as good as zero.
inline double eval_noise(const std::vector<ComplexF>& c, ComplexF z) {
    double acc = 0.0, az = std::abs(z);
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * az + std::abs(c[k]);
    return 16.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(c.size()) * acc;
}

inline double round_to(double v, double q) {
    double r = std::round(v / q) * q;
    return r == 0.0 ? 0.0 : r;
}

} // namespace detail

/// Order roots by (Re, Im) after rounding away last-digit noise.
inline void canonical_sort(std::vector<ComplexF>& roots) {
    std::stable_sort(roots.begin(), roots.end(), [](const ComplexF& a, const ComplexF& b) {
        double ar = detail::round_to(a.real(), 1e-9), br = detail::round_to(b.real(), 1e-9);
        if (ar != br)
            return ar < br;
        return detail::round_to(a.imag(), 1e-9) < detail::round_to(b.imag(), 1e-9);
    });
}

/// All roots of a complex polynomial (coefficients lowest degree first) by
/// Aberth iteration from a perturbed circle of starting points, each root
/// then polished with Newton steps. A root is accepted when
/// |p(r)| <= tol * (1 + |leading|) or when |p(r)| is at the rounding noise of
/// evaluating p at r, whichever is larger.
inline std::vector<ComplexF> find_roots(std::vector<ComplexF> c, const RootOptions& opt = {}) {
    while (!c.empty() && c.back() == ComplexF(0.0, 0.0))
        c.pop_back();
    if (c.size() < 2)
        throw Error("find_roots needs a polynomial of degree >= 1");
    const double lead_abs = std::abs(c.back());
    const double bound = opt.tol * (1.0 + lead_abs);

    std::vector<ComplexF> roots;
    std::size_t zeros = 0;
    while (c.size() > 1 && c.front() == ComplexF(0.0, 0.0)) {
        c.erase(c.begin());
        ++zeros;
    }
    roots.assign(zeros, ComplexF(0.0, 0.0));
    const std::size_t n = c.size() - 1;
    if (n == 0)
        return roots;

    std::vector<ComplexF> m = c;
    for (auto& a : m)
        a /= c.back();

    // Fujiwara bound on the root moduli.
    double R = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double a = std::abs(m[n - k]);
        if (k == n)
            a /= 2.0;
        R = std::max(R, std::pow(a, 1.0 / static_cast<double>(k)));
    }
    R = std::max(2.0 * R, 1e-3);
    const ComplexF center = -m[n - 1] / static_cast<double>(n);

    std::vector<ComplexF> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = center + 0.5 * R * ComplexF(std::cos(theta), std::sin(theta));
    }

    bool converged = false;
    for (int it = 0; it < opt.max_iters && !converged; ++it) {
        converged = true;
        for (std::size_t k = 0; k < n; ++k) {
            auto [p, dp] = detail::horner_d(m, z[k]);
            if (p == ComplexF(0.0, 0.0))
                continue;
            ComplexF s(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    s += 1.0 / (z[k] - z[j]);
            ComplexF ratio = p / dp;
            ComplexF w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = ratio;
            z[k] -= w;
            if (std::abs(w) > 1e-14 * (1.0 + std::abs(z[k])) &&
                std::abs(detail::horner(m, z[k])) > detail::eval_noise(m, z[k]))
                converged = false;
        }
    }

    for (auto& r : z) {
        for (int step = 0; step < 3; ++step) {
            auto [p, dp] = detail::horner_d(c, r);
            if (dp == ComplexF(0.0, 0.0))
                break;
            ComplexF cand = r - p / dp;
            if (std::abs(detail::horner(c, cand)) < std::abs(p))
                r = cand;
            else
                break;
        }
        const double scale = 1e-14 * std::abs(r);
        r = {std::abs(r.real()) < scale ? 0.0 : r.real(), std::abs(r.imag()) < scale ? 0.0 : r.imag()};
        roots.push_back(r);
    }

    bool small = std::all_of(roots.begin() + static_cast<std::ptrdiff_t>(zeros), roots.end(), [&](const ComplexF& r) {
        return std::abs(detail::horner(c, r)) <= std::max(bound, detail::eval_noise(c, r));
    });
    canonical_sort(roots);
    if (!converged && !small)
        throw NonConvergence("root finder did not converge in " + std::to_string(opt.max_iters) + " iterations",
                             roots);
    if (!small)
        throw NonConvergence("root residual above tolerance", roots);
    return roots;
}

inline std::vector<ComplexF> find_roots(const UniPoly& p, const RootOptions& opt = {}) {
    return find_roots(p.complex_coeffs(), opt);
}

/// Nudge roots of a real polynomial onto exact conjugate pairs.
inline std::vector<ComplexF> symmetrize_conjugates(std::vector<ComplexF> roots, double tol = 1e-9) {
    std::vector<bool> done(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (done[i])
            continue;
        if (std::abs(roots[i].imag()) <= tol) {
            roots[i] = {roots[i].real(), 0.0};
            done[i] = true;
            continue;
        }
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (!done[j] && std::abs(roots[j] - std::conj(roots[i])) <= tol) {
                ComplexF avg = 0.5 * (roots[i] + std::conj(roots[j]));
                roots[i] = avg;
                roots[j] = std::conj(avg);
                done[i] = done[j] = true;
                break;
            }
    }
    canonical_sort(roots);
    return roots;
}

} // namespace ttfal
