#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace koebe {

using complexd = std::complex<double>;

namespace roots_detail {

inline complexd horner(const std::vector<complexd>& c, complexd z) {
    complexd acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline void quadratic_roots(complexd a, complexd b, complexd c, complexd& r1, complexd& r2) {
    // a z^2 + b z + c, a != 0; the larger-magnitude root first to avoid
    // cancellation, the other by Vieta.
    const complexd disc = std::sqrt(b * b - 4.0 * a * c);
    const complexd q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    if (q == complexd(0.0)) {
        r1 = r2 = complexd(0.0);
        return;
    }
    r1 = q / a;
    r2 = c / q;
}

}  // namespace roots_detail

/// All complex roots of c[0] + c[1] z + ... + c[n] z^n by Aberth-Ehrlich
/// simultaneous iteration. Roots at the origin are deflated first; degrees
/// one and two use the closed forms. Residuals are measured on the
/// monic-normalized polynomial.
inline std::vector<complexd> polynomial_roots(std::vector<complexd> coeffs, double tol = 1e-12,
                                              int max_iters = 400) {
    using namespace roots_detail;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) {
        if (coeffs.empty()) throw std::invalid_argument("polynomial_roots: zero polynomial");
        return {};
    }

    std::vector<complexd> roots;
    while (coeffs.size() > 1 && coeffs.front() == complexd(0.0)) {
        roots.push_back(0.0);
        coeffs.erase(coeffs.begin());
    }

    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }
    if (n == 2) {
        complexd r1, r2;
        quadratic_roots(coeffs[2], coeffs[1], coeffs[0], r1, r2);
        roots.push_back(r1);
        roots.push_back(r2);
        return roots;
    }

    std::vector<complexd> c(coeffs);
    for (auto& ck : c) ck /= coeffs.back();
    std::vector<complexd> dc(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) dc[static_cast<size_t>(k) - 1] = static_cast<double>(k) * c[static_cast<size_t>(k)];

    // Seeds on a circle at the geometric mean of the root moduli, scaled up,
    // with a fixed angular offset so real-axis symmetry cannot stall.
    const double r0 = 1.5 * std::pow(std::abs(c[0]), 1.0 / n);
    std::vector<complexd> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::polar(r0, 2.0 * std::numbers::pi * i / n + 0.4);

    std::vector<complexd> pv(static_cast<size_t>(n));
    for (int iter = 0; iter < max_iters; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            pv[static_cast<size_t>(i)] = horner(c, z[static_cast<size_t>(i)]);
            worst = std::max(worst, std::abs(pv[static_cast<size_t>(i)]));
        }
        if (worst < tol) break;
        for (int i = 0; i < n; ++i) {
            const complexd zi = z[static_cast<size_t>(i)];
            const complexd dv = horner(dc, zi);
            complexd newton;
            if (dv == complexd(0.0)) {
                newton = complexd(tol, tol);  // nudge off a critical point
            } else {
                newton = pv[static_cast<size_t>(i)] / dv;
            }
            complexd s = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const complexd d = zi - z[static_cast<size_t>(j)];
                if (d != complexd(0.0)) s += 1.0 / d;
            }
            const complexd denom = 1.0 - newton * s;
            const complexd w = (denom == complexd(0.0)) ? newton : newton / denom;
            z[static_cast<size_t>(i)] = zi - w;
        }
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace koebe
