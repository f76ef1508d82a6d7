#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "koebe/polynomial.hpp"

namespace koebe {

/// Result of minimizing |p| over the unit circle.
///
/// `minimizers` holds the boundary points attaining the minimum (within the
/// requested tolerance), deduplicated, points with nonnegative imaginary part
/// first and conjugates following them. `whole_circle` marks the degenerate
/// constant-modulus case (the identity polynomial), where no isolated
/// minimizer exists and `refined` stays false.
struct MinModResult {
    double value = 0.0;
    std::vector<complexd> minimizers;
    bool refined = false;
    bool whole_circle = false;
};

namespace detail {

/// Golden-section minimization on [lo, hi]. Returns the abscissa of the best
/// probed point; `iters` halvings shrink the bracket by ~0.618 per step.
template <class F>
double golden_min(F&& f, double lo, double hi, int iters = 60) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

/// Value |p(z)|^2 and its first two theta-derivatives at z = e^{i theta}.
struct CircleMod2 {
    double value;
    double d1;
    double d2;
};

inline CircleMod2 circle_mod2_derivs(const RealPolynomial& p, double theta) {
    const complexd z = std::polar(1.0, theta);
    const auto& a = p.coeffs();
    complexd pv = 0.0, dv = 0.0;
    for (int k = p.degree(); k >= 1; --k) {
        const double ak = a[static_cast<size_t>(k) - 1];
        dv = dv * z + static_cast<double>(k) * ak;
        pv = pv * z + ak;
    }
    pv *= z;  // p(z)
    complexd d2v = 0.0;  // p''(z)
    for (int k = p.degree(); k >= 2; --k)
        d2v = d2v * z + static_cast<double>(k) * static_cast<double>(k - 1) * a[static_cast<size_t>(k) - 1];
    // g(theta) = |p|^2; g' = 2 Re(conj(p) i z p'); g'' = 2(|p'|^2 - Re(conj(p)(z p' + z^2 p''))).
    const complexd izp = complexd(0.0, 1.0) * z * dv;
    CircleMod2 r;
    r.value = std::norm(pv);
    r.d1 = 2.0 * (std::conj(pv) * izp).real();
    r.d2 = 2.0 * (std::norm(dv) - (std::conj(pv) * (z * dv + z * z * d2v)).real());
    return r;
}

/// Newton polish of a circle-modulus minimum located by golden section. The
/// derivative-free search stalls at sqrt(eps) in theta; a few Newton steps on
/// g'(theta) recover full precision. Falls back to the input on any sign of
/// trouble (wrong curvature, leaving the bracket).
inline double polish_circle_min(const RealPolynomial& p, double theta0, double halfwidth) {
    double theta = theta0;
    for (int i = 0; i < 8; ++i) {
        const CircleMod2 g = circle_mod2_derivs(p, theta);
        if (!(g.d2 > 0.0)) return theta0;
        const double step = g.d1 / g.d2;
        theta -= step;
        if (std::abs(theta - theta0) > halfwidth) return theta0;
        if (std::abs(step) < 1e-15) break;
    }
    const CircleMod2 polished = circle_mod2_derivs(p, theta);
    const CircleMod2 original = circle_mod2_derivs(p, theta0);
    return polished.value <= original.value + 1e-15 ? theta : theta0;
}

}  // namespace detail

/// Global minimum of |p(e^{i theta})| over the circle.
///
/// Real coefficients give |p(conj z)| = |p(z)|, so the search runs over
/// theta in [0, pi] on `grid_size` samples of |p|^2, followed by
/// golden-section refinement around every grid-local minimum. Minimizers
/// within `tol` of the best value are all reported.
inline MinModResult min_modulus(const RealPolynomial& p, int grid_size, double tol) {
    if (grid_size < 8 * p.degree())
        throw std::invalid_argument("min_modulus: grid_size must be at least 8*degree");
    if (!(tol > 0.0)) throw std::invalid_argument("min_modulus: tol must be positive");

    const double pi = std::numbers::pi;
    auto mod2 = [&](double theta) { return std::norm(p(std::polar(1.0, theta))); };

    const int m = grid_size;
    const double step = pi / (m - 1);
    std::vector<double> g(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) g[static_cast<size_t>(i)] = mod2(i * step);

    // Constant-modulus degenerate case: variance of the sampled values.
    {
        double mean = 0.0;
        for (int i = 0; i < m; ++i) mean += std::sqrt(g[static_cast<size_t>(i)]);
        mean /= m;
        double var = 0.0;
        for (int i = 0; i < m; ++i) {
            const double d = std::sqrt(g[static_cast<size_t>(i)]) - mean;
            var += d * d;
        }
        var /= m;
        if (var < 1e-14) {
            MinModResult r;
            r.value = mean;
            r.refined = false;
            r.whole_circle = true;
            return r;
        }
    }

    // |p|^2 extends evenly across theta = 0 and theta = pi, so the virtual
    // neighbors of the endpoints are g[1] and g[m-2].
    auto at = [&](int i) {
        if (i < 0) i = -i;
        if (i >= m) i = 2 * (m - 1) - i;
        return g[static_cast<size_t>(i)];
    };

    struct Local {
        double theta;
        double value;  // |p|, not squared
    };
    std::vector<Local> locals;
    for (int i = 0; i < m; ++i) {
        if (at(i) <= at(i - 1) && at(i) <= at(i + 1)) {
            const double lo = (i - 1) * step;
            const double hi = (i + 1) * step;
            double t = detail::golden_min(mod2, lo, hi);
            t = detail::polish_circle_min(p, t, hi - lo);
            locals.push_back({t, std::sqrt(std::max(0.0, mod2(t)))});
        }
    }

    std::sort(locals.begin(), locals.end(), [](const Local& a, const Local& b) {
        return a.value != b.value ? a.value < b.value : a.theta < b.theta;
    });

    MinModResult r;
    r.value = locals.front().value;
    r.refined = true;

    // Keep minima within tol of the best; cluster by arc distance.
    constexpr double kCluster = 1e-6;
    std::vector<double> thetas;
    for (const Local& l : locals) {
        if (l.value > r.value + tol) break;
        bool dup = false;
        for (double t : thetas) {
            if (std::abs(t - l.theta) <= kCluster) {
                dup = true;
                break;
            }
        }
        if (!dup) thetas.push_back(l.theta);
    }
    std::sort(thetas.begin(), thetas.end());

    // Fold refined angles into [0, pi]; points off the real axis have an
    // implied conjugate minimizer, reported explicitly after the upper ones.
    std::vector<complexd> upper;
    for (double t : thetas) upper.push_back(std::polar(1.0, std::clamp(std::abs(t), 0.0, pi)));
    for (const complexd& z : upper) r.minimizers.push_back(z);
    for (const complexd& z : upper) {
        if (std::abs(z.imag()) > 1e-12) r.minimizers.push_back(std::conj(z));
    }
    return r;
}

inline MinModResult min_modulus(const RealPolynomial& p) {
    return min_modulus(p, std::max(4096, 8 * p.degree()), 1e-10);
}

/// min{ Re p(zeta) : zeta on the unit circle, Im p(zeta) = 0 }.
///
/// With z = e^{i theta}, Im p = sin(theta) * Q(cos(theta)) where
/// Q(t) = sum a_k U_{k-1}(t); the real crossings are the roots of Q in
/// (-1,1) together with z = +-1. Roots are located by a sign-change scan
/// (64*degree samples) followed by bisection.
inline double mu_functional(const RealPolynomial& p) {
    const auto& a = p.coeffs();
    const int n = p.degree();
    auto q = [&](double t) { return cheb_u_series(a.data(), n, t); };

    std::vector<double> crossings{-1.0, 1.0};
    const int scan = 64 * n;
    double t_prev = -1.0;
    double q_prev = q(t_prev);
    for (int j = 1; j <= scan; ++j) {
        const double t = -1.0 + 2.0 * j / scan;
        const double qt = q(t);
        if (q_prev == 0.0 && t_prev > -1.0) crossings.push_back(t_prev);
        if (q_prev * qt < 0.0) {
            double lo = t_prev, hi = t;
            double q_lo = q_prev;
            while (hi - lo > 1e-13) {
                const double mid = 0.5 * (lo + hi);
                const double q_mid = q(mid);
                if (q_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((q_lo < 0.0) == (q_mid < 0.0)) {
                    lo = mid;
                    q_lo = q_mid;
                } else {
                    hi = mid;
                }
            }
            crossings.push_back(0.5 * (lo + hi));
        }
        t_prev = t;
        q_prev = qt;
    }

    double best = std::numeric_limits<double>::infinity();
    for (double t : crossings) {
        const double theta = std::acos(std::clamp(t, -1.0, 1.0));
        best = std::min(best, p(std::polar(1.0, theta)).real());
    }
    return best;
}

/// Samples the image curve p(e^{2 pi i k / samples}), k = 0..samples-1.
inline std::vector<complexd> boundary_curve(const RealPolynomial& p, int samples) {
    if (samples < 16) throw std::invalid_argument("boundary_curve: samples must be at least 16");
    std::vector<complexd> pts;
    pts.reserve(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k)
        pts.push_back(p(std::polar(1.0, 2.0 * std::numbers::pi * k / samples)));
    return pts;
}

}  // namespace koebe
