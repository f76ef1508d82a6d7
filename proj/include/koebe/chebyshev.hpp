#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace koebe {

/// Chebyshev polynomial of the second kind, U_n(t), evaluated by the
/// three-term recurrence U_{n+1} = 2t U_n - U_{n-1}. Valid for all real t;
/// on [-1,1] it agrees with sin((n+1)theta)/sin(theta), t = cos(theta).
inline double cheb_u(int n, double t) {
    if (n < 0) throw std::invalid_argument("cheb_u: degree must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * t;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Derivative U'_n(t) from the recurrence differentiated term by term:
/// U'_{n+1} = 2 U_n + 2t U'_n - U'_{n-1}. Stays finite at t = +-1 where the
/// trigonometric closed form degenerates.
inline double cheb_u_prime(int n, double t) {
    if (n < 0) throw std::invalid_argument("cheb_u_prime: degree must be nonnegative");
    if (n == 0) return 0.0;
    double u_prev = 1.0;
    double u_cur = 2.0 * t;
    double d_prev = 0.0;
    double d_cur = 2.0;
    for (int k = 1; k < n; ++k) {
        const double d_next = 2.0 * u_cur + 2.0 * t * d_cur - d_prev;
        const double u_next = 2.0 * t * u_cur - u_prev;
        d_prev = d_cur;
        d_cur = d_next;
        u_prev = u_cur;
        u_cur = u_next;
    }
    return d_cur;
}

/// cos(pi/(n+2)): the largest root of U_{n+1}. Strictly increasing in n,
/// contained in (0,1).
inline double cheb_node(int n) {
    if (n < 1) throw std::invalid_argument("cheb_node: n must be positive");
    return std::cos(std::numbers::pi / (n + 2));
}

/// Evaluates sum_{k=1..N} a[k-1] * U_{k-1}(t) in a single forward pass.
inline double cheb_u_series(const double* a, int n, double t) {
    if (n <= 0) return 0.0;
    double u_prev = 1.0;  // U_0
    double acc = a[0];
    if (n == 1) return acc;
    double u_cur = 2.0 * t;  // U_1
    acc += a[1] * u_cur;
    for (int k = 2; k < n; ++k) {
        const double u_next = 2.0 * t * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
        acc += a[k] * u_cur;
    }
    return acc;
}

}  // namespace koebe
