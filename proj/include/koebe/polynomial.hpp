#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "koebe/chebyshev.hpp"

namespace koebe {

using complexd = std::complex<double>;

/// A polynomial p(z) = z + a_2 z^2 + ... + a_N z^N with real coefficients,
/// stored as the vector (a_1, ..., a_N). The normalization a_1 = 1 is part of
/// the type's invariant; construction rejects anything else.
class RealPolynomial {
  public:
    explicit RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("RealPolynomial: coefficient list is empty");
        if (coeffs_.front() != 1.0)
            throw std::invalid_argument("RealPolynomial: leading coefficient a_1 must equal 1");
        for (double c : coeffs_) {
            if (!std::isfinite(c))
                throw std::invalid_argument("RealPolynomial: coefficients must be finite");
        }
    }

    int degree() const { return static_cast<int>(coeffs_.size()); }

    /// a_k, 1-based; a_1 = 1.
    double coeff(int k) const {
        if (k < 1 || k > degree()) throw std::out_of_range("RealPolynomial::coeff");
        return coeffs_[static_cast<size_t>(k) - 1];
    }

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Horner evaluation of sum a_k z^k.
    complexd operator()(complexd z) const {
        complexd acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc * z;
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc * x;
    }

    friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

  private:
    std::vector<double> coeffs_;
};

/// The reflection p*(z) = -p(-z): flips the sign of every even-index
/// coefficient. An involution; preserves degree and the a_1 = 1 normalization.
inline RealPolynomial reflect(const RealPolynomial& p) {
    std::vector<double> c = p.coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RealPolynomial(std::move(c));
}

enum class FamilyKind { Suffridge, PN };

/// Suffridge polynomial coefficients
///   A_{k,N} = (N-k+1)/N * sin(pi k/(N+1)) / sin(pi/(N+1)).
/// The sine argument is folded into [0, pi/2] via k -> N+1-k, which keeps the
/// evaluation accurate for large k and makes A_{N,N} = 1/N come out exact.
inline RealPolynomial suffridge_family(int degree) {
    if (degree < 1) throw std::invalid_argument("suffridge_family: degree must be positive");
    const double pi = std::numbers::pi;
    const double s1 = std::sin(pi / (degree + 1));
    std::vector<double> coeffs(static_cast<size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
        const int kk = std::min(k, degree + 1 - k);
        const double ratio = std::sin(pi * kk / (degree + 1)) / s1;
        coeffs[static_cast<size_t>(k) - 1] = (static_cast<double>(degree - k + 1) / degree) * ratio;
    }
    return RealPolynomial(std::move(coeffs));
}

/// Coefficients B_{k,N} = U'_{N-k+1}(c_N) / U'_N(c_N) * U_{k-1}(c_N) with
/// c_N = cos(pi/(N+2)). The numerator product is formed before the division
/// so that B_1 = 1 holds exactly.
inline RealPolynomial pn_family(int degree) {
    if (degree < 1) throw std::invalid_argument("pn_family: degree must be positive");
    const double c = cheb_node(degree);
    const double denom = cheb_u_prime(degree, c);
    if (denom == 0.0 || !std::isfinite(denom))
        throw std::runtime_error("pn_family: U'_N(c_N) is degenerate");
    std::vector<double> coeffs(static_cast<size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
        const double num = cheb_u_prime(degree - k + 1, c) * cheb_u(k - 1, c);
        coeffs[static_cast<size_t>(k) - 1] = num / denom;
    }
    return RealPolynomial(std::move(coeffs));
}

inline RealPolynomial make_family(FamilyKind kind, int degree) {
    return kind == FamilyKind::Suffridge ? suffridge_family(degree) : pn_family(degree);
}

/// Closed form q_N(-1) = -(N+1)/(4N) * cos(pi/(2(N+1)))^{-2}.
inline double suffridge_at_minus_one(int degree) {
    if (degree < 1) throw std::invalid_argument("suffridge_at_minus_one: degree must be positive");
    const double c = std::cos(std::numbers::pi / (2.0 * (degree + 1)));
    return -(degree + 1.0) / (4.0 * degree) / (c * c);
}

/// Conjectured Koebe radius for degree-N univalent polynomials:
/// 1 / (4 cos^2(pi/(N+2))). Decreases from 1 toward the classical 1/4.
inline double conjectured_radius(int degree) {
    const double c = cheb_node(degree);
    return 1.0 / (4.0 * c * c);
}

/// K(z) = z/(1-z)^2, the Koebe function. Defined for z != 1.
inline complexd koebe_function(complexd z) {
    if (z == complexd(1.0, 0.0))
        throw std::domain_error("koebe_function: pole at z = 1");
    const complexd w = 1.0 - z;
    return z / (w * w);
}

}  // namespace koebe
