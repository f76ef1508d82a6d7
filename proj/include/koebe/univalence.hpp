#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "koebe/polynomial.hpp"
#include "koebe/roots.hpp"

namespace koebe {

enum class Verdict { UnivalentOpenDisk, NotUnivalent, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::UnivalentOpenDisk: return "univalent-open-disk";
        case Verdict::NotUnivalent: return "not-univalent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct WitnessPair {
    complexd z1;
    complexd z2;
};

/// Outcome of a numerical injectivity check on |z| < radius.
///
/// A NotUnivalent verdict always carries a witness pair of distinct points
/// (|z1 - z2| >= 1e-6) strictly inside the unit disk with equal images to
/// 1e-10. UnivalentOpenDisk means every critical point of p sits at or
/// beyond `boundary_radius` and the image of the circle |z| = boundary_radius
/// is a simple closed curve with self-approach `injectivity_margin`.
struct UnivalenceReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<double> derivative_root_moduli;  // ascending
    double boundary_radius = 0.0;
    double injectivity_margin = 0.0;
    std::optional<WitnessPair> witness;
};

namespace curve_detail {

enum class CurveStatus { Simple, Crossing, Ambiguous };

struct CurveCheck {
    CurveStatus status = CurveStatus::Simple;
    double margin = 0.0;
    int seg_a = -1;
    int seg_b = -1;
    double frac_a = 0.0;  // fractional position of the crossing along seg_a
    double frac_b = 0.0;
};

inline double cross2(complexd u, complexd v) { return u.real() * v.imag() - u.imag() * v.real(); }

inline double point_segment_dist(complexd p, complexd a, complexd b) {
    const complexd ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

inline double segment_gap(complexd a, complexd b, complexd c, complexd d) {
    return std::min(std::min(point_segment_dist(a, c, d), point_segment_dist(b, c, d)),
                    std::min(point_segment_dist(c, a, b), point_segment_dist(d, a, b)));
}

/// Self-intersection test for the closed polyline pts[0..M-1] -> pts[0].
/// Non-adjacent segment pairs closer than `ambig_band` (including grazing
/// crossings) make the result Ambiguous instead of a verdict either way.
/// `margin` reports the smallest non-adjacent approach, capped at twice the
/// longest segment (pairs farther apart in x are never candidates for the
/// minimum below that cap).
inline CurveCheck check_closed_polyline(const std::vector<complexd>& pts, double ambig_band) {
    const int m = static_cast<int>(pts.size());
    CurveCheck out;

    double max_len = 0.0;
    std::vector<int> order(static_cast<size_t>(m));
    struct Box {
        double x0, x1, y0, y1;
    };
    std::vector<Box> box(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const complexd a = pts[static_cast<size_t>(i)];
        const complexd b = pts[static_cast<size_t>((i + 1) % m)];
        box[static_cast<size_t>(i)] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                                       std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag())};
        max_len = std::max(max_len, std::abs(b - a));
        order[static_cast<size_t>(i)] = i;
    }
    const double band = 2.0 * max_len;
    out.margin = band;

    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return box[static_cast<size_t>(i)].x0 < box[static_cast<size_t>(j)].x0; });

    std::vector<int> active;
    for (int oi : order) {
        const Box& sb = box[static_cast<size_t>(oi)];
        // Drop segments that ended too far to the left to matter.
        std::erase_if(active, [&](int t) { return box[static_cast<size_t>(t)].x1 < sb.x0 - band; });

        const complexd a = pts[static_cast<size_t>(oi)];
        const complexd b = pts[static_cast<size_t>((oi + 1) % m)];
        for (int tj : active) {
            const int gap_idx = std::abs(oi - tj);
            if (gap_idx == 1 || gap_idx == m - 1) continue;  // share an endpoint
            const Box& tb = box[static_cast<size_t>(tj)];
            if (tb.y0 > sb.y1 + band || tb.y1 < sb.y0 - band) continue;

            const complexd c = pts[static_cast<size_t>(tj)];
            const complexd d = pts[static_cast<size_t>((tj + 1) % m)];

            const double d1 = cross2(b - a, c - a);
            const double d2 = cross2(b - a, d - a);
            const double d3 = cross2(d - c, a - c);
            const double d4 = cross2(d - c, b - c);
            const bool proper = (d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0) && d1 != 0 && d2 != 0 &&
                                d3 != 0 && d4 != 0;
            const double gap = segment_gap(a, b, c, d);

            if (proper) {
                if (gap <= ambig_band) {
                    out.status = CurveStatus::Ambiguous;
                    out.seg_a = oi;
                    out.seg_b = tj;
                    out.margin = 0.0;
                    return out;
                }
                const double denom = cross2(b - a, d - c);
                out.status = CurveStatus::Crossing;
                out.seg_a = oi;
                out.seg_b = tj;
                out.frac_a = cross2(c - a, d - c) / denom;
                out.frac_b = cross2(c - a, b - a) / denom;
                out.margin = 0.0;
                return out;
            }
            if (gap <= ambig_band) {
                out.status = CurveStatus::Ambiguous;
                out.seg_a = oi;
                out.seg_b = tj;
                out.margin = gap;
                return out;
            }
            out.margin = std::min(out.margin, gap);
        }
        active.push_back(oi);
    }
    return out;
}

}  // namespace curve_detail

namespace univalence_detail {

inline complexd eval_p(const std::vector<complexd>& a, complexd z) {
    complexd acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc * z;
}

inline std::vector<complexd> derivative_coeffs(const std::vector<complexd>& a) {
    std::vector<complexd> dc(a.size());
    for (size_t j = 0; j < a.size(); ++j) dc[j] = static_cast<double>(j + 1) * a[j];
    return dc;
}

inline complexd eval_dp(const std::vector<complexd>& dc, complexd z) {
    complexd acc = 0.0;
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline bool witness_valid(const std::vector<complexd>& a, const WitnessPair& w) {
    return std::abs(w.z1) < 1.0 && std::abs(w.z2) < 1.0 && std::abs(w.z1 - w.z2) >= 1e-6 &&
           std::abs(eval_p(a, w.z1) - eval_p(a, w.z2)) <= 1e-10;
}

/// Two preimages of a common value near a critical point rho of p: take
/// z1 = rho + h and recover the partner preimage among the roots of
/// p(z) - p(z1). Returns nothing if no partner survives validation.
inline std::optional<WitnessPair> witness_near_critical_point(const std::vector<complexd>& a,
                                                              complexd rho) {
    const double h0 = std::min(1e-4, 0.25 * (1.0 - std::abs(rho)));
    if (h0 <= 0.0) return std::nullopt;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const complexd dir = std::polar(1.0, 0.3 + attempt * std::numbers::pi / 2.0);
        const complexd z1 = rho + h0 * dir;
        if (std::abs(z1) >= 1.0) continue;
        const complexd w = eval_p(a, z1);

        std::vector<complexd> shifted(a.size() + 1);
        shifted[0] = -w;
        for (size_t k = 0; k < a.size(); ++k) shifted[k + 1] = a[k];
        std::vector<complexd> cand;
        try {
            cand = polynomial_roots(shifted);
        } catch (const std::exception&) {
            continue;
        }

        std::optional<complexd> best;
        for (complexd z2 : cand) {
            if (std::abs(z2) >= 1.0) continue;
            if (std::abs(z2 - z1) < 1e-6) continue;
            if (!best || std::abs(z2 - rho) < std::abs(*best - rho)) best = z2;
        }
        if (!best) continue;
        WitnessPair pair{z1, *best};
        if (witness_valid(a, pair)) return pair;
    }
    return std::nullopt;
}

/// Sharpens an approximate boundary self-crossing into an exact pair of
/// circle preimages: Newton on F(theta, phi) = p(r e^{i theta}) - p(r e^{i phi}).
inline std::optional<WitnessPair> refine_curve_crossing(const std::vector<complexd>& a, double radius,
                                                        double theta, double phi) {
    const std::vector<complexd> dc = derivative_coeffs(a);
    for (int it = 0; it < 80; ++it) {
        const complexd z1 = std::polar(radius, theta);
        const complexd z2 = std::polar(radius, phi);
        const complexd f = eval_p(a, z1) - eval_p(a, z2);
        if (std::abs(f) <= 1e-12) break;
        const complexd j1 = complexd(0.0, 1.0) * z1 * eval_dp(dc, z1);
        const complexd j2 = -complexd(0.0, 1.0) * z2 * eval_dp(dc, z2);
        const double det = j1.real() * j2.imag() - j1.imag() * j2.real();
        if (det == 0.0) return std::nullopt;
        const double dtheta = (-f.real() * j2.imag() + f.imag() * j2.real()) / det;
        const double dphi = (-j1.real() * f.imag() + j1.imag() * f.real()) / det;
        theta += dtheta;
        phi += dphi;
        if (!std::isfinite(theta) || !std::isfinite(phi)) return std::nullopt;
    }
    WitnessPair pair{std::polar(radius, theta), std::polar(radius, phi)};
    if (!witness_valid(a, pair)) return std::nullopt;
    return pair;
}

}  // namespace univalence_detail

/// Two-stage univalence check on the disk |z| < radius for coefficients
/// (a_1, ..., a_N) of p(z) = sum a_k z^k, a_1 != 0. Complex coefficients are
/// accepted. Stage 1 locates the critical points of p; any one strictly
/// inside the test circle is a certificate of non-injectivity and is turned
/// into a witness pair. Stage 2 polygonalizes the image of |z| = radius and
/// requires it to be a simple closed curve; tolerance-ambiguous geometry
/// yields Inconclusive rather than a guess.
inline UnivalenceReport check_univalent(const std::vector<complexd>& coeffs, double radius,
                                        int curve_samples) {
    using namespace univalence_detail;
    if (coeffs.empty() || coeffs.front() == complexd(0.0))
        throw std::invalid_argument("check_univalent: a_1 must be nonzero");
    if (!(radius >= 0.9 && radius < 1.0))
        throw std::invalid_argument("check_univalent: radius must lie in [0.9, 1)");
    if (curve_samples < 64 * static_cast<int>(coeffs.size()))
        throw std::invalid_argument("check_univalent: curve_samples must be at least 64*degree");

    std::vector<complexd> a = coeffs;
    while (a.size() > 1 && a.back() == complexd(0.0)) a.pop_back();
    const int deg = static_cast<int>(a.size());

    UnivalenceReport report;
    report.boundary_radius = radius;

    // Necessary condition |a_N| <= |a_1|/N for univalence in the disk; a
    // violation must still be confirmed by explicit stage evidence below.
    const bool must_reject =
        deg >= 2 && std::abs(a.back()) * deg > std::abs(a.front()) * (1.0 + 1e-12);

    // Stage 1: critical points.
    std::vector<complexd> crit;
    if (deg >= 2) {
        crit = polynomial_roots(derivative_coeffs(a));
        for (complexd r : crit) report.derivative_root_moduli.push_back(std::abs(r));
        std::sort(report.derivative_root_moduli.begin(), report.derivative_root_moduli.end());
    }
    std::optional<complexd> inner_crit;
    for (complexd r : crit) {
        if (std::abs(r) < radius && (!inner_crit || std::abs(r) < std::abs(*inner_crit))) inner_crit = r;
    }
    if (inner_crit) {
        if (auto w = witness_near_critical_point(a, *inner_crit)) {
            report.verdict = Verdict::NotUnivalent;
            report.witness = *w;
            return report;
        }
        report.verdict = Verdict::Inconclusive;
        return report;
    }

    // Stage 2: the image of |z| = radius must be a simple closed curve.
    std::vector<complexd> pts(static_cast<size_t>(curve_samples));
    for (int k = 0; k < curve_samples; ++k)
        pts[static_cast<size_t>(k)] = eval_p(a, std::polar(radius, 2.0 * std::numbers::pi * k / curve_samples));
    const auto check = curve_detail::check_closed_polyline(pts, 1e-10);

    if (check.status == curve_detail::CurveStatus::Crossing) {
        const double theta = 2.0 * std::numbers::pi * (check.seg_a + check.frac_a) / curve_samples;
        const double phi = 2.0 * std::numbers::pi * (check.seg_b + check.frac_b) / curve_samples;
        if (auto w = refine_curve_crossing(a, radius, theta, phi)) {
            report.verdict = Verdict::NotUnivalent;
            report.witness = *w;
            return report;
        }
        report.verdict = Verdict::Inconclusive;
        return report;
    }
    if (check.status == curve_detail::CurveStatus::Ambiguous) {
        report.verdict = Verdict::Inconclusive;
        return report;
    }

    if (must_reject) {
        // The coefficient bound rules out univalence in the full open disk
        // even though |z| <= radius looks clean: the offending critical point
        // lives in the ring (radius, 1).
        for (complexd r : crit) {
            if (std::abs(r) < 1.0) {
                if (auto w = witness_near_critical_point(a, r)) {
                    report.verdict = Verdict::NotUnivalent;
                    report.witness = *w;
                    return report;
                }
            }
        }
        report.verdict = Verdict::Inconclusive;
        return report;
    }

    report.verdict = Verdict::UnivalentOpenDisk;
    report.injectivity_margin = check.margin;
    return report;
}

inline UnivalenceReport check_univalent(const RealPolynomial& p, double radius, int curve_samples) {
    std::vector<complexd> a(p.coeffs().begin(), p.coeffs().end());
    return check_univalent(a, radius, curve_samples);
}

inline int escalation_samples(int degree, double radius) {
    const double raw = std::ceil(64.0 * degree / std::sqrt(1.0 - radius));
    if (raw > 16'000'000.0)
        throw std::invalid_argument("escalation sample count too large for this radius/degree");
    return std::max(64 * degree, static_cast<int>(raw));
}

/// Runs the check at each radius in ascending order, scaling the curve
/// sampling like (1-r)^{-1/2}. A NotUnivalent verdict at any radius is
/// already conclusive and returns immediately; otherwise the report from the
/// largest radius with a definitive verdict wins.
inline UnivalenceReport check_univalent_escalating(const std::vector<complexd>& coeffs,
                                                   const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("check_univalent_escalating: no radii");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= 0.9 && radii[i] < 1.0))
            throw std::invalid_argument("check_univalent_escalating: radii must lie in [0.9, 1)");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("check_univalent_escalating: radii must be ascending");
    }
    const int degree = static_cast<int>(coeffs.size());
    std::optional<UnivalenceReport> best;
    UnivalenceReport last;
    for (double r : radii) {
        last = check_univalent(coeffs, r, escalation_samples(degree, r));
        if (last.verdict == Verdict::NotUnivalent) return last;
        if (last.verdict == Verdict::UnivalentOpenDisk) best = last;
    }
    return best ? *best : last;
}

inline UnivalenceReport check_univalent_escalating(const RealPolynomial& p,
                                                   const std::vector<double>& radii) {
    std::vector<complexd> a(p.coeffs().begin(), p.coeffs().end());
    return check_univalent_escalating(a, radii);
}

}  // namespace koebe
