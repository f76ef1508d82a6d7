#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/circle.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

/// A real cubic z + a2 z^2 + a3 z^3, identified with the plane point (a2, a3).
struct CubicPoint {
    double a2 = 0.0;
    double a3 = 0.0;
};

inline RealPolynomial cubic_polynomial(CubicPoint q) {
    return RealPolynomial({1.0, q.a2, q.a3});
}

/// Where a cubic attains its minimum modulus on the unit circle: TypeI at
/// z = +-1, TypeII at a conjugate pair x0 +- i y0 interior to the circle arc.
enum class CubicType { TypeI, TypeII };

/// Pieces of the univalence-region boundary. G1: lower tangent line segment,
/// G2: ellipse arc, G3: top line segment; *R variants are their mirror images
/// across the a3 axis.
enum class SegmentId { G1, G2, G3, G1R, G2R, G3R };

inline constexpr SegmentId kAllSegments[] = {SegmentId::G1,  SegmentId::G2,  SegmentId::G3,
                                             SegmentId::G1R, SegmentId::G2R, SegmentId::G3R};

inline const char* segment_name(SegmentId id) {
    switch (id) {
        case SegmentId::G1: return "G1";
        case SegmentId::G2: return "G2";
        case SegmentId::G3: return "G3";
        case SegmentId::G1R: return "G1R";
        case SegmentId::G2R: return "G2R";
        case SegmentId::G3R: return "G3R";
    }
    return "?";
}

struct GammaSegment {
    SegmentId id;
    double s_min;
    double s_max;
};

namespace cubic_detail {
inline constexpr double kA3Top = 1.0 / 3.0;            // ordinate of the top edge
inline constexpr double kG1A2Max = 0.8;                // a2 at the line/arc junction
inline constexpr double kG2TMin = 0.2;                 // arc ordinate range
inline const double kG3A2Max = 2.0 * std::sqrt(2.0) / 3.0;  // a2 at the arc/top junction
// Boundary coordinates are routinely quoted to seven significant digits;
// this slack keeps such truncations of genuine boundary points inside.
inline constexpr double kMembershipSlack = 1e-7;
}  // namespace cubic_detail

inline GammaSegment gamma_segment(SegmentId id) {
    using namespace cubic_detail;
    switch (id) {
        case SegmentId::G1:
        case SegmentId::G1R: return {id, 0.0, kG1A2Max};
        case SegmentId::G2:
        case SegmentId::G2R: return {id, kG2TMin, kA3Top};
        case SegmentId::G3:
        case SegmentId::G3R: return {id, 0.0, kG3A2Max};
    }
    throw std::invalid_argument("gamma_segment: unknown id");
}

/// Boundary point at parameter s. G1/G3 are parametrized by a2, G2 by the
/// ordinate t (a2 = 2 sqrt(t(1-t)) on the ellipse arc).
inline CubicPoint gamma_point(const GammaSegment& seg, double s) {
    if (s < seg.s_min || s > seg.s_max)
        throw std::invalid_argument("gamma_point: parameter outside segment range");
    CubicPoint q;
    switch (seg.id) {
        case SegmentId::G1:
        case SegmentId::G1R: q = {s, (2.0 * s - 1.0) / 3.0}; break;
        case SegmentId::G2:
        case SegmentId::G2R: q = {2.0 * std::sqrt(s * (1.0 - s)), s}; break;
        case SegmentId::G3:
        case SegmentId::G3R: q = {s, cubic_detail::kA3Top}; break;
    }
    if (seg.id == SegmentId::G1R || seg.id == SegmentId::G2R || seg.id == SegmentId::G3R)
        q.a2 = -q.a2;
    return q;
}

inline CubicPoint gamma_point(SegmentId id, double s) { return gamma_point(gamma_segment(id), s); }

/// Whether z + a2 z^2 + a3 z^3 is univalent on the open unit disk.
///
/// The region is symmetric in a2; with b = |a2| the conditions are
///   a3 <= 1/3,  2b - 3a3 <= 1,  and for b > 4/5 additionally the
/// inside-the-ellipse condition b^2 <= 4 a3 (1 - a3).
/// Each inequality carries a small slack so that boundary points given to
/// seven digits (and exact boundary parametrizations) classify as members;
/// the region is closed, its boundary belongs to it.
inline bool in_univalence_region(CubicPoint q) {
    using namespace cubic_detail;
    const double b = std::abs(q.a2);
    if (q.a3 > kA3Top + kMembershipSlack) return false;
    if (2.0 * b - 3.0 * q.a3 > 1.0 + kMembershipSlack) return false;
    if (b <= kG1A2Max) return true;
    return b * b <= 4.0 * q.a3 * (1.0 - q.a3) + kMembershipSlack;
}

/// |p(x+iy)|^2 on the unit circle as a quadratic in x = Re z:
/// Phi(x) = 1 + a2^2 + a3^2 - 2 a3 + 2 a2 (1 + a3) x + 4 a3 x^2,
/// extended to all real x.
inline double circle_modulus_sq(CubicPoint q, double x) {
    return 1.0 + q.a2 * q.a2 + q.a3 * q.a3 - 2.0 * q.a3 + 2.0 * q.a2 * (1.0 + q.a3) * x +
           4.0 * q.a3 * x * x;
}

/// Critical abscissa x0 = -a2 (1 + a3) / (4 a3) of Phi. Requires a3 != 0
/// (otherwise Phi is affine and has no interior critical point).
inline double critical_abscissa(CubicPoint q) {
    if (q.a3 == 0.0) throw std::domain_error("critical_abscissa: a3 must be nonzero");
    return -q.a2 * (1.0 + q.a3) / (4.0 * q.a3);
}

/// TypeII exactly when a3 > 0 and the critical abscissa lies strictly inside
/// (-1, 1); the endpoint cases x0 = +-1 and everything with a3 <= 0 are TypeI.
inline CubicType classify(CubicPoint q) {
    if (q.a3 <= 0.0) return CubicType::TypeI;
    const double x0 = critical_abscissa(q);
    return (x0 > -1.0 && x0 < 1.0) ? CubicType::TypeII : CubicType::TypeI;
}

/// Exact minimum of |p| over the unit circle:
///   TypeII: |1 - a3| sqrt(1 - a2^2/(4 a3)),  TypeI: min(|p(-1)|, |p(1)|).
inline double min_modulus_closed_form(CubicPoint q) {
    if (classify(q) == CubicType::TypeII) {
        const double s = 1.0 - q.a2 * q.a2 / (4.0 * q.a3);
        return std::abs(1.0 - q.a3) * std::sqrt(std::max(0.0, s));
    }
    return std::min(std::abs(1.0 - q.a2 + q.a3), std::abs(1.0 + q.a2 + q.a3));
}

/// The ordinate where the minimum-modulus type flips along the ellipse arc:
/// the unique positive root of t^3 + t^2 + 3t - 1, located in (1/5, 1/3).
inline double type_transition_ordinate() {
    auto f = [](double t) { return ((t + 1.0) * t + 3.0) * t - 1.0; };
    double lo = cubic_detail::kG2TMin, hi = cubic_detail::kA3Top;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct SegmentInfimum {
    double value;
    CubicPoint minimizer;
};

/// Closed-form infimum of the circle minimum modulus along one boundary
/// segment, with its unique minimizer.
///   G1: m = (2 - a2)/3, minimized at a2 = 4/5.
///   G2: m = 1 - 2 sqrt(t(1-t)) + t on the TypeI part, sqrt(t)(1-t) on the
///       TypeII part; the minimum sits at t* = (1 - 1/sqrt(5))/2.
///   G3: m = sqrt(4 - 3 a2^2)/3, minimized at a2 = 2 sqrt(2)/3.
inline SegmentInfimum gamma_infimum(SegmentId id) {
    using namespace cubic_detail;
    SegmentInfimum r{};
    switch (id) {
        case SegmentId::G1:
        case SegmentId::G1R: {
            r.value = (2.0 - kG1A2Max) / 3.0;
            r.minimizer = {kG1A2Max, (2.0 * kG1A2Max - 1.0) / 3.0};
            break;
        }
        case SegmentId::G2:
        case SegmentId::G2R: {
            const double t_star = 0.5 * (1.0 - 1.0 / std::sqrt(5.0));
            const double a2 = 2.0 * std::sqrt(t_star * (1.0 - t_star));
            r.value = 1.0 - a2 + t_star;
            r.minimizer = {a2, t_star};
            break;
        }
        case SegmentId::G3:
        case SegmentId::G3R: {
            r.value = std::sqrt(4.0 - 3.0 * kG3A2Max * kG3A2Max) / 3.0;
            r.minimizer = {kG3A2Max, kA3Top};
            break;
        }
    }
    if (id == SegmentId::G1R || id == SegmentId::G2R || id == SegmentId::G3R)
        r.minimizer.a2 = -r.minimizer.a2;
    return r;
}

struct ScanEntry {
    CubicPoint point;
    double m = 0.0;
    SegmentId segment = SegmentId::G1;
    CubicType type = CubicType::TypeI;
};

/// A sampled point where the closed-form and grid-refined minimum modulus
/// disagree beyond 1e-8. Reported, never fatal.
struct RouteMismatch {
    SegmentId segment;
    CubicPoint point;
    double closed_form;
    double numeric;
};

struct ScanResult {
    std::vector<ScanEntry> entries;  // ascending by m
    std::vector<RouteMismatch> warnings;
    double max_route_gap = 0.0;  // worst |closed_form - numeric| seen
};

namespace cubic_detail {

struct SegmentScan {
    std::vector<ScanEntry> entries;
    std::vector<RouteMismatch> warnings;
    double max_gap = 0.0;
};

inline SegmentScan scan_segment(SegmentId id, int resolution) {
    const GammaSegment seg = gamma_segment(id);
    SegmentScan out;
    out.entries.reserve(static_cast<size_t>(resolution) + 2);

    auto m_at = [&](double s) { return min_modulus_closed_form(gamma_point(seg, s)); };
    auto push = [&](double s) {
        const CubicPoint q = gamma_point(seg, s);
        const double closed = min_modulus_closed_form(q);
        const double numeric = min_modulus(cubic_polynomial(q), 64, 1e-10).value;
        const double gap = std::abs(closed - numeric);
        out.max_gap = std::max(out.max_gap, gap);
        if (gap > 1e-8) out.warnings.push_back({id, q, closed, numeric});
        out.entries.push_back({q, closed, id, classify(q)});
        return closed;
    };

    std::vector<double> params(static_cast<size_t>(resolution));
    std::vector<double> values(static_cast<size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double u = static_cast<double>(i) / (resolution - 1);
        params[static_cast<size_t>(i)] = std::lerp(seg.s_min, seg.s_max, u);
        values[static_cast<size_t>(i)] = push(params[static_cast<size_t>(i)]);
    }

    // Refine every grid-local minimum along the parameter so the reported
    // minimizers are exact, not grid-snapped.
    for (int i = 0; i < resolution; ++i) {
        const double v = values[static_cast<size_t>(i)];
        const bool left_ok = i == 0 || v <= values[static_cast<size_t>(i) - 1];
        const bool right_ok = i == resolution - 1 || v <= values[static_cast<size_t>(i) + 1];
        if (!(left_ok && right_ok)) continue;
        const double lo = params[static_cast<size_t>(std::max(0, i - 1))];
        const double hi = params[static_cast<size_t>(std::min(resolution - 1, i + 1))];
        if (hi <= lo) continue;
        const double s = detail::golden_min(m_at, lo, hi);
        push(std::clamp(s, seg.s_min, seg.s_max));
    }
    return out;
}

}  // namespace cubic_detail

/// Sweeps all six boundary segments at `resolution` samples each, evaluating
/// the circle minimum both in closed form and by the grid search, and returns
/// every sampled point ranked by m (ascending; ties resolved toward positive
/// a2). Route disagreements beyond 1e-8 surface as warnings.
inline ScanResult extremal_scan(int resolution) {
    if (resolution < 100) throw std::invalid_argument("extremal_scan: resolution must be >= 100");

    std::vector<std::future<cubic_detail::SegmentScan>> jobs;
    for (SegmentId id : kAllSegments)
        jobs.push_back(std::async(std::launch::async,
                                  [id, resolution] { return cubic_detail::scan_segment(id, resolution); }));

    ScanResult result;
    for (auto& job : jobs) {
        cubic_detail::SegmentScan part = job.get();
        result.entries.insert(result.entries.end(), part.entries.begin(), part.entries.end());
        result.warnings.insert(result.warnings.end(), part.warnings.begin(), part.warnings.end());
        result.max_route_gap = std::max(result.max_route_gap, part.max_gap);
    }

    std::sort(result.entries.begin(), result.entries.end(), [](const ScanEntry& a, const ScanEntry& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.point.a2 != b.point.a2) return a.point.a2 > b.point.a2;
        if (a.point.a3 != b.point.a3) return a.point.a3 < b.point.a3;
        return static_cast<int>(a.segment) < static_cast<int>(b.segment);
    });
    return result;
}

/// Distance from a plane point to the boundary curve: per-segment scan plus
/// golden refinement. Used for nearest-boundary reporting, not for membership.
inline double boundary_distance(CubicPoint q) {
    double best = std::numeric_limits<double>::infinity();
    for (SegmentId id : kAllSegments) {
        const GammaSegment seg = gamma_segment(id);
        auto dist2 = [&](double s) {
            const CubicPoint g = gamma_point(seg, std::clamp(s, seg.s_min, seg.s_max));
            const double dx = g.a2 - q.a2, dy = g.a3 - q.a3;
            return dx * dx + dy * dy;
        };
        constexpr int kScan = 64;
        double best_s = seg.s_min;
        double best_d = dist2(seg.s_min);
        for (int i = 1; i < kScan; ++i) {
            const double s = std::lerp(seg.s_min, seg.s_max, static_cast<double>(i) / (kScan - 1));
            const double d = dist2(s);
            if (d < best_d) {
                best_d = d;
                best_s = s;
            }
        }
        const double h = (seg.s_max - seg.s_min) / (kScan - 1);
        const double s = detail::golden_min(dist2, best_s - h, best_s + h);
        best = std::min(best, std::sqrt(dist2(s)));
    }
    return best;
}

}  // namespace koebe
