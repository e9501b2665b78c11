#pragma once

// Per-angle support data: extreme offsets of the directional projection, the
// extremal contact points of the three horizontal levels (lo / mid / hi), the
// two mid-chord anchors, the bounding strip, and the splitting of the curve
// into the two arcs the median construction pairs up.

#include <cstddef>
#include <optional>
#include <vector>

#include "rhombi/jordan_curve.hpp"

namespace rhombi {

// Tolerances are scale invariant: multiples of the curve diameter.
inline constexpr double kSupportTolFactor = 1e-12;   // point-on-support-line
inline constexpr double kOnLineTolFactor = 1e-9;     // claim checks
inline constexpr double kParallelTolFactor = 1e-13;  // edge treated as level

struct ExtremalPoint {
    Vec2 p;
    double curve_param = 0.0;
    std::size_t vertex_index = kNone;  // kNone for edge-interior points
};

struct SupportFrame {
    double theta = 0.0;  // canonicalized to [0, pi)
    double lo = 0.0;     // min of project(theta, .) over the curve
    double hi = 0.0;     // max
    double mid = 0.0;    // (lo + hi) / 2

    // Contact points on the lo / hi support lines, extremal by tangential
    // coordinate. lo_min is the paper-agnostic "least tangential point on the
    // lower support line", and so on.
    ExtremalPoint lo_min, lo_max;  // on project == lo
    ExtremalPoint hi_min, hi_max;  // on project == hi
    ExtremalPoint mid_min, mid_max;  // on project == mid (edge crossings)
    double t_min = 0.0;  // tangential(mid_min)
    double t_max = 0.0;  // tangential(mid_max)

    Vec2 A;  // midpoint(lo_max, lo_min), on the lower support line
    Vec2 B;  // midpoint(hi_max, hi_min), on the upper support line

    double diameter = 0.0;  // cached from the curve
};

/// Intersection of the strips of theta and theta + pi/2: the bounding
/// rectangle both medians live in. Same object for both angles.
struct RecRegion {
    double theta = 0.0;
    double lo = 0.0, hi = 0.0;            // project(theta, .) bounds
    double perp_lo = 0.0, perp_hi = 0.0;  // project(theta + pi/2, .) bounds

    bool contains(Vec2 p, double tol) const {
        double a = project(theta, p);
        double b = project(theta + 0.5 * kPi, p);
        return a >= lo - tol && a <= hi + tol && b >= perp_lo - tol && b <= perp_hi + tol;
    }
    /// Plane point with given (project, perp-project) coordinates.
    Vec2 point_from_offsets(double a, double b) const {
        double s = std::sin(theta), c = std::cos(theta);
        // n_theta = (sin, -cos), n_perp = (cos, sin): orthonormal pair.
        return {a * s + b * c, -a * c + b * s};
    }
    std::array<Vec2, 4> corners() const {
        return {point_from_offsets(lo, perp_lo), point_from_offsets(hi, perp_lo),
                point_from_offsets(hi, perp_hi), point_from_offsets(lo, perp_hi)};
    }
};

inline RecRegion rec_region(const SupportFrame& f, const SupportFrame& f_perp) {
    RecRegion r;
    r.theta = f.theta;
    r.lo = f.lo;
    r.hi = f.hi;
    r.perp_lo = f_perp.lo;
    r.perp_hi = f_perp.hi;
    return r;
}

inline SupportFrame support_frame(const JordanCurve& curve, double theta) {
    SupportFrame f;
    f.theta = canon_angle_pi(theta);
    f.diameter = curve.diameter();
    const double s = std::sin(f.theta), c = std::cos(f.theta);
    const auto& verts = curve.vertices();
    const std::size_t n = verts.size();

    std::vector<double> proj(n);
    for (std::size_t i = 0; i < n; ++i) proj[i] = verts[i].x * s - verts[i].y * c;
    double lo = proj[0], hi = proj[0];
    for (double v : proj) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    f.lo = lo;
    f.hi = hi;
    f.mid = 0.5 * (lo + hi);
    if (hi - lo <= kSupportTolFactor * f.diameter)
        throw InternalError("support frame degenerate: curve projects to a point");

    const double tol = kSupportTolFactor * f.diameter;

    // Extremal contacts on a support line: among vertices within tol of the
    // level, pick min/max tangential coordinate. A whole edge on the line
    // contributes both endpoints, which realizes the flat-edge rule.
    auto pick = [&](double level, ExtremalPoint& at_min, ExtremalPoint& at_max) {
        bool have = false;
        double best_min = 0.0, best_max = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(proj[i] - level) > tol) continue;
            double tau = verts[i].x * c + verts[i].y * s;
            if (!have || tau < best_min) {
                best_min = tau;
                at_min = {verts[i], curve.vertex_param(i), i};
            }
            if (!have || tau > best_max) {
                best_max = tau;
                at_max = {verts[i], curve.vertex_param(i), i};
            }
            have = true;
        }
        if (!have) throw InternalError("support line lost its contact set");
    };
    pick(f.lo, f.lo_min, f.lo_max);
    pick(f.hi, f.hi_min, f.hi_max);

    // Mid-level crossings: strictly between lo and hi, so every crossing lies
    // on an edge (or at a vertex exactly at the level).
    bool have_mid = false;
    double mid_tau_min = 0.0, mid_tau_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        double fi = proj[i] - f.mid;
        double fj = proj[j] - f.mid;
        auto consider = [&](Vec2 p, double param, std::size_t vertex) {
            double tau = p.x * c + p.y * s;
            if (!have_mid || tau < mid_tau_min) {
                mid_tau_min = tau;
                f.mid_min = {p, param, vertex};
            }
            if (!have_mid || tau > mid_tau_max) {
                mid_tau_max = tau;
                f.mid_max = {p, param, vertex};
            }
            have_mid = true;
        };
        if (std::abs(fi) <= tol)
            consider(verts[i], curve.vertex_param(i), i);
        if (fi * fj < 0.0) {
            double u = fi / (fi - fj);
            Vec2 p = lerp(verts[i], verts[j], u);
            double pa = curve.vertex_param(i);
            double pb = i + 1 == n ? 1.0 : curve.vertex_param(j);
            consider(p, JordanCurve::wrap_param(pa + u * (pb - pa)), kNone);
        }
    }
    if (!have_mid) throw InternalError("mid level has no curve crossing");
    f.t_min = mid_tau_min;
    f.t_max = mid_tau_max;

    f.A = midpoint(f.lo_max.p, f.lo_min.p);
    f.B = midpoint(f.hi_max.p, f.hi_min.p);
    return f;
}

// --- Arc splitting ---

/// Injectively parametrized sub-polyline of the curve, with per-point curve
/// parameters kept for preimage bookkeeping.
struct Arc {
    std::vector<Vec2> pts;
    std::vector<double> curve_params;  // aligned with pts
    std::vector<double> cum;           // prefix lengths, cum[0] = 0
    double param_start = 0.0, param_end = 0.0;  // preimage interval endpoints
    bool forward = true;  // true if curve params increase along the arc

    std::size_t edge_count() const { return pts.empty() ? 0 : pts.size() - 1; }
    double length() const { return cum.empty() ? 0.0 : cum.back(); }

    Vec2 edge_point(std::size_t e, double u) const {
        return lerp(pts[e], pts[e + 1], u);
    }
    /// Curve parameter of the point at local coordinate u on edge e.
    double edge_curve_param(std::size_t e, double u) const {
        double d = param_delta(curve_params[e], curve_params[e + 1]);
        return JordanCurve::wrap_param(curve_params[e] + u * d);
    }
    /// Arc parameter in [0, 1], proportional to arc length.
    double arc_param(std::size_t e, double u) const {
        double len = length();
        if (len <= 0.0) return 0.0;
        return (cum[e] + u * (cum[e + 1] - cum[e])) / len;
    }
    /// Edge index and local coordinate of the point at arc parameter r.
    std::pair<std::size_t, double> locate(double r) const {
        double s = std::clamp(r, 0.0, 1.0) * length();
        std::size_t lo = 0, hi = cum.size() - 1;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cum[mid] <= s)
                lo = mid;
            else
                hi = mid;
        }
        double seg = cum[lo + 1] - cum[lo];
        return {lo, seg > 0.0 ? (s - cum[lo]) / seg : 0.0};
    }
    Vec2 point_at(double r) const {
        auto [e, u] = locate(r);
        return edge_point(e, u);
    }
    double curve_param_at(double r) const {
        auto [e, u] = locate(r);
        return edge_curve_param(e, u);
    }

    /// Arc parameter of a curve vertex lying on this arc, if any.
    std::optional<double> locate_vertex(std::size_t vertex_index,
                                        const JordanCurve& curve) const {
        double target = curve.vertex_param(vertex_index);
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (curve_params[i] == target)
                return length() > 0.0 ? cum[i] / length() : 0.0;
        return std::nullopt;
    }

    void finalize() {
        cum.assign(pts.size(), 0.0);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            cum[i + 1] = cum[i] + distance(pts[i], pts[i + 1]);
    }
};

struct ArcSplit {
    Arc low;             // arc through the least-tangential mid crossing
    Arc high;            // arc through the greatest-tangential mid crossing
    Arc low_complement;  // the rest of the curve, endpoints shared with low
    double curve_diameter = 0.0;
};

namespace detail {

/// Extract the sub-polyline between two curve parameters, walking forward
/// (increasing parameter, wrapping) from `a` to `b`.
inline Arc extract_forward(const JordanCurve& curve, const ExtremalPoint& a,
                           const ExtremalPoint& b) {
    Arc arc;
    arc.param_start = a.curve_param;
    arc.param_end = b.curve_param;
    arc.forward = true;
    arc.pts.push_back(a.p);
    arc.curve_params.push_back(a.curve_param);
    const std::size_t n = curve.size();
    std::size_t idx = a.vertex_index != kNone
                          ? (a.vertex_index + 1) % n
                          : [&] {  // first vertex strictly after param a
                                for (std::size_t i = 0; i < n; ++i)
                                    if (curve.vertex_param(i) > a.curve_param)
                                        return i;
                                return std::size_t{0};
                            }();
    for (std::size_t guard = 0; guard <= n; ++guard) {
        double p = curve.vertex_param(idx);
        if (!param_in_forward(a.curve_param, b.curve_param, p) ||
            (b.vertex_index != kNone && idx == b.vertex_index))
            break;
        // skip a coincident start vertex
        if (p != a.curve_param) {
            arc.pts.push_back(curve.vertex(idx));
            arc.curve_params.push_back(p);
        }
        idx = (idx + 1) % n;
    }
    arc.pts.push_back(b.p);
    arc.curve_params.push_back(b.curve_param);
    arc.finalize();
    return arc;
}

inline Arc reversed(const Arc& in) {
    Arc arc;
    arc.pts.assign(in.pts.rbegin(), in.pts.rend());
    arc.curve_params.assign(in.curve_params.rbegin(), in.curve_params.rend());
    arc.param_start = in.param_end;
    arc.param_end = in.param_start;
    arc.forward = !in.forward;
    arc.finalize();
    return arc;
}

/// Arc between the two extremal points that contains curve parameter
/// `through`, oriented from `from` to `to`.
inline Arc arc_through(const JordanCurve& curve, const ExtremalPoint& from,
                       const ExtremalPoint& to, double through) {
    bool fwd_contains = param_in_forward(from.curve_param, to.curve_param, through);
    if (fwd_contains) return extract_forward(curve, from, to);
    return reversed(extract_forward(curve, to, from));
}

}  // namespace detail

/// Split the curve into the two arcs joining the lower support contacts to the
/// upper ones. `low` runs lo_min -> hi_min through the least-tangential mid
/// crossing; `high` runs lo_max -> hi_max through the greatest.
inline ArcSplit split_arcs(const JordanCurve& curve, const SupportFrame& frame) {
    ArcSplit out;
    out.curve_diameter = curve.diameter();
    out.low = detail::arc_through(curve, frame.lo_min, frame.hi_min,
                                  frame.mid_min.curve_param);
    out.high = detail::arc_through(curve, frame.lo_max, frame.hi_max,
                                   frame.mid_max.curve_param);
    // Complement of `low`: same endpoints, the other way around the curve.
    bool fwd = param_in_forward(frame.lo_min.curve_param, frame.hi_min.curve_param,
                                frame.mid_min.curve_param);
    if (fwd)
        out.low_complement =
            detail::reversed(detail::extract_forward(curve, frame.hi_min, frame.lo_min));
    else
        out.low_complement = detail::extract_forward(curve, frame.lo_min, frame.hi_min);
    return out;
}

}  // namespace rhombi
