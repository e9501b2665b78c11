#pragma once

// The median of an angle: midpoints of chords of that direction joining the
// low arc to the high arc. On polygons the chord-level function is affine per
// edge pair, so the locus is an exact union of plane segments; each segment
// keeps its parameter-rectangle preimage for exact lifting back to the curve.

#include <cstdint>
#include <vector>

#include "rhombi/support_frame.hpp"

namespace rhombi {

struct MedianElement {
    Segment seg;                 // plane segment (possibly a point)
    std::size_t low_edge = 0;    // edge index on the low arc
    std::size_t high_edge = 0;   // edge index on the high arc
    double u0 = 0.0, v0 = 0.0;   // local edge params at seg.a
    double u1 = 0.0, v1 = 0.0;   // local edge params at seg.b
    bool thick = false;          // boundary of a level-aligned edge pair
};

struct MedianSet {
    double theta = 0.0;
    std::vector<MedianElement> elements;
    Vec2 A, B;  // endpoints: midpoints of the lo / hi support contacts
    bool thick_flag = false;
    double diameter = 0.0;
};

/// One endpoint of a lifted chord: the point on the curve plus its parameter.
struct CurvePoint {
    Vec2 p;
    double param = 0.0;
};

struct ChordPair {
    CurvePoint on_low, on_high;
};

/// Recover the chord through the point at fraction `t` along an element's
/// segment. Exact for polygons: the preimage is affine along the element.
inline ChordPair lift_median_point(const MedianElement& el, double t,
                                   const ArcSplit& arcs) {
    double u = el.u0 + t * (el.u1 - el.u0);
    double v = el.v0 + t * (el.v1 - el.v0);
    ChordPair out;
    out.on_low = {arcs.low.edge_point(el.low_edge, u),
                  arcs.low.edge_curve_param(el.low_edge, u)};
    out.on_high = {arcs.high.edge_point(el.high_edge, v),
                   arcs.high.edge_curve_param(el.high_edge, v)};
    return out;
}

inline MedianSet median_set(const ArcSplit& arcs, double theta) {
    MedianSet med;
    med.theta = canon_angle_pi(theta);
    med.diameter = arcs.curve_diameter;
    const double s = std::sin(med.theta), c = std::cos(med.theta);
    auto proj = [&](Vec2 p) { return p.x * s - p.y * c; };

    const Arc& low = arcs.low;
    const Arc& high = arcs.high;
    med.A = midpoint(low.pts.front(), high.pts.front());
    med.B = midpoint(low.pts.back(), high.pts.back());

    const double tol_par = kParallelTolFactor * med.diameter;
    const double tol_level = kSupportTolFactor * med.diameter;

    std::vector<double> pl(low.pts.size()), ph(high.pts.size());
    for (std::size_t i = 0; i < low.pts.size(); ++i) pl[i] = proj(low.pts[i]);
    for (std::size_t j = 0; j < high.pts.size(); ++j) ph[j] = proj(high.pts[j]);

    auto g = [&](std::size_t i, double u, std::size_t j, double v) {
        return midpoint(low.edge_point(i, u), high.edge_point(j, v));
    };

    for (std::size_t i = 0; i < low.edge_count(); ++i) {
        double a0 = pl[i], a1 = pl[i + 1];
        double da = a1 - a0;
        bool low_level = std::abs(da) <= tol_par;
        for (std::size_t j = 0; j < high.edge_count(); ++j) {
            double b0 = ph[j], b1 = ph[j + 1];
            double db = b1 - b0;
            bool high_level = std::abs(db) <= tol_par;

            MedianElement el;
            el.low_edge = i;
            el.high_edge = j;

            if (!low_level && !high_level) {
                double lo = std::max(std::min(a0, a1), std::min(b0, b1));
                double hi = std::min(std::max(a0, a1), std::max(b0, b1));
                if (lo > hi) continue;
                auto uv = [&](double lv) {
                    return std::pair<double, double>{
                        std::clamp((lv - a0) / da, 0.0, 1.0),
                        std::clamp((lv - b0) / db, 0.0, 1.0)};
                };
                auto [ua, va] = uv(lo);
                auto [ub, vb] = uv(hi);
                el.u0 = ua; el.v0 = va; el.u1 = ub; el.v1 = vb;
                el.seg = {g(i, ua, j, va), g(i, ub, j, vb)};
                med.elements.push_back(el);
            } else if (low_level && !high_level) {
                double level = 0.5 * (a0 + a1);
                if (level < std::min(b0, b1) || level > std::max(b0, b1)) continue;
                double v = std::clamp((level - b0) / db, 0.0, 1.0);
                el.u0 = 0.0; el.v0 = v; el.u1 = 1.0; el.v1 = v;
                el.seg = {g(i, 0.0, j, v), g(i, 1.0, j, v)};
                med.elements.push_back(el);
            } else if (!low_level && high_level) {
                double level = 0.5 * (b0 + b1);
                if (level < std::min(a0, a1) || level > std::max(a0, a1)) continue;
                double u = std::clamp((level - a0) / da, 0.0, 1.0);
                el.u0 = u; el.v0 = 0.0; el.u1 = u; el.v1 = 1.0;
                el.seg = {g(i, u, j, 0.0), g(i, u, j, 1.0)};
                med.elements.push_back(el);
            } else {
                // Both edges run along lines of this angle. Midpoints exist
                // only when the two levels coincide; then the chord-level
                // function vanishes on the whole parameter rectangle and the
                // element is "thick": emit the rectangle's boundary.
                if (std::abs(0.5 * (a0 + a1) - 0.5 * (b0 + b1)) > tol_level) continue;
                med.thick_flag = true;
                auto push = [&](double pu0, double pv0, double pu1, double pv1) {
                    MedianElement b = el;
                    b.thick = true;
                    b.u0 = pu0; b.v0 = pv0; b.u1 = pu1; b.v1 = pv1;
                    b.seg = {g(i, pu0, j, pv0), g(i, pu1, j, pv1)};
                    med.elements.push_back(b);
                };
                push(0.0, 0.0, 1.0, 0.0);
                push(0.0, 1.0, 1.0, 1.0);
                push(0.0, 0.0, 0.0, 1.0);
                push(1.0, 0.0, 1.0, 1.0);
            }
        }
    }
    return med;
}

// --- Pixelized zero-set masks ---

struct ZeroMask {
    int resolution = 0;
    std::vector<std::uint8_t> cells;  // row-major: cells[b * G + a]

    bool at(int a, int b) const { return cells[static_cast<std::size_t>(b) * resolution + a] != 0; }
    void set(int a, int b) { cells[static_cast<std::size_t>(b) * resolution + a] = 1; }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto v : cells) n += v;
        return n;
    }
};

namespace detail {

inline bool segment_meets_cell(Segment s, double x0, double y0, double x1, double y1) {
    auto inside = [&](Vec2 p) {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    };
    if (inside(s.a) || inside(s.b)) return true;
    Vec2 c00{x0, y0}, c10{x1, y0}, c11{x1, y1}, c01{x0, y1};
    return segments_touch(s.a, s.b, c00, c10) || segments_touch(s.a, s.b, c10, c11) ||
           segments_touch(s.a, s.b, c11, c01) || segments_touch(s.a, s.b, c01, c00);
}

/// Conservatively mark every closed cell of the G x G grid over [0,1]^2 that
/// the segment meets.
inline void rasterize_segment(ZeroMask& mask, Segment s) {
    const int G = mask.resolution;
    auto cell_lo = [&](double v) {
        int c = static_cast<int>(std::floor(v * G));
        return std::clamp(c, 0, G - 1);
    };
    int ax = cell_lo(std::min(s.a.x, s.b.x));
    int bx = cell_lo(std::max(s.a.x, s.b.x));
    int ay = cell_lo(std::min(s.a.y, s.b.y));
    int by = cell_lo(std::max(s.a.y, s.b.y));
    // Points exactly on a cell border belong to both neighbors.
    if (ax > 0 && std::min(s.a.x, s.b.x) * G <= ax) --ax;
    if (ay > 0 && std::min(s.a.y, s.b.y) * G <= ay) --ay;
    if (bx < G - 1 && std::max(s.a.x, s.b.x) * G >= bx + 1) ++bx;
    if (by < G - 1 && std::max(s.a.y, s.b.y) * G >= by + 1) ++by;
    for (int b = ay; b <= by; ++b)
        for (int a = ax; a <= bx; ++a) {
            if (mask.at(a, b)) continue;
            double x0 = static_cast<double>(a) / G, x1 = static_cast<double>(a + 1) / G;
            double y0 = static_cast<double>(b) / G, y1 = static_cast<double>(b + 1) / G;
            if (segment_meets_cell(s, x0, y0, x1, y1)) mask.set(a, b);
        }
}

inline void rasterize_rect(ZeroMask& mask, double x0, double y0, double x1, double y1) {
    const int G = mask.resolution;
    int ax = std::clamp(static_cast<int>(std::floor(x0 * G)), 0, G - 1);
    int bx = std::clamp(static_cast<int>(std::floor(x1 * G)), 0, G - 1);
    int ay = std::clamp(static_cast<int>(std::floor(y0 * G)), 0, G - 1);
    int by = std::clamp(static_cast<int>(std::floor(y1 * G)), 0, G - 1);
    for (int b = ay; b <= by; ++b)
        for (int a = ax; a <= bx; ++a) mask.set(a, b);
}

}  // namespace detail

/// Mask over the arc-parameter square [0,1]^2: cell (a,b) is marked iff the
/// exact zero set of the chord-level function meets the closed cell. The
/// corner cells at (0,0) and (1,1) are always marked (the arcs' shared
/// support contacts are zeros by construction).
inline ZeroMask median_mask(const ArcSplit& arcs, double theta, int resolution) {
    if (resolution < 16) throw std::invalid_argument("mask resolution must be >= 16");
    MedianSet med = median_set(arcs, theta);
    ZeroMask mask;
    mask.resolution = resolution;
    mask.cells.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    const Arc& low = arcs.low;
    const Arc& high = arcs.high;
    for (const MedianElement& el : med.elements) {
        double r0 = low.arc_param(el.low_edge, el.u0);
        double r1 = low.arc_param(el.low_edge, el.u1);
        double s0 = high.arc_param(el.high_edge, el.v0);
        double s1 = high.arc_param(el.high_edge, el.v1);
        if (el.thick) {
            detail::rasterize_rect(mask, std::min(r0, r1), std::min(s0, s1),
                                   std::max(r0, r1), std::max(s0, s1));
        } else {
            detail::rasterize_segment(mask, {{r0, s0}, {r1, s1}});
        }
    }
    mask.set(0, 0);
    mask.set(resolution - 1, resolution - 1);
    return mask;
}

/// Mask of a median's plane segments over an arbitrary bounding rectangle
/// (used to couple the two medians inside their shared Rec region).
inline ZeroMask plane_mask(const MedianSet& med, const RecRegion& rec, int resolution) {
    ZeroMask mask;
    mask.resolution = resolution;
    mask.cells.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    double da = rec.hi - rec.lo;
    double db = rec.perp_hi - rec.perp_lo;
    if (da <= 0.0 || db <= 0.0) return mask;
    auto to_unit = [&](Vec2 p) -> Vec2 {
        return {(project(rec.theta, p) - rec.lo) / da,
                (project(rec.theta + 0.5 * kPi, p) - rec.perp_lo) / db};
    };
    for (const MedianElement& el : med.elements)
        detail::rasterize_segment(mask, {to_unit(el.seg.a), to_unit(el.seg.b)});
    return mask;
}

}  // namespace rhombi
