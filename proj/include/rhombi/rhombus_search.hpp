#pragma once

// Intersect the medians of theta and theta + pi/2 and lift every intersection
// to four curve points: a center where both medians meet is the common
// midpoint of one chord of each direction, i.e. an inscribed rhombus whose
// diagonals are those chords.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "rhombi/corner.hpp"
#include "rhombi/median.hpp"

namespace rhombi {

inline constexpr double kDegeneracyFloorFactor = 1e-7;  // of the diameter

struct RhombusCandidate {
    double theta = 0.0;  // angle class in [0, pi/2)
    Vec2 center;
    // Cyclic order: vertices[0], vertices[2] span the theta diagonal;
    // vertices[1], vertices[3] the perpendicular one.
    std::array<Vec2, 4> vertices;
    std::array<double, 4> preimages{};  // curve parameters, aligned with vertices
    double side_dispersion = 0.0;       // max side / min side - 1
    double on_curve_residual = 0.0;     // max vertex distance to the curve
    double min_vertex_separation = 0.0;
};

struct FindResult {
    std::vector<RhombusCandidate> candidates;
    bool not_guaranteed = false;  // a special corner of this exact angle exists
    bool thick_median = false;
    bool finding = false;  // empty result although the existence argument applies
    // Corners of the restricted search parallelogram, when one was used.
    std::optional<std::array<Vec2, 4>> region;
};

namespace detail {

inline void fill_metrics(RhombusCandidate& cand, const JordanCurve& curve) {
    double smin = std::numeric_limits<double>::infinity(), smax = 0.0;
    for (int k = 0; k < 4; ++k) {
        double len = distance(cand.vertices[k], cand.vertices[(k + 1) % 4]);
        smin = std::min(smin, len);
        smax = std::max(smax, len);
    }
    cand.side_dispersion = smin > 0.0 ? smax / smin - 1.0
                                      : std::numeric_limits<double>::infinity();
    double sep = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            sep = std::min(sep, distance(cand.vertices[i], cand.vertices[j]));
    cand.min_vertex_separation = sep;
    double res = 0.0;
    for (const Vec2& v : cand.vertices) res = std::max(res, curve.distance_to(v));
    cand.on_curve_residual = res;
}

inline bool candidate_less(const RhombusCandidate& a, const RhombusCandidate& b) {
    if (a.center.x != b.center.x) return a.center.x < b.center.x;
    if (a.center.y != b.center.y) return a.center.y < b.center.y;
    for (int k = 0; k < 4; ++k) {
        if (a.vertices[k].x != b.vertices[k].x) return a.vertices[k].x < b.vertices[k].x;
        if (a.vertices[k].y != b.vertices[k].y) return a.vertices[k].y < b.vertices[k].y;
    }
    return false;
}

/// Sort lexicographically by center and drop candidates whose center lies
/// within `radius` of an already kept one.
inline void dedup_candidates(std::vector<RhombusCandidate>& cands, double radius) {
    std::sort(cands.begin(), cands.end(), candidate_less);
    std::vector<RhombusCandidate> kept;
    for (auto& c : cands) {
        bool dup = false;
        for (const auto& k : kept)
            if (distance(c.center, k.center) < radius) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(c));
    }
    cands = std::move(kept);
}

/// Build a candidate from one intersection between an element of the theta
/// median and an element of the perpendicular median.
inline RhombusCandidate make_candidate(double theta_class, Vec2 center,
                                       const MedianElement& ea, double ta,
                                       const ArcSplit& arcs_a,
                                       const MedianElement& eb, double tb,
                                       const ArcSplit& arcs_b,
                                       const JordanCurve& curve) {
    ChordPair ca = lift_median_point(ea, ta, arcs_a);
    ChordPair cb = lift_median_point(eb, tb, arcs_b);
    RhombusCandidate cand;
    cand.theta = theta_class;
    cand.center = center;
    cand.vertices = {ca.on_low.p, cb.on_low.p, ca.on_high.p, cb.on_high.p};
    cand.preimages = {ca.on_low.param, cb.on_low.param, ca.on_high.param,
                      cb.on_high.param};
    fill_metrics(cand, curve);
    return cand;
}

/// All intersection representatives between two median sets. Collinear
/// overlaps (a continuum of centers) contribute entry, exit, and midpoint.
template <typename Emit>
inline void for_each_median_intersection(const MedianSet& ma, const MedianSet& mb,
                                         double dist_tol, Emit&& emit) {
    for (std::size_t i = 0; i < ma.elements.size(); ++i) {
        const Segment& sa = ma.elements[i].seg;
        for (std::size_t j = 0; j < mb.elements.size(); ++j) {
            SegIntersection hit =
                intersect_segments(sa, mb.elements[j].seg, dist_tol);
            if (hit.kind == SegIntersection::Kind::point) {
                emit(i, hit.t, j, hit.s, hit.p);
            } else if (hit.kind == SegIntersection::Kind::overlap) {
                emit(i, hit.t0, j, hit.s0, hit.p0);
                emit(i, hit.t1, j, hit.s1, hit.p1);
                double tm = 0.5 * (hit.t0 + hit.t1);
                double sm = 0.5 * (hit.s0 + hit.s1);
                emit(i, tm, j, sm, sa.at(tm));
            }
        }
    }
}

}  // namespace detail

/// Recompute all quality metrics of a candidate from scratch and judge it
/// against `tol`: equal sides within tol (relative), perpendicular diagonals
/// within tol radians, every vertex within tol * diameter of the curve, and
/// vertex separation above the degeneracy floor.
struct ValidationReport {
    bool pass = false;
    double side_dispersion = 0.0;
    double perp_error = 0.0;  // radians
    double on_curve_residual = 0.0;
    double min_vertex_separation = 0.0;
};

inline ValidationReport validate_rhombus(const RhombusCandidate& cand,
                                         const JordanCurve& curve, double tol) {
    ValidationReport rep;
    RhombusCandidate scratch = cand;
    detail::fill_metrics(scratch, curve);
    rep.side_dispersion = scratch.side_dispersion;
    rep.on_curve_residual = scratch.on_curve_residual;
    rep.min_vertex_separation = scratch.min_vertex_separation;
    Vec2 d1 = cand.vertices[2] - cand.vertices[0];
    Vec2 d2 = cand.vertices[3] - cand.vertices[1];
    rep.perp_error = std::atan2(std::abs(dot(d1, d2)), std::abs(cross(d1, d2)));
    double floor = kDegeneracyFloorFactor * curve.diameter();
    rep.pass = rep.side_dispersion <= tol && rep.perp_error <= tol &&
               rep.on_curve_residual <= tol * curve.diameter() &&
               rep.min_vertex_separation >= floor;
    return rep;
}

/// Inscribed rhombi of the given angle class, via the median intersection
/// argument. When the angle has no special corner the result is guaranteed
/// nonempty; an empty list then carries the `finding` flag instead of being
/// silently accepted.
inline FindResult find_rhombi(const JordanCurve& curve, double theta,
                              const std::vector<CornerRecord>& corners) {
    FindResult out;
    const double theta_class = canon_angle_class(theta);
    const double diam = curve.diameter();

    for (const CornerRecord& rec : corners)
        if (rec.special_angles.contains(theta_class)) out.not_guaranteed = true;

    SupportFrame fa = support_frame(curve, theta_class);
    SupportFrame fb = support_frame(curve, theta_class + 0.5 * kPi);
    ArcSplit arcs_a = split_arcs(curve, fa);
    ArcSplit arcs_b = split_arcs(curve, fb);
    MedianSet ma = median_set(arcs_a, fa.theta);
    MedianSet mb = median_set(arcs_b, fb.theta);
    out.thick_median = ma.thick_flag || mb.thick_flag;

    const double dist_tol = kSupportTolFactor * diam;
    const double floor = kDegeneracyFloorFactor * diam;
    detail::for_each_median_intersection(
        ma, mb, dist_tol,
        [&](std::size_t i, double t, std::size_t j, double s, Vec2 p) {
            RhombusCandidate cand = detail::make_candidate(
                theta_class, p, ma.elements[i], t, arcs_a, mb.elements[j], s,
                arcs_b, curve);
            if (cand.min_vertex_separation >= floor)
                out.candidates.push_back(std::move(cand));
        });
    detail::dedup_candidates(out.candidates, floor);
    out.finding = out.candidates.empty() && !out.not_guaranteed;
    return out;
}

inline FindResult find_rhombi(const JordanCurve& curve, double theta) {
    return find_rhombi(curve, theta, find_special_corners(curve));
}

}  // namespace rhombi
