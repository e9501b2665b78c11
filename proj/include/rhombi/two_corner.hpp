#pragma once

// Search machinery for a pair of special corners p, q: pose the curve with p
// at the origin and q on the positive x-axis, measure the clearance angles,
// and for angles inside the guaranteed half-width either fall back to the
// plain pipeline (curve dips below the pq line) or run the clipped-curve
// search inside the region R (curve stays on one side).

#include <optional>
#include <vector>

#include "rhombi/rhombus_search.hpp"

namespace rhombi {

enum class TwoCornerCase {
    below_axis,  // parts of the posed curve lie strictly below the x-axis
    on_axis      // the posed curve stays on or above the x-axis
};

struct TwoCornerFrame {
    OrthoTransform pose;  // world -> posed (p at origin, q on the +x axis)
    JordanCurve posed;
    CornerRecord p_rec, q_rec;  // world-space corner records
    double theta0 = 0.0;        // world direction angle of the p->q line
    TwoCornerCase kind = TwoCornerCase::on_axis;

    double eps_a = 0.0;    // angle at p subtended by the top-line midpoint A0
    double eps_b = 0.0;    // angle at q subtended by the bottom-line midpoint B0
    double theta_p = 0.0;  // sup of p's posed special classes in (0, pi/2)
    double theta_q = 0.0;
    double w = 0.0;  // x-coordinate of posed q (width of the bounding box)
    double h = 0.0;  // y-coordinate of A0 (height of the bounding box)

    // on_axis case clearances along the upper arc.
    double eps_left = 0.0, eps_right = 0.0, eps_y = 0.0;
    double eps = 0.0;  // guaranteed angular half-width around theta0

    Arc upper_arc;  // on_axis case: the high arc of the pi/2 frame, p -> q
    Vec2 A0, B0;
};

/// The parallelogram the on-axis intersection argument runs in: an x-window
/// crossed with the band between the tilted baseline and the lower support
/// level of the posed curve.
struct SearchRegion {
    double theta = 0.0;
    double x_lo = 0.0, x_hi = 0.0;
    double level_lo = 0.0;  // min of project(theta, .) over the posed curve
    Vec2 sw, se;            // bottom corners, on the baseline y = x tan(theta)

    bool contains_interior(Vec2 p, double margin) const {
        double lv = project(theta, p);
        return p.x > x_lo + margin && p.x < x_hi - margin &&
               lv > level_lo + margin && lv < -margin;
    }
    Segment west_edge() const {
        double y0 = x_lo * std::tan(theta);
        double y1 = (x_lo * std::sin(theta) - level_lo) / std::cos(theta);
        return {{x_lo, y0}, {x_lo, y1}};
    }
    Segment east_edge() const {
        double y0 = x_hi * std::tan(theta);
        double y1 = (x_hi * std::sin(theta) - level_lo) / std::cos(theta);
        return {{x_hi, y0}, {x_hi, y1}};
    }
};

inline SearchRegion search_region(const TwoCornerFrame& frame, double theta,
                                  double level_lo) {
    SearchRegion r;
    r.theta = theta;
    r.x_lo = 0.25 * frame.eps_left;
    r.x_hi = frame.w - 0.25 * frame.eps_right;
    r.level_lo = level_lo;
    r.sw = {r.x_lo, r.x_lo * std::tan(theta)};
    r.se = {r.x_hi, r.x_hi * std::tan(theta)};
    return r;
}

struct ClippedCurve {
    JordanCurve curve;
    std::vector<double> orig_params;  // per vertex; the closing edge is synthetic
    double t_l = 0.0, t_r = 0.0;      // clip bounds, upper-arc parameters
    Vec2 P_l, P_r;

    /// Map a parameter on the clipped curve back to the source curve; empty
    /// for points on the synthetic return edge.
    std::optional<double> to_original_param(double bar_param) const {
        auto [e, u] = curve.locate(bar_param);
        if (e + 1 >= curve.size()) return std::nullopt;  // closing edge
        double d = param_delta(orig_params[e], orig_params[e + 1]);
        return JordanCurve::wrap_param(orig_params[e] + u * d);
    }
};

class TwoCornerError : public std::runtime_error {
public:
    explicit TwoCornerError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline double corner_angle_bound(const JordanCurve& posed, std::size_t vertex) {
    AngleIntervals classes = special_corner_angles(posed, vertex);
    double sup = classes.sup_below(0.5 * kPi);
    if (sup <= 0.0)
        throw TwoCornerError("posed corner has no usable special angle");
    return sup;
}

}  // namespace detail

/// Pose the pair and measure every clearance the guarantee needs. Throws
/// TwoCornerError when the pose cannot be completed (a clearance point is not
/// on the upper arc, or a corner loses its angle set under the pose).
inline TwoCornerFrame compute_frame(const JordanCurve& curve,
                                    const CornerRecord& p, const CornerRecord& q) {
    TwoCornerFrame f;
    f.p_rec = p;
    f.q_rec = q;
    Vec2 d = q.point - p.point;
    f.theta0 = std::atan2(d.y, d.x);
    f.pose = OrthoTransform::rotation(-f.theta0)
                 .compose(OrthoTransform::translation({-p.point.x, -p.point.y}));
    f.posed = curve.transformed(f.pose);
    f.w = norm(d);

    const double diam = f.posed.diameter();
    SupportFrame f0 = support_frame(f.posed, 0.0);
    // project(0, .) = -y: the "lo" support line is the top one. A0 must lie
    // strictly above the x-axis; reflect if the whole curve hangs below.
    if (-f0.lo <= kSupportTolFactor * diam) {
        f.pose = OrthoTransform::reflect_x_axis().compose(f.pose);
        f.posed = curve.transformed(f.pose);
        f0 = support_frame(f.posed, 0.0);
    }
    f.A0 = f0.A;
    f.B0 = f0.B;
    f.h = f.A0.y;
    if (f.h <= 0.0) throw TwoCornerError("top-line midpoint not above the axis");
    f.eps_a = std::atan2(f.A0.y, f.A0.x);

    f.theta_p = detail::corner_angle_bound(f.posed, p.vertex_index);
    f.theta_q = detail::corner_angle_bound(f.posed, q.vertex_index);

    const double case_tol = kSupportTolFactor * diam;
    if (f.B0.y < -case_tol) {
        f.kind = TwoCornerCase::below_axis;
        f.eps_b = std::atan2(-f.B0.y, f.w - f.B0.x);
        f.eps = std::min(f.eps_a, f.eps_b);
        if (f.eps <= 0.0) throw TwoCornerError("clearance angles vanish");
        return f;
    }

    f.kind = TwoCornerCase::on_axis;
    f.eps_b = 0.0;

    // Vertical frame: the high arc runs from p to q over the top.
    SupportFrame f90 = support_frame(f.posed, 0.5 * kPi);
    ArcSplit arcs90 = split_arcs(f.posed, f90);
    f.upper_arc = arcs90.high;

    SupportFrame f_ea = support_frame(f.posed, f.eps_a);
    auto r_a = f.upper_arc.locate_vertex(f_ea.lo_max.vertex_index, f.posed);
    auto r_m0 = f.upper_arc.locate_vertex(f0.lo_min.vertex_index, f.posed);
    if (!r_a || !r_m0)
        throw TwoCornerError("support contact not on the upper arc");

    const Arc& up = f.upper_arc;
    double left = std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    {
        Vec2 pa = up.point_at(*r_a);
        left = pa.x;
        for (std::size_t i = 0; i < up.pts.size(); ++i) {
            double r = up.length() > 0.0 ? up.cum[i] / up.length() : 0.0;
            if (r >= *r_a) left = std::min(left, up.pts[i].x);
            if (r <= *r_m0) right = std::min(right, f.w - up.pts[i].x);
        }
        Vec2 pm = up.point_at(*r_m0);
        right = std::min(right, f.w - pm.x);
    }
    f.eps_left = left;
    f.eps_right = right;
    if (f.eps_left <= 0.0 || f.eps_right <= 0.0)
        throw TwoCornerError("clip clearances vanish");

    // Least height of the upper arc over the clipped x-window.
    double x_lo = f.eps_left / 8.0, x_hi = f.w - f.eps_right / 8.0;
    double ey = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e + 1 < up.pts.size(); ++e) {
        Vec2 a = up.pts[e], b = up.pts[e + 1];
        double exl = std::min(a.x, b.x), exh = std::max(a.x, b.x);
        double lo = std::max(exl, x_lo), hi = std::min(exh, x_hi);
        if (lo > hi) continue;
        if (exh - exl <= 0.0) {
            ey = std::min(ey, std::min(a.y, b.y));
            continue;
        }
        for (double xc : {lo, hi}) {
            double u = (xc - a.x) / (b.x - a.x);
            ey = std::min(ey, a.y + u * (b.y - a.y));
        }
    }
    f.eps_y = ey;
    if (!(f.eps_y > 0.0))
        throw TwoCornerError("upper arc touches the axis inside the window");

    double bound = std::min({std::atan(f.eps_left / (8.0 * f.h)),
                             std::atan(f.eps_right / (8.0 * f.h)),
                             std::atan(f.eps_y / (2.0 * f.w)), f.eps_a, f.theta_p,
                             f.theta_q});
    f.eps = 0.99 * bound;  // headroom under the strict inequalities
    if (f.eps <= 0.0) throw TwoCornerError("guarantee half-width vanishes");
    return f;
}

/// Clip the posed curve for an on-axis search at 0 < theta < eps: keep the
/// stretch of the upper arc between its last visit to the left baseline stub
/// and its first visit to the right one, closed by a straight return along
/// the baseline y = x tan(theta).
inline ClippedCurve clip_curve(const TwoCornerFrame& frame, double theta) {
    if (frame.kind != TwoCornerCase::on_axis)
        throw std::invalid_argument("clip_curve requires the on-axis case");
    if (!(theta > 0.0) || !(theta < frame.eps))
        throw std::invalid_argument("clip_curve requires 0 < theta < eps");

    const Arc& up = frame.upper_arc;
    const double diam = frame.posed.diameter();
    const double tol = kSupportTolFactor * diam;
    const double tan_t = std::tan(theta);
    auto baseline_point = [&](double x) { return Vec2{x, x * tan_t}; };
    Segment L_l{baseline_point(0.0), baseline_point(frame.eps_left / 8.0)};
    Segment L_r{baseline_point(frame.w - frame.eps_right / 8.0),
                baseline_point(frame.w)};

    double t_l = -1.0, t_r = -1.0;
    for (std::size_t e = 0; e + 1 < up.pts.size(); ++e) {
        Segment edge{up.pts[e], up.pts[e + 1]};
        SegIntersection hl = intersect_segments(edge, L_l, tol);
        if (hl.kind == SegIntersection::Kind::point)
            t_l = std::max(t_l, up.arc_param(e, hl.t));
        else if (hl.kind == SegIntersection::Kind::overlap)
            t_l = std::max(t_l, up.arc_param(e, hl.t1));
    }
    if (t_l < 0.0) throw InternalError("upper arc misses the left baseline stub");
    for (std::size_t e = 0; e + 1 < up.pts.size(); ++e) {
        Segment edge{up.pts[e], up.pts[e + 1]};
        SegIntersection hr = intersect_segments(edge, L_r, tol);
        double cand = -1.0;
        if (hr.kind == SegIntersection::Kind::point)
            cand = up.arc_param(e, hr.t);
        else if (hr.kind == SegIntersection::Kind::overlap)
            cand = up.arc_param(e, hr.t0);
        if (cand >= t_l && (t_r < 0.0 || cand < t_r)) t_r = cand;
    }
    if (t_r < 0.0) throw InternalError("upper arc misses the right baseline stub");

    ClippedCurve clip;
    clip.t_l = t_l;
    clip.t_r = t_r;
    clip.P_l = up.point_at(t_l);
    clip.P_r = up.point_at(t_r);

    std::vector<Vec2> pts;
    std::vector<double> params;
    auto push = [&](Vec2 p, double param) {
        if (!pts.empty() && distance(pts.back(), p) <= 1e-15 * diam) return;
        pts.push_back(p);
        params.push_back(param);
    };
    push(clip.P_l, up.curve_param_at(t_l));
    for (std::size_t i = 0; i < up.pts.size(); ++i) {
        double r = up.length() > 0.0 ? up.cum[i] / up.length() : 0.0;
        if (r > t_l && r < t_r) push(up.pts[i], up.curve_params[i]);
    }
    push(clip.P_r, up.curve_param_at(t_r));
    if (pts.size() < 3) throw InternalError("clipped curve degenerates");
    clip.curve = JordanCurve::from_vertices(pts);
    if (clip.curve.size() != pts.size())
        throw InternalError("clipped curve dropped a vertex");
    clip.orig_params = std::move(params);

    // Consequence of the preimage ordering: the lower support contacts of the
    // tilted frame sit strictly inside the clipped stretch.
    SupportFrame ft = support_frame(frame.posed, theta);
    auto r_mm = up.locate_vertex(ft.lo_min.vertex_index, frame.posed);
    auto r_Mm = up.locate_vertex(ft.lo_max.vertex_index, frame.posed);
    if (!r_mm || !r_Mm || !(t_l < *r_mm) || !(*r_mm <= *r_Mm) || !(*r_Mm < t_r))
        throw InternalError("clip ordering violated; tolerance or corner bug");
    return clip;
}

namespace detail {

inline RhombusCandidate unposed_candidate(RhombusCandidate cand,
                                          const OrthoTransform& unpose) {
    cand.center = unpose.apply(cand.center);
    for (Vec2& v : cand.vertices) v = unpose.apply(v);
    Vec2 d = cand.vertices[2] - cand.vertices[0];
    cand.theta = canon_angle_class(std::atan2(d.y, d.x));
    return cand;
}

inline FindResult search_on_axis_positive(const TwoCornerFrame& frame,
                                          double theta) {
    FindResult out;
    const double diam = frame.posed.diameter();
    ClippedCurve clip = clip_curve(frame, theta);

    SupportFrame fbar = support_frame(clip.curve, theta);
    ArcSplit arcs_bar = split_arcs(clip.curve, fbar);
    MedianSet mbar = median_set(arcs_bar, theta);

    SupportFrame fperp = support_frame(frame.posed, theta + 0.5 * kPi);
    ArcSplit arcs_perp = split_arcs(frame.posed, fperp);
    MedianSet mperp = median_set(arcs_perp, theta + 0.5 * kPi);
    out.thick_median = mbar.thick_flag || mperp.thick_flag;

    SupportFrame ft = support_frame(frame.posed, theta);
    SearchRegion region = search_region(frame, theta, ft.lo);
    out.region = {{region.sw, region.se, region.east_edge().b, region.west_edge().b}};

    const double margin = kSupportTolFactor * diam;
    const double floor = kDegeneracyFloorFactor * diam;
    detail::for_each_median_intersection(
        mbar, mperp, margin,
        [&](std::size_t i, double t, std::size_t j, double s, Vec2 z) {
            if (!region.contains_interior(z, margin)) return;
            ChordPair pa = lift_median_point(mbar.elements[i], t, arcs_bar);
            ChordPair pb = lift_median_point(mperp.elements[j], s, arcs_perp);
            auto low_param = clip.to_original_param(pa.on_low.param);
            auto high_param = clip.to_original_param(pa.on_high.param);
            if (!low_param || !high_param) return;  // touched the return edge
            RhombusCandidate cand;
            cand.theta = theta;
            cand.center = z;
            cand.vertices = {pa.on_low.p, pb.on_low.p, pa.on_high.p, pb.on_high.p};
            cand.preimages = {*low_param, pb.on_low.param, *high_param,
                              pb.on_high.param};
            fill_metrics(cand, frame.posed);
            if (cand.min_vertex_separation >= floor)
                out.candidates.push_back(std::move(cand));
        });
    detail::dedup_candidates(out.candidates, floor);
    out.finding = out.candidates.empty();
    return out;
}

}  // namespace detail

/// Search for inscribed rhombi at a posed angle theta, |theta| < frame.eps.
/// Results are mapped back to world coordinates; each candidate's theta is
/// recomputed from its own diagonal. Negative angles run on the frame built
/// with the corners swapped, which mirrors the pose.
inline FindResult two_corner_search(const JordanCurve& curve,
                                    const TwoCornerFrame& frame, double theta) {
    if (!(std::abs(theta) < frame.eps))
        throw std::invalid_argument("two_corner_search requires |theta| < eps");
    if (theta < 0.0 && frame.kind == TwoCornerCase::on_axis) {
        TwoCornerFrame mirrored = compute_frame(curve, frame.q_rec, frame.p_rec);
        if (!(std::abs(theta) < mirrored.eps))
            throw std::invalid_argument("mirrored frame does not cover the angle");
        return two_corner_search(curve, mirrored, -theta);
    }

    FindResult out;
    OrthoTransform unpose = frame.pose.inverse();
    if (frame.kind == TwoCornerCase::below_axis || theta == 0.0) {
        // Plain intersection argument on the posed curve: with the corners in
        // this pose all four median endpoints stay distinct.
        FindResult posed = find_rhombi(frame.posed, canon_angle_class(theta));
        out = std::move(posed);
        out.finding = out.candidates.empty();
        out.not_guaranteed = false;
    } else {
        out = detail::search_on_axis_positive(frame, theta);
    }
    for (RhombusCandidate& cand : out.candidates)
        cand = detail::unposed_candidate(std::move(cand), unpose);
    if (out.region)
        for (Vec2& v : *out.region) v = unpose.apply(v);
    detail::dedup_candidates(out.candidates,
                             kDegeneracyFloorFactor * curve.diameter());
    return out;
}

/// Posed angle that makes two_corner_search(frame, d) target the given world
/// angle class; the sign flips when the pose carries a reflection.
inline double posed_theta_for(const TwoCornerFrame& frame, double theta_class) {
    double d = wrap_signed(canon_angle_class(theta_class) -
                               canon_angle_class(frame.theta0),
                           0.5 * kPi);
    return frame.pose.reflects() ? -d : d;
}

}  // namespace rhombi
