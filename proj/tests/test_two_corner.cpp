#include <catch2/catch_amalgamated.hpp>

#include "rhombi/curve_gen.hpp"
#include "rhombi/two_corner.hpp"

using namespace rhombi;

namespace {

JordanCurve lens_curve(std::size_t n = 800) {
    CurveSpec spec;
    spec.shape = Shape::lens;
    spec.resolution = n;
    return generate(spec);
}

/// Case-2 fixture: the straight chord from (0,0) to (1,1) plus the upper
/// branch y = sqrt(x) back. The whole curve sits on one side of the pq line.
JordanCurve half_lens(std::size_t n = 800) {
    std::size_t n_chord = n / 2 + 1;
    std::size_t n_up = n - n_chord;
    std::vector<Vec2> pts;
    for (std::size_t k = 0; k < n_chord; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(n_chord - 1);
        pts.push_back({t, t});
    }
    for (std::size_t k = 1; k <= n_up; ++k) {
        double x = 1.0 - static_cast<double>(k) / static_cast<double>(n_up + 1);
        pts.push_back({x, std::sqrt(x)});
    }
    return JordanCurve::from_vertices(pts);
}

TwoCornerFrame frame_of(const JordanCurve& curve) {
    auto corners = find_special_corners(curve);
    REQUIRE(corners.size() == 2);
    return compute_frame(curve, corners[0], corners[1]);
}

}  // namespace

TEST_CASE("lens frame: the curve straddles the pq chord (below-axis case)") {
    JordanCurve lens = lens_curve();
    TwoCornerFrame f = frame_of(lens);
    CHECK(f.kind == TwoCornerCase::below_axis);
    CHECK(f.theta0 == Catch::Approx(0.25 * kPi));
    CHECK(f.w == Catch::Approx(std::sqrt(2.0)));
    // A0 is the posed apex of the upper branch: height (sqrt(x)-x)/sqrt(2) at x=1/4
    CHECK(f.h == Catch::Approx(0.25 / std::sqrt(2.0)).margin(1e-6));
    CHECK(f.eps_a == Catch::Approx(std::atan(1.0 / 3.0)).margin(1e-6));
    CHECK(f.eps_b > 0.0);
    CHECK(f.eps == Catch::Approx(std::min(f.eps_a, f.eps_b)));
    CHECK(f.eps > 0.0);
}

TEST_CASE("lens search succeeds across the guaranteed interval") {
    JordanCurve lens = lens_curve();
    TwoCornerFrame f = frame_of(lens);
    for (double scale : {0.0, 0.25, 0.5, 0.75, 0.9}) {
        FindResult r = two_corner_search(lens, f, scale * f.eps);
        REQUIRE_FALSE(r.candidates.empty());
        bool any_valid = false;
        for (const auto& c : r.candidates)
            any_valid = any_valid || validate_rhombus(c, lens, 1e-3).pass;
        CHECK(any_valid);
    }
}

TEST_CASE("half-lens frame: curve on one side of pq (on-axis case)") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    CHECK(f.kind == TwoCornerCase::on_axis);
    CHECK(f.eps_b == 0.0);
    CHECK(f.eps > 0.0);
    CHECK(f.eps_left > 0.0);
    CHECK(f.eps_right > 0.0);
    CHECK(f.eps_y > 0.0);
    // the strict inequalities the guarantee rests on
    CHECK(std::tan(f.eps) < f.eps_left / (8.0 * f.h));
    CHECK(std::tan(f.eps) < f.eps_right / (8.0 * f.h));
    CHECK(std::tan(f.eps) < f.eps_y / (2.0 * f.w));
    CHECK(f.eps < f.eps_a);
    CHECK(f.eps < f.theta_p);
    CHECK(f.eps < f.theta_q);
}

TEST_CASE("clipping the half-lens produces a simple curve with known ends") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    double theta = 0.5 * f.eps;
    ClippedCurve clip = clip_curve(f, theta);
    CHECK(validate_simple(clip.curve.vertices()).simple);
    // both clip points sit on the baseline y = x tan(theta)
    CHECK(clip.P_l.y == Catch::Approx(clip.P_l.x * std::tan(theta)).margin(1e-9));
    CHECK(clip.P_r.y == Catch::Approx(clip.P_r.x * std::tan(theta)).margin(1e-9));
    CHECK(clip.t_l < clip.t_r);

    SECTION("clip endpoints approach the corners as theta shrinks") {
        double prev_l = 1e300, prev_r = -1e300;
        for (double t : {5e-3, 5e-4, 5e-5}) {
            ClippedCurve c = clip_curve(f, t);
            CHECK(c.P_l.x <= prev_l + 1e-12);
            CHECK(c.P_r.x >= prev_r - 1e-12);
            prev_l = c.P_l.x;
            prev_r = c.P_r.x;
        }
        ClippedCurve tiny = clip_curve(f, 5e-5);
        CHECK(distance(tiny.P_l, {0.0, 0.0}) < 5e-3);
        CHECK(distance(tiny.P_r, {f.w, 0.0}) < 5e-3);
    }

    SECTION("synthetic return edge maps to no original parameter") {
        double last = clip.curve.vertex_param(clip.curve.size() - 1);
        auto back = clip.to_original_param(last + 0.5 * (1.0 - last));
        CHECK_FALSE(back.has_value());
        auto mid = clip.to_original_param(0.3);
        REQUIRE(mid.has_value());
        CHECK(distance(f.posed.point_at(*mid), clip.curve.point_at(0.3)) <=
              1e-9 * f.posed.diameter());
    }
}

TEST_CASE("clip preconditions are enforced") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    CHECK_THROWS_AS(clip_curve(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(clip_curve(f, f.eps), std::invalid_argument);
    JordanCurve lens = lens_curve();
    TwoCornerFrame below = frame_of(lens);
    CHECK_THROWS_AS(clip_curve(below, 0.5 * below.eps), std::invalid_argument);
}

TEST_CASE("preimage ordering chain along the upper arc") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    double th1 = 0.3 * f.eps, th2 = 0.8 * f.eps;
    SupportFrame f1 = support_frame(f.posed, th1);
    SupportFrame f2 = support_frame(f.posed, th2);
    auto mm2 = f.upper_arc.locate_vertex(f2.lo_min.vertex_index, f.posed);
    auto Mm2 = f.upper_arc.locate_vertex(f2.lo_max.vertex_index, f.posed);
    auto mm1 = f.upper_arc.locate_vertex(f1.lo_min.vertex_index, f.posed);
    auto Mm1 = f.upper_arc.locate_vertex(f1.lo_max.vertex_index, f.posed);
    REQUIRE(mm2.has_value());
    REQUIRE(Mm2.has_value());
    REQUIRE(mm1.has_value());
    REQUIRE(Mm1.has_value());
    CHECK(*mm2 <= *Mm2);
    CHECK(*Mm2 <= *mm1);
    CHECK(*mm1 <= *Mm1);
}

TEST_CASE("restricted median stays above the baseline in the window") {
    // every point of the perpendicular median with x inside the window lies
    // strictly above y = x tan(theta)
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    for (double scale : {0.3, 0.6, 0.9}) {
        double theta = scale * f.eps;
        SupportFrame fp = support_frame(f.posed, theta + 0.5 * kPi);
        MedianSet med = median_set(split_arcs(f.posed, fp), fp.theta);
        double x_lo = 0.25 * f.eps_left, x_hi = f.w - 0.25 * f.eps_right;
        double tan_t = std::tan(theta);
        for (const auto& el : med.elements)
            for (Vec2 p : {el.seg.a, el.seg.b, midpoint(el.seg.a, el.seg.b)})
                if (p.x >= x_lo && p.x <= x_hi) CHECK(p.y > p.x * tan_t);
    }
}

TEST_CASE("clipped median x-range stays strictly inside the window") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    for (double scale : {0.3, 0.6, 0.9}) {
        double theta = scale * f.eps;
        ClippedCurve clip = clip_curve(f, theta);
        SupportFrame fbar = support_frame(clip.curve, theta);
        MedianSet med = median_set(split_arcs(clip.curve, fbar), fbar.theta);
        double x_lo = 0.25 * f.eps_left, x_hi = f.w - 0.25 * f.eps_right;
        for (const auto& el : med.elements) {
            CHECK(el.seg.a.x > x_lo);
            CHECK(el.seg.a.x < x_hi);
            CHECK(el.seg.b.x > x_lo);
            CHECK(el.seg.b.x < x_hi);
        }
    }
}

TEST_CASE("half-lens search covers the guaranteed interval, both signs") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    for (double scale : {0.0, 0.25, 0.5, 0.75, 0.9, -0.5}) {
        FindResult r = two_corner_search(hl, f, scale * f.eps);
        INFO("posed theta scale " << scale);
        REQUIRE_FALSE(r.candidates.empty());
        for (const auto& c : r.candidates) CHECK(validate_rhombus(c, hl, 1e-3).pass);
        if (scale > 0.0) {
            REQUIRE(r.region.has_value());
            // centers returned by the restricted search lie inside the region
            OrthoTransform pose = f.pose;
            double theta = scale * f.eps;
            SupportFrame ft = support_frame(f.posed, theta);
            SearchRegion region = search_region(f, theta, ft.lo);
            for (const auto& c : r.candidates)
                CHECK(region.contains_interior(pose.apply(c.center), 0.0));
        }
    }
}

TEST_CASE("restricted search agrees with the plain pipeline where both apply") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    double posed = 0.5 * f.eps;
    FindResult restricted = two_corner_search(hl, f, posed);
    // same world angle through the plain pipeline
    double world = canon_angle_class(f.theta0 + (f.pose.reflects() ? -posed : posed));
    FindResult plain = find_rhombi(hl, world);
    REQUIRE_FALSE(restricted.candidates.empty());
    REQUIRE_FALSE(plain.candidates.empty());
    double tol = 1e-6 * hl.diameter();
    bool matched = false;
    for (const auto& rc : restricted.candidates)
        for (const auto& pc : plain.candidates)
            matched = matched || distance(rc.center, pc.center) <= tol;
    CHECK(matched);
}

TEST_CASE("search rejects angles outside the guarantee") {
    JordanCurve hl = half_lens();
    TwoCornerFrame f = frame_of(hl);
    CHECK_THROWS_AS(two_corner_search(hl, f, f.eps), std::invalid_argument);
    CHECK_THROWS_AS(two_corner_search(hl, f, -1.5 * f.eps), std::invalid_argument);
}
