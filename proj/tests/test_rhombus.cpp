#include <catch2/catch_amalgamated.hpp>

#include "rhombi/curve_gen.hpp"
#include "rhombi/rhombus_search.hpp"
#include "rhombi/separation.hpp"

using namespace rhombi;

namespace {

JordanCurve make(Shape shape, std::size_t n, double seed = 0.0) {
    CurveSpec spec;
    spec.shape = shape;
    spec.resolution = n;
    if (seed != 0.0) spec.parameters["seed"] = seed;
    return generate(spec);
}

JordanCurve z_shape() {
    return JordanCurve::from_vertices(
        {{1, 0}, {4, 0}, {4, 1}, {3, 1}, {3, 2}, {0, 2}, {0, 1}, {1, 1}});
}

double nearest_candidate(const std::vector<RhombusCandidate>& cands, Vec2 center) {
    double best = 1e300;
    for (const auto& c : cands) best = std::min(best, distance(c.center, center));
    return best;
}

}  // namespace

TEST_CASE("circle at pi/6 yields exactly the inscribed square") {
    JordanCurve circle = make(Shape::circle, 720);
    FindResult r = find_rhombi(circle, kPi / 6.0);
    REQUIRE(r.candidates.size() == 1);
    const auto& c = r.candidates.front();
    CHECK(norm(c.center) <= 1e-3);
    CHECK(c.side_dispersion <= 1e-3);
    for (int v = 0; v < 4; ++v) {
        double best = 1e300;
        for (int u = 0; u < 4; ++u) {
            double phi = kPi / 6.0 + u * 0.5 * kPi;
            best = std::min(best, distance(c.vertices[v], {std::cos(phi), std::sin(phi)}));
        }
        CHECK(best <= 2e-3);
    }
    CHECK_FALSE(r.not_guaranteed);
    CHECK_FALSE(r.finding);
}

TEST_CASE("ellipse at theta 0 yields the axis rhombus") {
    JordanCurve ellipse = make(Shape::ellipse, 720);
    FindResult r = find_rhombi(ellipse, 0.0);
    REQUIRE(r.candidates.size() == 1);
    const auto& c = r.candidates.front();
    CHECK(norm(c.center) <= 1e-3);
    CHECK(distance(c.vertices[0], {-2.0, 0.0}) <= 2e-3);
    CHECK(distance(c.vertices[2], {2.0, 0.0}) <= 2e-3);
    for (int k = 0; k < 4; ++k) {
        double side = distance(c.vertices[k], c.vertices[(k + 1) % 4]);
        CHECK(std::abs(side - std::sqrt(5.0)) <= 2e-3);
    }
}

TEST_CASE("unit square at theta 0 is exact") {
    JordanCurve square = make(Shape::square, 4);
    FindResult r = find_rhombi(square, 0.0);
    REQUIRE(r.candidates.size() == 1);
    const auto& c = r.candidates.front();
    CHECK(distance(c.center, {0.5, 0.5}) <= 1e-9);
    CHECK(distance(c.vertices[0], {0.0, 0.5}) <= 1e-9);
    CHECK(distance(c.vertices[1], {0.5, 0.0}) <= 1e-9);
    CHECK(distance(c.vertices[2], {1.0, 0.5}) <= 1e-9);
    CHECK(distance(c.vertices[3], {0.5, 1.0}) <= 1e-9);
}

TEST_CASE("validation rejects constructed violations") {
    JordanCurve circle = make(Shape::circle, 720);
    FindResult r = find_rhombi(circle, kPi / 6.0);
    REQUIRE_FALSE(r.candidates.empty());
    RhombusCandidate good = r.candidates.front();
    CHECK(validate_rhombus(good, circle, 1e-3).pass);

    RhombusCandidate displaced = good;
    displaced.vertices[0] = displaced.vertices[0] + Vec2{0.1, 0.0};
    auto rep = validate_rhombus(displaced, circle, 1e-3);
    CHECK_FALSE(rep.pass);
    CHECK(rep.on_curve_residual == Catch::Approx(0.1).margin(5e-3));

    RhombusCandidate degenerate = good;
    degenerate.vertices[2] = degenerate.vertices[0];
    auto rep2 = validate_rhombus(degenerate, circle, 1e-3);
    CHECK_FALSE(rep2.pass);
    CHECK(rep2.min_vertex_separation == 0.0);
}

TEST_CASE("angle classes theta and theta + pi/2 coincide") {
    JordanCurve star = make(Shape::random_star, 200, 3.0);
    for (double theta : {0.3, 1.1}) {
        FindResult a = find_rhombi(star, theta);
        FindResult b = find_rhombi(star, theta + 0.5 * kPi);
        REQUIRE(a.candidates.size() == b.candidates.size());
        double tol = 1e-9 * star.diameter();
        for (std::size_t k = 0; k < a.candidates.size(); ++k) {
            CHECK(a.candidates[k].theta == b.candidates[k].theta);
            for (int v = 0; v < 4; ++v)
                CHECK(distance(a.candidates[k].vertices[v],
                               b.candidates[k].vertices[v]) <= tol);
        }
    }
}

TEST_CASE("rigid motion equivariance") {
    OrthoTransform xf = OrthoTransform::translation({3.0, -1.0})
                            .compose(OrthoTransform::rotation(0.37));
    for (auto shape : {Shape::ellipse, Shape::random_star}) {
        JordanCurve curve =
            shape == Shape::ellipse ? make(shape, 720) : make(shape, 200, 2.0);
        JordanCurve moved = curve.transformed(xf);
        double tol = 1e-9 * curve.diameter();
        for (double theta : {0.3, 1.1}) {
            FindResult orig = find_rhombi(curve, theta);
            FindResult shifted = find_rhombi(moved, theta + 0.37);
            REQUIRE(orig.candidates.size() == shifted.candidates.size());
            for (const auto& oc : orig.candidates) {
                double best = 1e300;
                for (const auto& mc : shifted.candidates) {
                    double worst_vertex = 0.0;
                    for (int v = 0; v < 4; ++v) {
                        double nearest = 1e300;
                        for (int u = 0; u < 4; ++u)
                            nearest = std::min(nearest, distance(xf.apply(oc.vertices[v]),
                                                                 mc.vertices[u]));
                        worst_vertex = std::max(worst_vertex, nearest);
                    }
                    best = std::min(best, worst_vertex);
                }
                CHECK(best <= tol);
            }
        }
    }
}

TEST_CASE("scale equivariance") {
    JordanCurve star = make(Shape::random_star, 200, 5.0);
    JordanCurve scaled = star.scaled(2.5);
    FindResult a = find_rhombi(star, 0.7);
    FindResult b = find_rhombi(scaled, 0.7);
    REQUIRE(a.candidates.size() == b.candidates.size());
    for (std::size_t k = 0; k < a.candidates.size(); ++k)
        for (int v = 0; v < 4; ++v) {
            Vec2 expect = 2.5 * a.candidates[k].vertices[v];
            CHECK(distance(expect, b.candidates[k].vertices[v]) <=
                  1e-12 * norm(expect));
        }
}

TEST_CASE("plane masks intersect exactly when candidates exist") {
    for (auto shape : {Shape::circle, Shape::ellipse, Shape::random_star}) {
        JordanCurve curve =
            shape == Shape::random_star ? make(shape, 160, 4.0) : make(shape, 360);
        for (double theta : {0.2, 1.0}) {
            SupportFrame fa = support_frame(curve, theta);
            SupportFrame fb = support_frame(curve, theta + 0.5 * kPi);
            RecRegion rec = rec_region(fa, fb);
            MedianSet ma = median_set(split_arcs(curve, fa), fa.theta);
            MedianSet mb = median_set(split_arcs(curve, fb), fb.theta);
            bool masks_meet =
                !masks_intersect(plane_mask(ma, rec, 128), plane_mask(mb, rec, 128))
                     .empty();
            bool found = !find_rhombi(curve, theta).candidates.empty();
            CHECK(masks_meet == found);
        }
    }
}

TEST_CASE("level-aligned bars: thick median yields the continuum representatives") {
    JordanCurve z = z_shape();
    FindResult r = find_rhombi(z, 0.0);
    CHECK(r.thick_median);
    CHECK(r.candidates.size() >= 3);
    CHECK(nearest_candidate(r.candidates, {1.5, 1.0}) <= 1e-9);
    CHECK(nearest_candidate(r.candidates, {2.0, 1.0}) <= 1e-9);
    CHECK(nearest_candidate(r.candidates, {2.5, 1.0}) <= 1e-9);
    for (const auto& c : r.candidates) CHECK(validate_rhombus(c, z, 1e-9).pass);
    CHECK(find_special_corners(z).empty());
}

TEST_CASE("candidates come out sorted and deduplicated") {
    JordanCurve z = z_shape();
    FindResult r = find_rhombi(z, 0.0);
    for (std::size_t k = 0; k + 1 < r.candidates.size(); ++k) {
        const Vec2 a = r.candidates[k].center;
        const Vec2 b = r.candidates[k + 1].center;
        CHECK((a.x < b.x || (a.x == b.x && a.y < b.y)));
        CHECK(distance(a, b) >= kDegeneracyFloorFactor * z.diameter());
    }
}
