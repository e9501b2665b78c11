#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rhombi/curve_gen.hpp"
#include "rhombi/sweep.hpp"

using namespace rhombi;

namespace {

JordanCurve make(Shape shape, std::size_t n, double seed = 0.0) {
    CurveSpec spec;
    spec.shape = shape;
    spec.resolution = n;
    if (seed != 0.0) spec.parameters["seed"] = seed;
    return generate(spec);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("square corners are never special") {
    JordanCurve square = make(Shape::square, 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(special_corner_angles(square, i).empty());
    CHECK(find_special_corners(square).empty());
}

TEST_CASE("right triangle corner at the right angle is not special") {
    JordanCurve tri = JordanCurve::from_vertices({{0, 0}, {1, 0}, {0, 1}});
    CHECK(special_corner_angles(tri, 0).empty());
    CHECK(find_special_corners(tri).empty());
}

TEST_CASE("circle has no special corners") {
    CHECK(find_special_corners(make(Shape::circle, 720)).empty());
}

TEST_CASE("lens has exactly its two construction corners") {
    JordanCurve lens = make(Shape::lens, 800);
    auto records = find_special_corners(lens);
    REQUIRE(records.size() == 2);
    CHECK(records[0].point == Vec2{0.0, 0.0});
    CHECK(records[1].point == Vec2{1.0, 1.0});
    CHECK(records[0].special_angles.contains(0.0));
    CHECK(records[1].special_angles.contains(0.0));
    // zero sits strictly inside the sharp corner's wrap interval
    CHECK(records[0].special_angles.contains(1e-4));
    CHECK(records[0].special_angles.contains(0.5 * kPi - 1e-4));
}

TEST_CASE("lens corner angle set matches the direction-cone computation") {
    JordanCurve lens = make(Shape::lens, 800);
    AngleIntervals set = special_corner_angles(lens, 0);
    // directions from (0,0) to the other samples span about
    // [atan(1/800), atan(sqrt(800))]; the special classes avoid that cone
    CHECK(set.contains(0.0));
    CHECK_FALSE(set.contains(0.3));
    CHECK_FALSE(set.contains(1.0));
    double span = set.total();
    CHECK(span > 0.0);
    CHECK(span < 0.2);
}

TEST_CASE("rotation shifts every special angle set") {
    JordanCurve lens = make(Shape::lens, 400);
    double phi = 0.29;
    JordanCurve rotated = lens.transformed(OrthoTransform::rotation(phi));
    auto base = find_special_corners(lens);
    auto moved = find_special_corners(rotated);
    REQUIRE(base.size() == moved.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
        AngleIntervals expect = base[k].special_angles.shifted(phi);
        REQUIRE(expect.parts.size() == moved[k].special_angles.parts.size());
        for (std::size_t m = 0; m < expect.parts.size(); ++m) {
            CHECK(expect.parts[m].first ==
                  Catch::Approx(moved[k].special_angles.parts[m].first).margin(1e-9));
            CHECK(expect.parts[m].second ==
                  Catch::Approx(moved[k].special_angles.parts[m].second).margin(1e-9));
        }
    }
}

TEST_CASE("soundness spot check: special lines graze the curve only at the corner") {
    JordanCurve lens = make(Shape::lens, 800);
    auto records = find_special_corners(lens);
    REQUIRE_FALSE(records.empty());
    std::mt19937_64 rng(424242);
    const double diam = lens.diameter();
    int spot_checks = 0;
    while (spot_checks < 20) {
        const CornerRecord& rec = records[rng() % records.size()];
        const auto& parts = rec.special_angles.parts;
        auto [a, b] = parts[rng() % parts.size()];
        // keep away from the interval boundary: the guard there is only 1e-12
        double theta = a + (0.1 + 0.8 * uniform01(rng)) * (b - a);
        ++spot_checks;
        for (double line_angle : {theta, theta + 0.5 * kPi}) {
            Vec2 n{std::sin(line_angle), -std::cos(line_angle)};
            double level = dot(n, rec.point);
            for (int k = 0; k < 10000; ++k) {
                Vec2 s = lens.point_at(static_cast<double>(k) / 10000.0);
                if (distance(s, rec.point) <= 1e-5 * diam) continue;
                CHECK(std::abs(dot(n, s) - level) > 1e-9 * diam);
            }
        }
    }
}

TEST_CASE("sweep plan on the circle marks everything corner free") {
    JordanCurve circle = make(Shape::circle, 360);
    std::vector<double> angles = {0.0, 0.3, 0.7, 1.2};
    SweepPlan plan = plan_sweep(circle, angles);
    CHECK(plan.corners.empty());
    CHECK(plan.intervals.empty());
    for (const auto& e : plan.entries) CHECK(e.mode == SweepMode::corner_free);
}

TEST_CASE("sweep plan on the lens: pq direction is covered, angle 0 is not") {
    JordanCurve lens = make(Shape::lens, 800);
    SweepPlan plan = plan_sweep(lens, {0.25 * kPi, 0.0});
    REQUIRE(plan.entries.size() == 2);
    CHECK(plan.entries[0].mode == SweepMode::two_corner);
    REQUIRE(plan.entries[0].witness.has_value());
    CHECK(plan.entries[0].witness->theta0_class == Catch::Approx(0.25 * kPi));
    CHECK(plan.entries[0].witness->eps > 0.0);
    CHECK(plan.entries[1].mode == SweepMode::uncovered);
}

TEST_CASE("convex polygons with wide interior angles have no special corners") {
    // regular hexagon: interior angles 2pi/3 > pi/2
    std::vector<Vec2> hex;
    for (int k = 0; k < 6; ++k)
        hex.push_back({std::cos(k * kPi / 3.0), std::sin(k * kPi / 3.0)});
    CHECK(find_special_corners(JordanCurve::from_vertices(hex)).empty());
}
