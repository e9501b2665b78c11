#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rhombi/curve_gen.hpp"
#include "rhombi/separation.hpp"

using namespace rhombi;

namespace {

ZeroMask blank(int G) {
    ZeroMask m;
    m.resolution = G;
    m.cells.assign(static_cast<std::size_t>(G) * G, 0);
    return m;
}

/// Monotone 4-connected staircase of marked cells between two opposite
/// corner cells; separates the other diagonal.
ZeroMask staircase(int G, std::mt19937_64& rng, bool main_diagonal) {
    ZeroMask m = blank(G);
    int x = 0, y = main_diagonal ? 0 : G - 1;
    int step_y = main_diagonal ? 1 : -1;
    m.set(x, y);
    while (x < G - 1 || (main_diagonal ? y < G - 1 : y > 0)) {
        bool can_x = x < G - 1;
        bool can_y = main_diagonal ? y < G - 1 : y > 0;
        bool move_x = can_x && (!can_y || (rng() & 1));
        if (move_x)
            ++x;
        else
            y += step_y;
        m.set(x, y);
    }
    return m;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("anti-diagonal band separates the off corners") {
    ZeroMask m = blank(32);
    for (int k = 0; k < 32; ++k) {
        m.set(k, 31 - k);
        if (k > 0) m.set(k, 32 - k);
    }
    CHECK(separates(m, CornerPair{{0, 0}, {1, 1}}));
    CHECK_FALSE(separates(m, CornerPair{{0, 1}, {1, 0}}));
}

TEST_CASE("empty mask separates nothing") {
    ZeroMask m = blank(32);
    CHECK_FALSE(separates(m, CornerPair{{0, 1}, {1, 0}}));
    CHECK_FALSE(separates(m, CornerPair{{0, 0}, {1, 1}}));
}

TEST_CASE("circle median mask separates the off-diagonal corners") {
    CurveSpec spec;
    spec.shape = Shape::circle;
    spec.resolution = 720;
    JordanCurve circle = generate(spec);
    ArcSplit arcs = split_arcs(circle, support_frame(circle, 0.0));
    ZeroMask mask = median_mask(arcs, 0.0, 64);
    CHECK(separates(mask, CornerPair{{0, 1}, {1, 0}}));
}

TEST_CASE("crossing bands intersect in the middle") {
    ZeroMask h = blank(32), v = blank(32);
    for (int k = 0; k < 32; ++k) {
        h.set(k, 15);
        h.set(k, 16);
        v.set(15, k);
        v.set(16, k);
    }
    auto cells = masks_intersect(h, v);
    REQUIRE_FALSE(cells.empty());
    for (auto [x, y] : cells) {
        CHECK((x == 15 || x == 16));
        CHECK((y == 15 || y == 16));
    }
}

TEST_CASE("mask intersection is idempotent") {
    std::mt19937_64 rng(7);
    ZeroMask m = staircase(24, rng, true);
    auto cells = masks_intersect(m, m);
    CHECK(cells.size() == m.count());
}

TEST_CASE("two corner-to-corner staircases intersect") {
    std::mt19937_64 rng(99);
    ZeroMask a = staircase(64, rng, true);
    ZeroMask b = staircase(64, rng, false);
    CHECK_FALSE(masks_intersect(a, b).empty());
}

TEST_CASE("resolution mismatch is rejected") {
    ZeroMask a = blank(16), b = blank(32);
    CHECK_THROWS_AS(masks_intersect(a, b), std::invalid_argument);
}

TEST_CASE("marked corner cell separates trivially") {
    ZeroMask m = blank(16);
    m.set(0, 15);
    CHECK(separates(m, CornerPair{{0, 1}, {1, 0}}));
}

TEST_CASE("separating staircases always intersect (discrete two-path lemma)") {
    std::mt19937_64 rng(20240518);
    const int G = 48;
    for (int trial = 0; trial < 200; ++trial) {
        ZeroMask a = staircase(G, rng, true);
        ZeroMask b = staircase(G, rng, false);
        // noise only thickens the sets
        for (int n = 0; n < 30; ++n) {
            a.set(static_cast<int>(uniform01(rng) * G), static_cast<int>(uniform01(rng) * G));
            b.set(static_cast<int>(uniform01(rng) * G), static_cast<int>(uniform01(rng) * G));
        }
        REQUIRE(separates(a, CornerPair{{0, 1}, {1, 0}}));
        REQUIRE(separates(b, CornerPair{{0, 0}, {1, 1}}));
        CHECK_FALSE(masks_intersect(a, b).empty());
    }
}

TEST_CASE("separation is monotone under adding marked cells") {
    std::mt19937_64 rng(5);
    const int G = 32;
    for (int trial = 0; trial < 40; ++trial) {
        ZeroMask a = staircase(G, rng, true);
        REQUIRE(separates(a, CornerPair{{0, 1}, {1, 0}}));
        for (int n = 0; n < 50; ++n)
            a.set(static_cast<int>(uniform01(rng) * G),
                  static_cast<int>(uniform01(rng) * G));
        CHECK(separates(a, CornerPair{{0, 1}, {1, 0}}));
    }
}
