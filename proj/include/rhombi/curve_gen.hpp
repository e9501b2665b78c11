#pragma once

// Deterministic test-fixture generators.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rhombi/jordan_curve.hpp"

namespace rhombi {

enum class Shape { circle, ellipse, rounded_polygon, random_star, lens, square };

struct CurveSpec {
    Shape shape = Shape::circle;
    std::size_t resolution = 360;
    std::map<std::string, double> parameters;  // radii, seed, lens exponent, ...

    double param(const std::string& key, double fallback) const {
        auto it = parameters.find(key);
        return it == parameters.end() ? fallback : it->second;
    }
};

inline Shape shape_from_name(const std::string& name) {
    if (name == "circle") return Shape::circle;
    if (name == "ellipse") return Shape::ellipse;
    if (name == "rounded_polygon") return Shape::rounded_polygon;
    if (name == "random_star") return Shape::random_star;
    if (name == "lens") return Shape::lens;
    if (name == "square") return Shape::square;
    throw ParseError("unknown shape: " + name);
}

namespace detail {

/// Portable uniform double in [0, 1): 53 bits straight from the engine, so
/// output does not depend on the standard library's distribution internals.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<Vec2> gen_circle(std::size_t n, double rx, double ry, Vec2 c) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back({c.x + rx * std::cos(phi), c.y + ry * std::sin(phi)});
    }
    return pts;
}

inline std::vector<Vec2> gen_square(std::size_t n, double side) {
    std::vector<Vec2> corners = {{0.0, 0.0}, {side, 0.0}, {side, side}, {0.0, side}};
    std::size_t per_edge = n / 4;
    if (per_edge < 1) per_edge = 1;
    std::vector<Vec2> pts;
    pts.reserve(4 * per_edge);
    for (std::size_t e = 0; e < 4; ++e) {
        Vec2 a = corners[e], b = corners[(e + 1) % 4];
        for (std::size_t k = 0; k < per_edge; ++k)
            pts.push_back(lerp(a, b, static_cast<double>(k) / static_cast<double>(per_edge)));
    }
    return pts;
}

inline std::vector<Vec2> gen_star(std::size_t n, std::uint64_t seed, double amp) {
    std::mt19937_64 rng(seed);
    // Low-order radial Fourier wiggle keeps the curve star-shaped (r > 0),
    // hence simple by construction.
    const int harmonics = 5;
    std::vector<double> a(harmonics), phase(harmonics);
    for (int h = 0; h < harmonics; ++h) {
        a[h] = amp * uniform01(rng) / static_cast<double>(h + 1);
        phase[h] = 2.0 * kPi * uniform01(rng);
    }
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        double r = 1.0;
        for (int h = 0; h < harmonics; ++h)
            r += a[h] * std::cos(static_cast<double>(h + 1) * phi + phase[h]);
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return pts;
}

/// Lower branch y = x^a, upper branch y = x^(1/a), meeting at (0,0) and (1,1).
/// Both meeting points are exact vertices.
inline std::vector<Vec2> gen_lens(std::size_t n, double a) {
    std::size_t n_low = n / 2 + 1;   // includes both corners
    std::size_t n_up = n - n_low;    // strictly between the corners
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n_low; ++k) {
        double x = static_cast<double>(k) / static_cast<double>(n_low - 1);
        pts.push_back({x, std::pow(x, a)});
    }
    for (std::size_t k = 1; k <= n_up; ++k) {
        double x = 1.0 - static_cast<double>(k) / static_cast<double>(n_up + 1);
        pts.push_back({x, std::pow(x, 1.0 / a)});
    }
    return pts;
}

inline std::vector<Vec2> gen_rounded_polygon(std::size_t n, double sides_d,
                                             double radius, double rounding) {
    int sides = std::max(3, static_cast<int>(sides_d));
    double half = 0.5 * kPi - kPi / sides;  // half interior angle
    double corner_cut = rounding / std::tan(half);
    std::vector<Vec2> corners;
    for (int i = 0; i < sides; ++i) {
        double phi = 2.0 * kPi * i / sides;
        corners.push_back({radius * std::cos(phi), radius * std::sin(phi)});
    }
    double edge_len = distance(corners[0], corners[1]);
    if (corner_cut > 0.45 * edge_len) corner_cut = 0.45 * edge_len;
    double arc_sweep = kPi - 2.0 * half;  // exterior turn at each corner

    // Piece list: straight spans between tangent points, arcs at corners.
    struct Piece {
        bool is_arc;
        Vec2 a, b;        // straight endpoints
        Vec2 center;      // arc
        double ang0, ang1;
    };
    std::vector<Piece> pieces;
    double total = 0.0;
    std::vector<double> lengths;
    for (int i = 0; i < sides; ++i) {
        Vec2 prev = corners[(i + sides - 1) % sides];
        Vec2 cur = corners[i];
        Vec2 next = corners[(i + 1) % sides];
        Vec2 din = (1.0 / distance(prev, cur)) * (cur - prev);
        Vec2 dout = (1.0 / distance(cur, next)) * (next - cur);
        Vec2 t_in = cur - corner_cut * din;
        Vec2 t_out = cur + corner_cut * dout;
        // Regular polygon centered at the origin: the interior bisector at a
        // corner points straight at the center.
        double center_dist = rounding / std::sin(half);
        Vec2 inward = (-1.0 / norm(cur)) * cur;
        Vec2 center = cur + center_dist * inward;
        double ang0 = std::atan2(t_in.y - center.y, t_in.x - center.x);
        double ang1 = ang0 + arc_sweep;
        pieces.push_back({true, {}, {}, center, ang0, ang1});
        lengths.push_back(rounding * arc_sweep);
        total += lengths.back();
        Vec2 next_t_in = next - corner_cut * dout;
        pieces.push_back({false, t_out, next_t_in, {}, 0.0, 0.0});
        lengths.push_back(distance(t_out, next_t_in));
        total += lengths.back();
    }
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = total * static_cast<double>(k) / static_cast<double>(n);
        std::size_t pi = 0;
        while (pi + 1 < pieces.size() && s > lengths[pi]) {
            s -= lengths[pi];
            ++pi;
        }
        const Piece& pc = pieces[pi];
        double u = lengths[pi] > 0.0 ? s / lengths[pi] : 0.0;
        if (pc.is_arc) {
            double ang = pc.ang0 + u * (pc.ang1 - pc.ang0);
            pts.push_back({pc.center.x + rounding * std::cos(ang),
                           pc.center.y + rounding * std::sin(ang)});
        } else {
            pts.push_back(lerp(pc.a, pc.b, u));
        }
    }
    return pts;
}

}  // namespace detail

/// Deterministic for a fixed spec (including seed).
inline JordanCurve generate(const CurveSpec& spec) {
    if (spec.resolution < 3) throw ValidationError("resolution must be >= 3");
    std::vector<Vec2> pts;
    switch (spec.shape) {
        case Shape::circle: {
            double r = spec.param("radius", 1.0);
            if (r <= 0.0) throw ValidationError("radius must be positive");
            pts = detail::gen_circle(spec.resolution, r, r,
                                     {spec.param("cx", 0.0), spec.param("cy", 0.0)});
            break;
        }
        case Shape::ellipse: {
            double rx = spec.param("rx", 2.0);
            double ry = spec.param("ry", 1.0);
            if (rx <= 0.0 || ry <= 0.0) throw ValidationError("radii must be positive");
            pts = detail::gen_circle(spec.resolution, rx, ry,
                                     {spec.param("cx", 0.0), spec.param("cy", 0.0)});
            break;
        }
        case Shape::rounded_polygon: {
            double radius = spec.param("radius", 1.0);
            double rounding = spec.param("rounding", 0.2);
            if (radius <= 0.0 || rounding <= 0.0)
                throw ValidationError("radius and rounding must be positive");
            pts = detail::gen_rounded_polygon(spec.resolution, spec.param("sides", 5.0),
                                              radius, rounding);
            break;
        }
        case Shape::random_star: {
            auto seed = static_cast<std::uint64_t>(spec.param("seed", 1.0));
            pts = detail::gen_star(spec.resolution, seed, spec.param("amp", 0.35));
            break;
        }
        case Shape::lens: {
            double a = spec.param("a", 2.0);
            if (a <= 1.0) throw ValidationError("lens exponent must exceed 1");
            if (spec.resolution < 6) throw ValidationError("lens needs resolution >= 6");
            pts = detail::gen_lens(spec.resolution, a);
            break;
        }
        case Shape::square: {
            double side = spec.param("side", 1.0);
            if (side <= 0.0) throw ValidationError("side must be positive");
            pts = detail::gen_square(spec.resolution, side);
            break;
        }
    }
    return JordanCurve::from_vertices(std::move(pts));
}

}  // namespace rhombi
