#pragma once

// Plane primitives shared by every module: vectors, angles, segments,
// orthogonal transforms, and segment intersection.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace rhombi {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Raised when an internal invariant (one the library itself guarantees)
/// fails; maps to CLI exit code 2.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 midpoint(Vec2 a, Vec2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline Vec2 lerp(Vec2 a, Vec2 b, double t) { return a + t * (b - a); }

/// Signed offset of p along the normal of the line family of angle theta:
/// x*sin(theta) - y*cos(theta). Lines of angle theta are its level sets.
inline double project(double theta, Vec2 p) {
    return p.x * std::sin(theta) - p.y * std::cos(theta);
}

/// Tangential coordinate along the direction of angle theta:
/// x*cos(theta) + y*sin(theta).
inline double tangential(double theta, Vec2 p) {
    return p.x * std::cos(theta) + p.y * std::sin(theta);
}

/// Reduce an angle to [0, pi). Line directions are periodic with period pi.
inline double canon_angle_pi(double theta) {
    double a = std::fmod(theta, kPi);
    if (a < 0.0) a += kPi;
    if (a == kPi) a = 0.0;
    return a;
}

/// Reduce a rhombus angle class to [0, pi/2); theta and theta + pi/2
/// describe the same rhombus class.
inline double canon_angle_class(double theta) {
    double a = std::fmod(theta, 0.5 * kPi);
    if (a < 0.0) a += 0.5 * kPi;
    if (a == 0.5 * kPi) a = 0.0;
    return a;
}

/// Wrap a difference into (-period/2, period/2].
inline double wrap_signed(double d, double period) {
    double a = std::fmod(d, period);
    if (a <= -0.5 * period) a += period;
    if (a > 0.5 * period) a -= period;
    return a;
}

/// Absolute distance between two line directions modulo pi.
inline double direction_distance(double a, double b) {
    return std::abs(wrap_signed(a - b, kPi));
}

struct Segment {
    Vec2 a, b;
    Vec2 at(double t) const { return lerp(a, b, t); }
    double length() const { return distance(a, b); }
};

inline double point_segment_distance(Vec2 p, Segment s) {
    Vec2 d = s.b - s.a;
    double len2 = norm2(d);
    if (len2 == 0.0) return distance(p, s.a);
    double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return distance(p, s.a + t * d);
}

// --- Orientation predicates (double precision; desk-scale inputs) ---

inline double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

inline bool on_segment_collinear(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed intersection test: true if the segments share any point.
inline bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    double d1 = orient(c, d, a);
    double d2 = orient(c, d, b);
    double d3 = orient(a, b, c);
    double d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment_collinear(c, d, a)) return true;
    if (d2 == 0 && on_segment_collinear(c, d, b)) return true;
    if (d3 == 0 && on_segment_collinear(a, b, c)) return true;
    if (d4 == 0 && on_segment_collinear(a, b, d)) return true;
    return false;
}

// --- Segment/segment intersection with overlap reporting ---

struct SegIntersection {
    enum class Kind { none, point, overlap };
    Kind kind = Kind::none;
    // Kind::point
    double t = 0.0, s = 0.0;
    Vec2 p;
    // Kind::overlap: parameter ranges on the first segment plus the matching
    // parameters on the second; p0/p1 are the overlap endpoints.
    double t0 = 0.0, t1 = 0.0, s0 = 0.0, s1 = 0.0;
    Vec2 p0, p1;
};

/// Intersect two segments. dist_tol decides when nearly parallel segments
/// count as collinear. Degenerate (zero length) segments are handled.
inline SegIntersection intersect_segments(const Segment& A, const Segment& B,
                                          double dist_tol) {
    SegIntersection out;
    Vec2 dA = A.b - A.a;
    Vec2 dB = B.b - B.a;
    double lenA = norm(dA);
    double lenB = norm(dB);
    const double eps = 1e-12;

    auto param_on = [](const Segment& s, Vec2 q) {
        Vec2 d = s.b - s.a;
        double l2 = norm2(d);
        if (l2 == 0.0) return 0.0;
        return dot(q - s.a, d) / l2;
    };

    if (lenA == 0.0 && lenB == 0.0) {
        if (distance(A.a, B.a) <= dist_tol) {
            out.kind = SegIntersection::Kind::point;
            out.p = A.a;
        }
        return out;
    }
    if (lenA == 0.0) {
        if (point_segment_distance(A.a, B) <= dist_tol) {
            out.kind = SegIntersection::Kind::point;
            out.t = 0.0;
            out.s = std::clamp(param_on(B, A.a), 0.0, 1.0);
            out.p = A.a;
        }
        return out;
    }
    if (lenB == 0.0) {
        if (point_segment_distance(B.a, A) <= dist_tol) {
            out.kind = SegIntersection::Kind::point;
            out.t = std::clamp(param_on(A, B.a), 0.0, 1.0);
            out.s = 0.0;
            out.p = B.a;
        }
        return out;
    }

    double denom = cross(dA, dB);
    if (std::abs(denom) > eps * lenA * lenB) {
        Vec2 r = B.a - A.a;
        double t = cross(r, dB) / denom;
        double s = cross(r, dA) / denom;
        if (t >= -eps && t <= 1.0 + eps && s >= -eps && s <= 1.0 + eps) {
            out.kind = SegIntersection::Kind::point;
            out.t = std::clamp(t, 0.0, 1.0);
            out.s = std::clamp(s, 0.0, 1.0);
            out.p = A.at(out.t);
        }
        return out;
    }

    // Parallel: collinear only if B's endpoints sit on A's line.
    double off_a = std::abs(cross(dA, B.a - A.a)) / lenA;
    double off_b = std::abs(cross(dA, B.b - A.a)) / lenA;
    if (off_a > dist_tol || off_b > dist_tol) return out;

    double ta = param_on(A, B.a);
    double tb = param_on(A, B.b);
    double lo = std::max(0.0, std::min(ta, tb));
    double hi = std::min(1.0, std::max(ta, tb));
    if (lo > hi + eps) return out;
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, 0.0, 1.0);
    if (hi - lo <= eps) {
        out.kind = SegIntersection::Kind::point;
        out.t = 0.5 * (lo + hi);
        out.p = A.at(out.t);
        out.s = std::clamp(param_on(B, out.p), 0.0, 1.0);
        return out;
    }
    out.kind = SegIntersection::Kind::overlap;
    out.t0 = lo;
    out.t1 = hi;
    out.p0 = A.at(lo);
    out.p1 = A.at(hi);
    out.s0 = std::clamp(param_on(B, out.p0), 0.0, 1.0);
    out.s1 = std::clamp(param_on(B, out.p1), 0.0, 1.0);
    return out;
}

// --- Orthogonal transforms (rotation/reflection + translation) ---

struct OrthoTransform {
    // p -> M p + t with M orthogonal (det +-1).
    double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
    Vec2 t;

    Vec2 apply(Vec2 p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
    Vec2 apply_linear(Vec2 v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    OrthoTransform inverse() const {
        // M orthogonal: inverse of the linear part is its transpose over det.
        double det = m00 * m11 - m01 * m10;
        OrthoTransform inv;
        inv.m00 = m11 / det;
        inv.m01 = -m01 / det;
        inv.m10 = -m10 / det;
        inv.m11 = m00 / det;
        Vec2 it = inv.apply_linear(t);
        inv.t = {-it.x, -it.y};
        return inv;
    }
    /// this after other: p -> this(other(p)).
    OrthoTransform compose(const OrthoTransform& other) const {
        OrthoTransform r;
        r.m00 = m00 * other.m00 + m01 * other.m10;
        r.m01 = m00 * other.m01 + m01 * other.m11;
        r.m10 = m10 * other.m00 + m11 * other.m10;
        r.m11 = m10 * other.m01 + m11 * other.m11;
        Vec2 lt = apply_linear(other.t);
        r.t = {lt.x + t.x, lt.y + t.y};
        return r;
    }
    bool reflects() const { return m00 * m11 - m01 * m10 < 0.0; }

    static OrthoTransform identity() { return {}; }
    static OrthoTransform rotation(double angle) {
        OrthoTransform r;
        r.m00 = std::cos(angle);
        r.m01 = -std::sin(angle);
        r.m10 = std::sin(angle);
        r.m11 = std::cos(angle);
        return r;
    }
    static OrthoTransform translation(Vec2 v) {
        OrthoTransform r;
        r.t = v;
        return r;
    }
    static OrthoTransform reflect_x_axis() {
        OrthoTransform r;
        r.m11 = -1.0;
        return r;
    }
    /// Reflection across the vertical line x = c.
    static OrthoTransform reflect_vertical(double c) {
        OrthoTransform r;
        r.m00 = -1.0;
        r.t = {2.0 * c, 0.0};
        return r;
    }
};

}  // namespace rhombi
