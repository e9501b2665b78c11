#pragma once

// Special-corner detection. A curve point p is a special corner of angle
// theta when the lines of angle theta and theta + pi/2 through p meet the
// curve only at p. For polygons only vertices qualify (an edge-interior point
// extends in two opposite directions, which no rotated quadrant avoids), and
// the angle set is computed exactly from the direction-occupancy set of p.

#include <cstddef>
#include <utility>
#include <vector>

#include "rhombi/jordan_curve.hpp"

namespace rhombi {

inline constexpr double kAngularGuard = 1e-12;  // strictness guard, radians

/// Union of closed intervals on the angle-class circle [0, pi/2), stored as
/// sorted non-wrapping parts within [0, pi/2].
struct AngleIntervals {
    std::vector<std::pair<double, double>> parts;

    bool empty() const { return parts.empty(); }
    double total() const {
        double t = 0.0;
        for (auto [a, b] : parts) t += b - a;
        return t;
    }
    bool contains(double angle) const {
        double c = canon_angle_class(angle);
        for (auto [a, b] : parts) {
            if (c >= a && c <= b) return true;
            if (c == 0.0 && b >= 0.5 * kPi) return true;  // wrap identification
        }
        return false;
    }
    /// Rotate the whole set by delta on the class circle.
    AngleIntervals shifted(double delta) const {
        AngleIntervals out;
        const double P = 0.5 * kPi;
        for (auto [a, b] : parts) {
            double lo = a + delta;
            double len = b - a;
            lo -= P * std::floor(lo / P);
            double hi = lo + len;
            if (hi <= P) {
                out.parts.emplace_back(lo, hi);
            } else {
                out.parts.emplace_back(lo, P);
                out.parts.emplace_back(0.0, hi - P);
            }
        }
        out.normalize();
        return out;
    }
    void normalize() {
        std::sort(parts.begin(), parts.end());
        std::vector<std::pair<double, double>> merged;
        for (auto [a, b] : parts) {
            if (!merged.empty() && a <= merged.back().second)
                merged.back().second = std::max(merged.back().second, b);
            else
                merged.emplace_back(a, b);
        }
        parts = std::move(merged);
    }
    /// Largest value in the set below `limit` (circularly ignored); used to
    /// bound corner angles from above.
    double sup_below(double limit) const {
        double best = -1.0;
        for (auto [a, b] : parts) {
            if (a >= limit) continue;
            best = std::max(best, std::min(b, limit));
        }
        return best;
    }
};

namespace detail {

/// Accumulates occupied directions on the class circle [0, pi/2).
struct ClassOccupancy {
    std::vector<std::pair<double, double>> parts;
    bool full = false;
    const double P = 0.5 * kPi;

    void add_wrapped(double lo, double len) {
        if (full) return;
        if (len >= P) {
            full = true;
            return;
        }
        lo -= P * std::floor(lo / P);
        double hi = lo + len;
        if (hi <= P) {
            parts.emplace_back(lo, hi);
        } else {
            parts.emplace_back(lo, P);
            parts.emplace_back(0.0, hi - P);
        }
    }
    /// Fold a direction interval [lo, hi] from the real line onto the class
    /// circle; directions are already modulo-pi equivalent, so only the
    /// pi/2 fold matters here.
    void add_direction_span(double lo, double hi) { add_wrapped(lo, hi - lo); }
    void add_single(double dir) { add_wrapped(dir, 0.0); }

    /// Complement on the circle after expanding every part by the guard.
    AngleIntervals complement(double guard) const {
        AngleIntervals out;
        if (full) return out;
        std::vector<std::pair<double, double>> occ;
        for (auto [a, b] : parts) {
            double lo = a - guard, hi = b + guard;
            if (lo < 0.0) {
                occ.emplace_back(0.0, hi);
                occ.emplace_back(lo + P, P);
            } else if (hi > P) {
                occ.emplace_back(lo, P);
                occ.emplace_back(0.0, hi - P);
            } else {
                occ.emplace_back(lo, hi);
            }
        }
        if (occ.empty()) {
            out.parts.emplace_back(0.0, P);
            return out;
        }
        std::sort(occ.begin(), occ.end());
        std::vector<std::pair<double, double>> merged;
        for (auto [a, b] : occ) {
            if (!merged.empty() && a <= merged.back().second)
                merged.back().second = std::max(merged.back().second, b);
            else
                merged.emplace_back(a, b);
        }
        // Gaps between consecutive occupied parts, circularly.
        for (std::size_t k = 0; k + 1 < merged.size(); ++k)
            if (merged[k].second < merged[k + 1].first)
                out.parts.emplace_back(merged[k].second, merged[k + 1].first);
        double head = merged.front().first;
        double tail = merged.back().second;
        if (tail < P && head > 0.0) {
            out.parts.emplace_back(tail, P);
            out.parts.emplace_back(0.0, head);
        } else if (tail < P) {
            out.parts.emplace_back(tail, P);
        } else if (head > 0.0) {
            out.parts.emplace_back(0.0, head);
        }
        out.normalize();
        return out;
    }
};

}  // namespace detail

/// Angle classes for which the given vertex is a special corner. The
/// occupancy set collects, over every edge not incident to the vertex, the
/// closed span of line directions from the vertex to the edge, plus the two
/// incident edge directions; the special set is the guarded open complement
/// folded onto [0, pi/2).
inline AngleIntervals special_corner_angles(const JordanCurve& curve,
                                            std::size_t vertex_index) {
    const auto& verts = curve.vertices();
    const std::size_t n = verts.size();
    const Vec2 p = verts[vertex_index];
    detail::ClassOccupancy occ;

    for (std::size_t e = 0; e < n && !occ.full; ++e) {
        std::size_t e1 = (e + 1) % n;
        bool incident = e == vertex_index || e1 == vertex_index;
        if (incident) {
            std::size_t other = e == vertex_index ? e1 : e;
            Vec2 d = verts[other] - p;
            occ.add_single(std::atan2(d.y, d.x));
            continue;
        }
        Vec2 a = verts[e] - p;
        Vec2 b = verts[e1] - p;
        double alpha = std::atan2(a.y, a.x);
        double beta = std::atan2(b.y, b.x);
        double delta = wrap_signed(beta - alpha, 2.0 * kPi);
        double lo = std::min(alpha, alpha + delta);
        double hi = std::max(alpha, alpha + delta);
        occ.add_direction_span(lo, hi);
    }
    return occ.complement(kAngularGuard);
}

struct CornerRecord {
    std::size_t vertex_index = kNone;
    Vec2 point;
    AngleIntervals special_angles;
};

/// Every vertex that is a special corner of at least one angle. Vertices
/// whose incident edges span an angle >= pi/2 cannot qualify and are skipped.
inline std::vector<CornerRecord> find_special_corners(const JordanCurve& curve) {
    std::vector<CornerRecord> records;
    const auto& verts = curve.vertices();
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 prev = verts[(i + n - 1) % n] - verts[i];
        Vec2 next = verts[(i + 1) % n] - verts[i];
        if (dot(prev, next) <= 0.0) continue;
        AngleIntervals set = special_corner_angles(curve, i);
        if (!set.empty()) records.push_back({i, verts[i], std::move(set)});
    }
    return records;
}

}  // namespace rhombi
