#pragma once

// Closed simple polylines with arc-length parametrization. The curve is the
// computable stand-in for an arbitrary Jordan curve; every downstream zero
// set is then piecewise linear.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rhombi/geometry.hpp"

namespace rhombi {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what,
                    std::vector<std::pair<std::size_t, std::size_t>> pairs = {})
        : std::runtime_error(what), offending_pairs(std::move(pairs)) {}
    std::vector<std::pair<std::size_t, std::size_t>> offending_pairs;
};

struct SimplicityReport {
    bool simple = true;
    std::vector<std::pair<std::size_t, std::size_t>> crossings;  // edge index pairs
};

/// Check that the closed polyline over `vertices` is simple: non-adjacent
/// edges never meet, adjacent edges share only their common vertex.
/// O(E^2) scan; every crossing pair is reported.
inline SimplicityReport validate_simple(const std::vector<Vec2>& vertices) {
    SimplicityReport report;
    const std::size_t n = vertices.size();
    if (n < 3) {
        report.simple = false;
        return report;
    }
    auto vert = [&](std::size_t i) { return vertices[i % n]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            Vec2 a = vert(i), b = vert(i + 1);
            Vec2 c = vert(j), d = vert(j + 1);
            if (adjacent) {
                // Shared vertex s; the other two endpoints must not fold back
                // onto the shared edge line.
                Vec2 s, u, v;
                if (j == i + 1) {
                    s = b; u = a; v = d;
                } else {
                    s = a; u = b; v = c;
                }
                if (orient(s, u, v) == 0.0 && dot(u - s, v - s) > 0.0)
                    report.crossings.emplace_back(i, j);
            } else {
                if (segments_touch(a, b, c, d)) report.crossings.emplace_back(i, j);
            }
        }
    }
    report.simple = report.crossings.empty();
    return report;
}

class JordanCurve {
public:
    JordanCurve() = default;

    /// Build and validate. A duplicate closing vertex (last == first) is
    /// dropped silently. Throws ValidationError on fewer than 3 distinct
    /// vertices, repeated consecutive vertices, or self intersection.
    static JordanCurve from_vertices(std::vector<Vec2> pts) {
        if (pts.size() >= 2 && pts.front() == pts.back()) pts.pop_back();
        if (pts.size() < 3)
            throw ValidationError("curve needs at least 3 distinct vertices");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i] == pts[(i + 1) % pts.size()])
                throw ValidationError("repeated consecutive vertex at index " +
                                      std::to_string(i));
        }
        SimplicityReport rep = validate_simple(pts);
        if (!rep.simple) {
            auto [i, j] = rep.crossings.front();
            throw ValidationError("curve is not simple: edges (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") intersect",
                                  rep.crossings);
        }
        return JordanCurve(std::move(pts));
    }

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double length() const { return cumulative_.back(); }
    double diameter() const { return diameter_; }

    Vec2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    Segment edge(std::size_t i) const {
        return {vertices_[i % vertices_.size()],
                vertices_[(i + 1) % vertices_.size()]};
    }

    /// Curve parameter of vertex i, in [0, 1).
    double vertex_param(std::size_t i) const {
        return cumulative_[i % vertices_.size()] / length();
    }

    /// Edge index and local coordinate of the point at parameter t.
    std::pair<std::size_t, double> locate(double t) const {
        double s = wrap_param(t) * length();
        std::size_t lo = 0, hi = vertices_.size();
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cumulative_[mid] <= s)
                lo = mid;
            else
                hi = mid;
        }
        double seg_len = cumulative_[lo + 1] - cumulative_[lo];
        double u = seg_len > 0.0 ? (s - cumulative_[lo]) / seg_len : 0.0;
        return {lo, u};
    }

    /// Point at parameter t (wrapped into [0, 1)); proportional to arc length,
    /// point_at(0) == vertices()[0].
    Vec2 point_at(double t) const {
        auto [e, u] = locate(t);
        return lerp(vertices_[e], vertices_[(e + 1) % vertices_.size()], u);
    }

    /// Unit tangent of the edge containing parameter t.
    Vec2 tangent_at(double t) const {
        auto [e, u] = locate(t);
        (void)u;
        Vec2 d = vertices_[(e + 1) % vertices_.size()] - vertices_[e];
        double len = norm(d);
        return len > 0.0 ? (1.0 / len) * d : Vec2{1.0, 0.0};
    }

    /// Distance from p to the polyline (min over edges).
    double distance_to(Vec2 p) const {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            best = std::min(best, point_segment_distance(p, edge(i)));
        return best;
    }

    /// Apply an orthogonal transform. Simplicity is preserved, so the result
    /// skips revalidation; vertex order and parameters carry over unchanged.
    JordanCurve transformed(const OrthoTransform& xf) const {
        std::vector<Vec2> pts;
        pts.reserve(vertices_.size());
        for (Vec2 v : vertices_) pts.push_back(xf.apply(v));
        return JordanCurve(std::move(pts));
    }

    JordanCurve scaled(double s) const {
        std::vector<Vec2> pts;
        pts.reserve(vertices_.size());
        for (Vec2 v : vertices_) pts.push_back({s * v.x, s * v.y});
        return JordanCurve(std::move(pts));
    }

    static double wrap_param(double t) {
        double u = t - std::floor(t);
        if (u >= 1.0) u = 0.0;
        return u;
    }

    bool operator==(const JordanCurve& other) const {
        return vertices_ == other.vertices_;
    }

private:
    explicit JordanCurve(std::vector<Vec2> pts) : vertices_(std::move(pts)) {
        cumulative_.resize(vertices_.size() + 1);
        cumulative_[0] = 0.0;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            cumulative_[i + 1] =
                cumulative_[i] +
                distance(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
        }
        diameter_ = compute_diameter();
    }

    double compute_diameter() const {
        // Convex hull then pairwise scan over hull points.
        std::vector<Vec2> pts = vertices_;
        std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 2) return 0.0;
        std::vector<Vec2> hull(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
            hull[k++] = pts[i];
        }
        std::size_t lower = k + 1;
        for (std::size_t i = pts.size() - 1; i-- > 0;) {
            while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k);
        double best = 0.0;
        for (std::size_t i = 0; i < hull.size(); ++i)
            for (std::size_t j = i + 1; j < hull.size(); ++j)
                best = std::max(best, distance(hull[i], hull[j]));
        return best;
    }

    std::vector<Vec2> vertices_;
    std::vector<double> cumulative_;  // size N+1, prefix arc lengths
    double diameter_ = 0.0;
};

/// Wrap-aware signed difference of curve parameters, in (-0.5, 0.5].
inline double param_delta(double from, double to) {
    return wrap_signed(to - from, 1.0);
}

/// True if parameter t lies in the forward interval from a to b (wrapping).
inline bool param_in_forward(double a, double b, double t) {
    double span = b - a;
    if (span < 0.0) span += 1.0;
    double off = t - a;
    if (off < 0.0) off += 1.0;
    return off >= 0.0 && off <= span;
}

}  // namespace rhombi
