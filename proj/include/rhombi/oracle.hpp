#pragma once

// Independent cross-validation: dense resampling, direction-filtered chord
// enumeration, midpoint bucketing, and Newton polish of each hit. Shares only
// the curve model and plane primitives with the median pipeline.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rhombi/rhombus_search.hpp"

namespace rhombi {

struct OracleConfig {
    std::size_t samples = 2000;
    double angle_tol = 0.0;     // radians; <= 0 picks a default from the spacing
    double midpoint_tol = 0.0;  // units of the diameter; <= 0 likewise
};

namespace detail {

struct ChordHit {
    Vec2 mid;
    std::size_t i = 0, j = 0;
};

/// Newton iteration on the four curve parameters of a near-rhombus: drive the
/// two chord-level mismatches and the midpoint gap to zero. Returns true when
/// the residual drops below 1e-12 * diameter.
inline bool refine_candidate(const JordanCurve& curve, double theta,
                             std::array<double, 4>& t) {
    const double diam = curve.diameter();
    const double len = curve.length();
    const double target = 1e-12 * diam;
    const double max_step = 8.0 / static_cast<double>(curve.size() + 1) + 8e-3;
    double st = std::sin(theta), ct = std::cos(theta);

    for (int iter = 0; iter < 60; ++iter) {
        std::array<Vec2, 4> X;
        std::array<Vec2, 4> T;
        for (int k = 0; k < 4; ++k) {
            X[k] = curve.point_at(t[k]);
            T[k] = len * curve.tangent_at(t[k]);
        }
        // Residuals: theta-chord level match, perpendicular-chord level match,
        // and the two components of the midpoint gap.
        double F[4] = {
            (X[0].x * st - X[0].y * ct) - (X[2].x * st - X[2].y * ct),
            (X[1].x * ct + X[1].y * st) - (X[3].x * ct + X[3].y * st),
            0.5 * (X[0].x + X[2].x - X[1].x - X[3].x),
            0.5 * (X[0].y + X[2].y - X[1].y - X[3].y),
        };
        double err = 0.0;
        for (double f : F) err = std::max(err, std::abs(f));
        if (err <= target) return true;

        double J[4][4] = {
            {T[0].x * st - T[0].y * ct, 0.0, -(T[2].x * st - T[2].y * ct), 0.0},
            {0.0, T[1].x * ct + T[1].y * st, 0.0, -(T[3].x * ct + T[3].y * st)},
            {0.5 * T[0].x, -0.5 * T[1].x, 0.5 * T[2].x, -0.5 * T[3].x},
            {0.5 * T[0].y, -0.5 * T[1].y, 0.5 * T[2].y, -0.5 * T[3].y},
        };
        // Gaussian elimination with partial pivoting.
        double rhs[4] = {-F[0], -F[1], -F[2], -F[3]};
        int perm[4] = {0, 1, 2, 3};
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(J[perm[r]][col]) > std::abs(J[perm[piv]][col])) piv = r;
            std::swap(perm[col], perm[piv]);
            double diag = J[perm[col]][col];
            if (std::abs(diag) < 1e-300) return false;
            for (int r = col + 1; r < 4; ++r) {
                double factor = J[perm[r]][col] / diag;
                for (int c = col; c < 4; ++c) J[perm[r]][c] -= factor * J[perm[col]][c];
                rhs[perm[r]] -= factor * rhs[perm[col]];
            }
        }
        double delta[4];
        for (int row = 3; row >= 0; --row) {
            double acc = rhs[perm[row]];
            for (int c = row + 1; c < 4; ++c) acc -= J[perm[row]][c] * delta[c];
            delta[row] = acc / J[perm[row]][row];
        }
        for (int k = 0; k < 4; ++k) {
            double d = std::clamp(delta[k], -max_step, max_step);
            t[k] = JordanCurve::wrap_param(t[k] + d);
        }
    }
    return false;
}

inline std::int64_t grid_key(Vec2 p, double cell) {
    auto gx = static_cast<std::int64_t>(std::floor(p.x / cell));
    auto gy = static_cast<std::int64_t>(std::floor(p.y / cell));
    return gx * 73856093 ^ gy * 19349663;
}

}  // namespace detail

/// Dense-chord rhombus finder. Every pair of samples whose direction lies
/// within angle_tol of theta (resp. theta + pi/2) is a chord; chord pairs with
/// nearby midpoints seed candidates, which are polished by Newton iteration
/// and deduplicated by center.
inline std::vector<RhombusCandidate> brute_force_rhombi(const JordanCurve& curve,
                                                        double theta,
                                                        OracleConfig config) {
    if (config.samples < 100)
        throw std::invalid_argument("oracle needs at least 100 samples");
    const double cls = canon_angle_class(theta);
    const std::size_t M = config.samples;
    const double diam = curve.diameter();
    const double spacing = curve.length() / static_cast<double>(M);
    double angle_tol = config.angle_tol > 0.0
                           ? config.angle_tol
                           : std::max(0.02, 8.0 * spacing / diam);
    double midpoint_tol =
        config.midpoint_tol > 0.0 ? config.midpoint_tol : 2.0 * spacing / diam;

    std::vector<Vec2> pts(M);
    std::vector<double> params(M);
    for (std::size_t k = 0; k < M; ++k) {
        params[k] = static_cast<double>(k) / static_cast<double>(M);
        pts[k] = curve.point_at(params[k]);
    }

    // Direction filter without atan2: |sin(dir - cls)| <= sin(angle_tol).
    const double sin_tol = std::sin(std::min(angle_tol, 0.5 * kPi));
    const Vec2 u_theta{std::cos(cls), std::sin(cls)};
    const Vec2 u_perp{-u_theta.y, u_theta.x};
    const double min_len = kDegeneracyFloorFactor * diam;

    std::vector<detail::ChordHit> chords_theta, chords_perp;
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = i + 1; j < M; ++j) {
            Vec2 d = pts[j] - pts[i];
            double len = norm(d);
            if (len < min_len) continue;
            double lim = len * sin_tol;
            if (std::abs(cross(u_theta, d)) <= lim)
                chords_theta.push_back({midpoint(pts[i], pts[j]), i, j});
            if (std::abs(cross(u_perp, d)) <= lim)
                chords_perp.push_back({midpoint(pts[i], pts[j]), i, j});
        }
    }

    const double match_radius = midpoint_tol * diam;
    const double cell = std::max(match_radius, 1e-300);
    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
    for (std::size_t k = 0; k < chords_theta.size(); ++k)
        grid[detail::grid_key(chords_theta[k].mid, cell)].push_back(k);

    struct Raw {
        double quality;
        Vec2 center;
        std::array<std::size_t, 4> idx;  // theta chord (i, j), perp chord (i, j)
    };
    std::vector<Raw> raw;
    for (const auto& pc : chords_perp) {
        auto gx = static_cast<std::int64_t>(std::floor(pc.mid.x / cell));
        auto gy = static_cast<std::int64_t>(std::floor(pc.mid.y / cell));
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find((gx + dx) * 73856093 ^ (gy + dy) * 19349663);
                if (it == grid.end()) continue;
                for (std::size_t k : it->second) {
                    const auto& tc = chords_theta[k];
                    double gap = distance(tc.mid, pc.mid);
                    if (gap > match_radius) continue;
                    raw.push_back({gap, midpoint(tc.mid, pc.mid),
                                   {tc.i, tc.j, pc.i, pc.j}});
                }
            }
    }

    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.quality != b.quality) return a.quality < b.quality;
        if (a.center.x != b.center.x) return a.center.x < b.center.x;
        return a.center.y < b.center.y;
    });
    const double seed_radius = 1.5 * spacing;
    std::vector<Raw> seeds;
    for (const Raw& r : raw) {
        bool dup = false;
        for (const Raw& s : seeds)
            if (distance(r.center, s.center) < seed_radius) {
                dup = true;
                break;
            }
        if (!dup) seeds.push_back(r);
    }

    const double floor = kDegeneracyFloorFactor * diam;
    std::vector<RhombusCandidate> cands;
    for (const Raw& seed : seeds) {
        std::array<double, 4> t = {params[seed.idx[0]], params[seed.idx[2]],
                                   params[seed.idx[1]], params[seed.idx[3]]};
        if (!detail::refine_candidate(curve, cls, t)) continue;
        RhombusCandidate cand;
        cand.theta = cls;
        for (int k = 0; k < 4; ++k) {
            cand.vertices[k] = curve.point_at(t[k]);
            cand.preimages[k] = t[k];
        }
        cand.center = midpoint(midpoint(cand.vertices[0], cand.vertices[2]),
                               midpoint(cand.vertices[1], cand.vertices[3]));
        detail::fill_metrics(cand, curve);
        if (cand.min_vertex_separation < floor) continue;
        if (distance(cand.center, seed.center) > 3.0 * spacing + match_radius)
            continue;  // drifted to a different rhombus
        cands.push_back(std::move(cand));
    }
    detail::dedup_candidates(cands, std::max(1e-6 * diam, 1e-300));
    return cands;
}

// --- Matching report ---

struct OracleMatchReport {
    struct Pair {
        std::size_t found_index = 0, oracle_index = 0;
        double center_distance = 0.0;
    };
    std::vector<Pair> matched;
    std::vector<std::size_t> found_only;   // unmatched indices into `found`
    std::vector<std::size_t> oracle_only;  // unmatched indices into `oracle`
};

/// Greedy nearest-center one-to-one matching within `radius`.
inline OracleMatchReport compare_with_oracle(
    const std::vector<RhombusCandidate>& found,
    const std::vector<RhombusCandidate>& oracle, double radius) {
    OracleMatchReport rep;
    struct Edge {
        double d;
        std::size_t i, j;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < oracle.size(); ++j) {
            double d = distance(found[i].center, oracle[j].center);
            if (d <= radius) edges.push_back({d, i, j});
        }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<std::uint8_t> used_f(found.size(), 0), used_o(oracle.size(), 0);
    for (const Edge& e : edges) {
        if (used_f[e.i] || used_o[e.j]) continue;
        used_f[e.i] = 1;
        used_o[e.j] = 1;
        rep.matched.push_back({e.i, e.j, e.d});
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        if (!used_f[i]) rep.found_only.push_back(i);
    for (std::size_t j = 0; j < oracle.size(); ++j)
        if (!used_o[j]) rep.oracle_only.push_back(j);
    return rep;
}

}  // namespace rhombi
