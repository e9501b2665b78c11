#pragma once

// Discrete corner-separation checks on zero-set masks. Marked cells use
// 8-connectivity, the unmarked complement uses 4-connectivity; the dual pair
// avoids the digital Jordan paradox.

#include <queue>
#include <utility>
#include <vector>

#include "rhombi/median.hpp"

namespace rhombi {

/// Corners of the unit parameter square, as (x, y) in {0, 1}.
struct CornerPair {
    std::pair<int, int> from{0, 1};
    std::pair<int, int> to{1, 0};
};

namespace detail {

inline std::pair<int, int> corner_cell(std::pair<int, int> corner, int G) {
    return {corner.first == 0 ? 0 : G - 1, corner.second == 0 ? 0 : G - 1};
}

}  // namespace detail

/// True iff the two corner cells lie in different 4-connected components of
/// the unmarked complement. A marked corner cell separates trivially.
inline bool separates(const ZeroMask& mask, const CornerPair& pair) {
    const int G = mask.resolution;
    auto [ax, ay] = detail::corner_cell(pair.from, G);
    auto [bx, by] = detail::corner_cell(pair.to, G);
    if (ax == bx && ay == by) return false;
    if (mask.at(ax, ay) || mask.at(bx, by)) return true;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(G) * G, 0);
    std::queue<std::pair<int, int>> q;
    q.push({ax, ay});
    seen[static_cast<std::size_t>(ay) * G + ax] = 1;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        if (x == bx && y == by) return false;
        for (int k = 0; k < 4; ++k) {
            int nx = x + dx[k], ny = y + dy[k];
            if (nx < 0 || nx >= G || ny < 0 || ny >= G) continue;
            std::size_t idx = static_cast<std::size_t>(ny) * G + nx;
            if (seen[idx] || mask.at(nx, ny)) continue;
            seen[idx] = 1;
            q.push({nx, ny});
        }
    }
    return true;
}

/// Cells marked in both masks. Resolutions must match.
inline std::vector<std::pair<int, int>> masks_intersect(const ZeroMask& a,
                                                        const ZeroMask& b) {
    if (a.resolution != b.resolution)
        throw std::invalid_argument("mask resolutions differ");
    std::vector<std::pair<int, int>> cells;
    const int G = a.resolution;
    for (int y = 0; y < G; ++y)
        for (int x = 0; x < G; ++x)
            if (a.at(x, y) && b.at(x, y)) cells.emplace_back(x, y);
    return cells;
}

}  // namespace rhombi
