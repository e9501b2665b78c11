#pragma once

// Classify requested angles: inside some pair's guaranteed interval, plain
// corner-free, or uncovered (a special corner of exactly this angle with no
// interval guarantee; the open gap).

#include <memory>
#include <optional>
#include <vector>

#include "rhombi/two_corner.hpp"

namespace rhombi {

enum class SweepMode { corner_free, two_corner, uncovered };

inline const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::corner_free: return "corner_free";
        case SweepMode::two_corner: return "two_corner";
        case SweepMode::uncovered: return "uncovered";
    }
    return "corner_free";
}

struct TwoCornerWitness {
    std::size_t p_index = kNone, q_index = kNone;
    double theta0_class = 0.0;
    double posed_theta = 0.0;  // sign already adjusted for the frame's pose
    double eps = 0.0;
    std::shared_ptr<const TwoCornerFrame> frame;
};

struct GuaranteeInterval {
    std::size_t p_index = kNone, q_index = kNone;
    double theta0_class = 0.0;
    double eps = 0.0;
    std::shared_ptr<const TwoCornerFrame> frame;
};

struct SweepPlan {
    struct Entry {
        double theta = 0.0;  // requested angle class
        SweepMode mode = SweepMode::corner_free;
        std::optional<TwoCornerWitness> witness;
    };
    std::vector<Entry> entries;
    std::vector<CornerRecord> corners;
    std::vector<GuaranteeInterval> intervals;
};

/// Build corner records and, for every ordered pair of special corners, a
/// two-corner guarantee interval; classify each requested angle. Interval
/// coverage takes precedence: inside an interval the searched machinery is
/// guaranteed whether or not the angle is special elsewhere.
inline SweepPlan plan_sweep(const JordanCurve& curve,
                            const std::vector<double>& requested_angles) {
    SweepPlan plan;
    plan.corners = find_special_corners(curve);

    for (std::size_t a = 0; a < plan.corners.size(); ++a) {
        for (std::size_t b = 0; b < plan.corners.size(); ++b) {
            if (a == b) continue;
            try {
                auto frame = std::make_shared<TwoCornerFrame>(
                    compute_frame(curve, plan.corners[a], plan.corners[b]));
                plan.intervals.push_back({plan.corners[a].vertex_index,
                                          plan.corners[b].vertex_index,
                                          canon_angle_class(frame->theta0),
                                          frame->eps, std::move(frame)});
            } catch (const TwoCornerError&) {
                // Pose failed for this ordering; the pair may still be covered
                // by the swapped ordering.
            }
        }
    }

    for (double request : requested_angles) {
        SweepPlan::Entry entry;
        entry.theta = canon_angle_class(request);

        const GuaranteeInterval* best = nullptr;
        double best_margin = 0.0;
        for (const auto& iv : plan.intervals) {
            double d = wrap_signed(entry.theta - iv.theta0_class, 0.5 * kPi);
            double margin = iv.eps - std::abs(d);
            if (margin > 0.0 && (!best || margin > best_margin)) {
                best = &iv;
                best_margin = margin;
            }
        }
        if (best) {
            entry.mode = SweepMode::two_corner;
            entry.witness = TwoCornerWitness{
                best->p_index, best->q_index, best->theta0_class,
                posed_theta_for(*best->frame, entry.theta), best->eps, best->frame};
        } else {
            bool special = false;
            for (const CornerRecord& rec : plan.corners)
                if (rec.special_angles.contains(entry.theta)) special = true;
            entry.mode = special ? SweepMode::uncovered : SweepMode::corner_free;
        }
        plan.entries.push_back(std::move(entry));
    }
    return plan;
}

}  // namespace rhombi
