#pragma once

// Per-angle SVG snapshots: the curve, the two medians of the entry's angle,
// the restricted search region when one was used, and every reported rhombus.

#include <filesystem>
#include <string>

#include "rhombi/report.hpp"

namespace rhombi {

namespace detail {

struct SvgMapper {
    double min_x = 0.0, min_y = 0.0, scale = 1.0;
    double view = 1000.0, margin = 40.0, span_y = 0.0;

    void expand(Vec2 p, double& max_x, double& max_y) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    Vec2 map(Vec2 p) const {
        // y flipped: SVG grows downward.
        return {margin + (p.x - min_x) * scale,
                view - margin - (p.y - min_y) * scale};
    }
};

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace detail

inline std::string render_entry_svg(const JordanCurve& curve,
                                    const ReportEntry& entry) {
    SupportFrame fa = support_frame(curve, entry.theta);
    SupportFrame fb = support_frame(curve, entry.theta + 0.5 * kPi);
    MedianSet ma = median_set(split_arcs(curve, fa), fa.theta);
    MedianSet mb = median_set(split_arcs(curve, fb), fb.theta);

    detail::SvgMapper m;
    double max_x, max_y;
    m.min_x = max_x = curve.vertices().front().x;
    m.min_y = max_y = curve.vertices().front().y;
    for (Vec2 v : curve.vertices()) m.expand(v, max_x, max_y);
    for (const auto& el : ma.elements) {
        m.expand(el.seg.a, max_x, max_y);
        m.expand(el.seg.b, max_x, max_y);
    }
    for (const auto& el : mb.elements) {
        m.expand(el.seg.a, max_x, max_y);
        m.expand(el.seg.b, max_x, max_y);
    }
    if (entry.region)
        for (Vec2 v : *entry.region) m.expand(v, max_x, max_y);
    double span = std::max({max_x - m.min_x, max_y - m.min_y, 1e-12});
    m.scale = (m.view - 2.0 * m.margin) / span;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    out += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    auto poly_points = [&](auto&& pts) {
        std::string s;
        for (Vec2 p : pts) {
            Vec2 q = m.map(p);
            if (!s.empty()) s += ' ';
            s += detail::svg_coord(q.x) + "," + detail::svg_coord(q.y);
        }
        return s;
    };

    if (entry.region) {
        out += "<polygon class=\"region\" points=\"" + poly_points(*entry.region) +
               "\" fill=\"#fff3c4\" stroke=\"#d9a400\" stroke-width=\"1\"/>\n";
    }
    out += "<polygon class=\"curve\" points=\"" + poly_points(curve.vertices()) +
           "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    auto draw_median = [&](const MedianSet& med, const char* cls, const char* color) {
        for (const auto& el : med.elements) {
            Vec2 a = m.map(el.seg.a), b = m.map(el.seg.b);
            out += "<line class=\"";
            out += cls;
            out += "\" x1=\"" + detail::svg_coord(a.x) + "\" y1=\"" +
                   detail::svg_coord(a.y) + "\" x2=\"" + detail::svg_coord(b.x) +
                   "\" y2=\"" + detail::svg_coord(b.y) + "\" stroke=\"";
            out += color;
            out += "\" stroke-width=\"1.2\"/>\n";
        }
    };
    draw_median(ma, "median-a", "#1f77b4");
    draw_median(mb, "median-b", "#2ca02c");
    for (const auto& cand : entry.candidates) {
        out += "<polygon class=\"rhombus\" points=\"" + poly_points(cand.vertices) +
               "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
        Vec2 c = m.map(cand.center);
        out += "<circle cx=\"" + detail::svg_coord(c.x) + "\" cy=\"" +
               detail::svg_coord(c.y) + "\" r=\"3\" fill=\"#d62728\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

/// Write the canonical JSON and, when svg_dir is given, one SVG per entry
/// (entry_###.svg, ordered as in the report).
inline void emit_report(const SweepReport& report, const JordanCurve& curve,
                        const std::string& json_path,
                        const std::string& svg_dir = {}) {
    try {
        write_file(json_path, emit_report_json(report));
    } catch (const std::exception& e) {
        throw std::runtime_error("emit_report(" + json_path + "): " + e.what());
    }
    if (svg_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(svg_dir, ec);
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "entry_%03zu.svg", k);
        std::string path = (std::filesystem::path(svg_dir) / name).string();
        try {
            write_file(path, render_entry_svg(curve, report.entries[k]));
        } catch (const std::exception& e) {
            throw std::runtime_error("emit_report(" + path + "): " + e.what());
        }
    }
}

}  // namespace rhombi
