#pragma once

// Sweep execution and canonical report serialization. The JSON surface is
// byte deterministic: fixed key order, %.17g floats, newline terminated.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhombi/curve_io.hpp"
#include "rhombi/oracle.hpp"
#include "rhombi/sweep.hpp"

namespace rhombi {

inline constexpr const char* kReportFormat = "rhombus-report/1";
inline constexpr const char* kToolVersion = "rhombi 1.0.0";

struct ReportEntry {
    double theta = 0.0;  // requested angle class
    SweepMode mode = SweepMode::corner_free;
    std::vector<RhombusCandidate> candidates;
    bool thick_median = false;
    bool not_guaranteed = false;
    bool finding = false;
    double elapsed_ms = 0.0;                     // not serialized
    std::optional<std::array<Vec2, 4>> region;   // not serialized; SVG only
};

struct SweepReport {
    std::string curve_digest;
    std::vector<ReportEntry> entries;
    std::vector<CornerRecord> corners;
    std::string tool_version = kToolVersion;

    std::size_t finding_count() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.finding ? 1 : 0;
        return n;
    }
};

/// Plan, dispatch, and validate every requested angle. Candidates that fail
/// validation at `tol` are dropped and flagged as findings rather than
/// silently reported.
inline SweepReport run_sweep(const JordanCurve& curve,
                             const std::vector<double>& angles, double tol) {
    if (angles.empty()) throw std::invalid_argument("sweep needs at least one angle");
    SweepReport report;
    report.curve_digest = curve_digest(curve);
    SweepPlan plan = plan_sweep(curve, angles);
    report.corners = plan.corners;

    for (const SweepPlan::Entry& planned : plan.entries) {
        auto start = std::chrono::steady_clock::now();
        ReportEntry entry;
        entry.theta = planned.theta;
        entry.mode = planned.mode;

        FindResult result;
        if (planned.mode == SweepMode::two_corner && planned.witness)
            result = two_corner_search(curve, *planned.witness->frame,
                                       planned.witness->posed_theta);
        else
            result = find_rhombi(curve, planned.theta, plan.corners);

        entry.thick_median = result.thick_median;
        entry.not_guaranteed = result.not_guaranteed;
        entry.finding = result.finding;
        entry.region = result.region;
        for (RhombusCandidate& cand : result.candidates) {
            if (validate_rhombus(cand, curve, tol).pass)
                entry.candidates.push_back(std::move(cand));
            else
                entry.finding = true;  // pipeline produced an invalid candidate
        }
        if (entry.candidates.empty() && planned.mode == SweepMode::two_corner)
            entry.finding = true;
        entry.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

// --- Canonical JSON ---

namespace detail {

inline void append_point(std::string& out, Vec2 p) {
    out += '[';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += ']';
}

inline void append_candidate(std::string& out, const RhombusCandidate& c) {
    out += "{\"center\":";
    append_point(out, c.center);
    out += ",\"metrics\":{\"min_vertex_separation\":";
    out += format_double(c.min_vertex_separation);
    out += ",\"on_curve_residual\":";
    out += format_double(c.on_curve_residual);
    out += ",\"side_dispersion\":";
    out += format_double(c.side_dispersion);
    out += "},\"theta\":";
    out += format_double(c.theta);
    out += ",\"vertices\":[";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ',';
        append_point(out, c.vertices[k]);
    }
    out += "]}";
}

}  // namespace detail

inline std::string emit_report_json(const SweepReport& report) {
    std::string out = "{\"corners\":[";
    for (std::size_t k = 0; k < report.corners.size(); ++k) {
        if (k) out += ',';
        const CornerRecord& rec = report.corners[k];
        out += "{\"intervals\":[";
        for (std::size_t m = 0; m < rec.special_angles.parts.size(); ++m) {
            if (m) out += ',';
            out += '[';
            out += format_double(rec.special_angles.parts[m].first);
            out += ',';
            out += format_double(rec.special_angles.parts[m].second);
            out += ']';
        }
        out += "],\"point\":";
        detail::append_point(out, rec.point);
        out += '}';
    }
    out += "],\"curve_digest\":\"";
    out += report.curve_digest;
    out += "\",\"entries\":[";
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
        if (k) out += ',';
        const ReportEntry& e = report.entries[k];
        out += "{\"candidates\":[";
        for (std::size_t m = 0; m < e.candidates.size(); ++m) {
            if (m) out += ',';
            detail::append_candidate(out, e.candidates[m]);
        }
        out += "],\"flags\":[";
        bool first = true;
        auto flag = [&](bool set, const char* name) {
            if (!set) return;
            if (!first) out += ',';
            first = false;
            out += '"';
            out += name;
            out += '"';
        };
        flag(e.finding, "finding");
        flag(e.not_guaranteed, "not_guaranteed");
        flag(e.thick_median, "thick_median");
        out += "],\"mode\":\"";
        out += to_string(e.mode);
        out += "\",\"theta\":";
        out += format_double(e.theta);
        out += '}';
    }
    out += "],\"format\":\"";
    out += kReportFormat;
    out += "\"}\n";
    return out;
}

/// Parse a report back (preimages and timing are not part of the surface and
/// come back zeroed). parse + emit is byte-identical.
inline SweepReport parse_report_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report parse failed: ") + e.what());
    }
    if (!doc.contains("format") || doc["format"] != kReportFormat)
        throw ParseError("report must declare \"format\":\"rhombus-report/1\"");
    SweepReport report;
    report.curve_digest = doc.at("curve_digest").get<std::string>();
    for (const auto& cj : doc.at("corners")) {
        CornerRecord rec;
        rec.point = {cj.at("point")[0].get<double>(), cj.at("point")[1].get<double>()};
        for (const auto& iv : cj.at("intervals"))
            rec.special_angles.parts.emplace_back(iv[0].get<double>(),
                                                  iv[1].get<double>());
        report.corners.push_back(std::move(rec));
    }
    for (const auto& ej : doc.at("entries")) {
        ReportEntry entry;
        entry.theta = ej.at("theta").get<double>();
        std::string mode = ej.at("mode").get<std::string>();
        entry.mode = mode == "two_corner"
                         ? SweepMode::two_corner
                         : mode == "uncovered" ? SweepMode::uncovered
                                               : SweepMode::corner_free;
        for (const auto& fj : ej.at("flags")) {
            std::string f = fj.get<std::string>();
            if (f == "finding") entry.finding = true;
            if (f == "not_guaranteed") entry.not_guaranteed = true;
            if (f == "thick_median") entry.thick_median = true;
        }
        for (const auto& cj : ej.at("candidates")) {
            RhombusCandidate cand;
            cand.theta = cj.at("theta").get<double>();
            cand.center = {cj.at("center")[0].get<double>(),
                           cj.at("center")[1].get<double>()};
            for (int k = 0; k < 4; ++k)
                cand.vertices[k] = {cj.at("vertices")[k][0].get<double>(),
                                    cj.at("vertices")[k][1].get<double>()};
            cand.min_vertex_separation =
                cj.at("metrics").at("min_vertex_separation").get<double>();
            cand.on_curve_residual =
                cj.at("metrics").at("on_curve_residual").get<double>();
            cand.side_dispersion =
                cj.at("metrics").at("side_dispersion").get<double>();
            entry.candidates.push_back(std::move(cand));
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

// --- Oracle verification report ---

inline std::string emit_verify_json(double theta,
                                    const std::vector<RhombusCandidate>& found,
                                    const std::vector<RhombusCandidate>& oracle,
                                    const OracleMatchReport& match) {
    std::string out = "{\"format\":\"verify-report/1\",\"matched\":[";
    for (std::size_t k = 0; k < match.matched.size(); ++k) {
        if (k) out += ',';
        const auto& m = match.matched[k];
        out += "{\"center_distance\":";
        out += format_double(m.center_distance);
        out += ",\"median\":";
        detail::append_candidate(out, found[m.found_index]);
        out += ",\"oracle\":";
        detail::append_candidate(out, oracle[m.oracle_index]);
        out += '}';
    }
    out += "],\"median_only\":[";
    for (std::size_t k = 0; k < match.found_only.size(); ++k) {
        if (k) out += ',';
        detail::append_candidate(out, found[match.found_only[k]]);
    }
    out += "],\"oracle_only\":[";
    for (std::size_t k = 0; k < match.oracle_only.size(); ++k) {
        if (k) out += ',';
        detail::append_candidate(out, oracle[match.oracle_only[k]]);
    }
    out += "],\"theta\":";
    out += format_double(theta);
    out += "}\n";
    return out;
}

inline std::string emit_corners_json(const std::vector<CornerRecord>& corners) {
    std::string out = "{\"corners\":[";
    for (std::size_t k = 0; k < corners.size(); ++k) {
        if (k) out += ',';
        out += "{\"intervals\":[";
        for (std::size_t m = 0; m < corners[k].special_angles.parts.size(); ++m) {
            if (m) out += ',';
            out += '[';
            out += format_double(corners[k].special_angles.parts[m].first);
            out += ',';
            out += format_double(corners[k].special_angles.parts[m].second);
            out += ']';
        }
        out += "],\"point\":";
        detail::append_point(out, corners[k].point);
        out += ",\"vertex\":";
        out += std::to_string(corners[k].vertex_index);
        out += '}';
    }
    out += "],\"format\":\"corner-report/1\"}\n";
    return out;
}

}  // namespace rhombi
