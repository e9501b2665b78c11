#pragma once

// Curve ingestion (JSON / CSV) and canonical emission. Emission is byte
// deterministic: sorted keys, %.17g floats, newline terminated.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhombi/jordan_curve.hpp"

namespace rhombi {

inline constexpr const char* kCurveFormat = "jordan-curve/1";

enum class CurveFormat { json, csv };

/// %.17g rendering; round-trips doubles exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline JordanCurve load_curve_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("curve JSON parse failed: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string() ||
        doc["format"].get<std::string>() != kCurveFormat)
        throw ParseError("curve JSON must declare \"format\":\"jordan-curve/1\"");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("curve JSON missing \"vertices\" array");
    std::vector<Vec2> pts;
    for (const auto& item : doc["vertices"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw ParseError("curve vertex must be a [x, y] number pair");
        double x = item[0].get<double>();
        double y = item[1].get<double>();
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("curve vertex coordinates must be finite");
        pts.push_back({x, y});
    }
    return JordanCurve::from_vertices(std::move(pts));
}

inline JordanCurve load_curve_csv(const std::string& text) {
    std::vector<Vec2> pts;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip whitespace and optional CR
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line.empty() || line[0] == '#') continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("CSV line " + std::to_string(lineno) + ": expected x,y");
        char* endx = nullptr;
        char* endy = nullptr;
        std::string xs = line.substr(0, comma);
        std::string ys = line.substr(comma + 1);
        double x = std::strtod(xs.c_str(), &endx);
        double y = std::strtod(ys.c_str(), &endy);
        bool ok = endx != xs.c_str() && endy != ys.c_str() && std::isfinite(x) &&
                  std::isfinite(y);
        if (!ok) {
            if (first) {  // optional header row
                first = false;
                continue;
            }
            throw ParseError("CSV line " + std::to_string(lineno) + ": bad number");
        }
        first = false;
        pts.push_back({x, y});
    }
    return JordanCurve::from_vertices(std::move(pts));
}

inline JordanCurve load_curve_text(const std::string& text, CurveFormat format) {
    return format == CurveFormat::json ? load_curve_json(text) : load_curve_csv(text);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline JordanCurve load_curve(const std::string& path) {
    CurveFormat fmt = CurveFormat::json;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        fmt = CurveFormat::csv;
    return load_curve_text(read_file(path), fmt);
}

inline JordanCurve load_curve(const std::string& path, CurveFormat fmt) {
    return load_curve_text(read_file(path), fmt);
}

/// Canonical curve JSON; load_curve_json(emit_curve_json(c)) == c bit-exactly.
inline std::string emit_curve_json(const JordanCurve& curve) {
    std::string out = "{\"format\":\"";
    out += kCurveFormat;
    out += "\",\"vertices\":[";
    bool first = true;
    for (Vec2 v : curve.vertices()) {
        if (!first) out += ',';
        first = false;
        out += '[';
        out += format_double(v.x);
        out += ',';
        out += format_double(v.y);
        out += ']';
    }
    out += "]}\n";
    return out;
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << data;
    if (!out) throw std::runtime_error("write failed: " + path);
}

/// FNV-1a 64-bit over the canonical serialization; hex digest.
inline std::string curve_digest(const JordanCurve& curve) {
    std::string bytes = emit_curve_json(curve);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace rhombi
