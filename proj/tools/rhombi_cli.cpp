// Command line front end: fixture generation, corner reports, single-angle
// and swept rhombus searches, and oracle cross-checks.
//
// Exit codes: 0 ran, 1 input error, 2 internal invariant violation,
// 3 findings present under --strict.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhombi/curve_gen.hpp"
#include "rhombi/svg.hpp"

namespace {

std::vector<double> parse_kv(const std::vector<std::string>& kvs,
                             std::map<std::string, double>& out) {
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw rhombi::ParseError("--param expects key=value, got: " + kv);
        char* end = nullptr;
        std::string val = kv.substr(eq + 1);
        double v = std::strtod(val.c_str(), &end);
        if (end == val.c_str())
            throw rhombi::ParseError("--param value is not a number: " + kv);
        out[kv.substr(0, eq)] = v;
    }
    return {};
}

void print_summary(const rhombi::SweepReport& report) {
    std::size_t total = 0;
    for (const auto& e : report.entries) total += e.candidates.size();
    std::printf("entries: %zu, candidates: %zu, corners: %zu, findings: %zu\n",
                report.entries.size(), total, report.corners.size(),
                report.finding_count());
    for (const auto& e : report.entries) {
        std::printf("  theta=%.9f mode=%s candidates=%zu%s%s%s\n", e.theta,
                    rhombi::to_string(e.mode), e.candidates.size(),
                    e.finding ? " FINDING" : "",
                    e.not_guaranteed ? " not_guaranteed" : "",
                    e.thick_median ? " thick_median" : "");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inscribed-rhombus search in polygonal Jordan curves"};
    app.set_version_flag("--version", rhombi::kToolVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a fixture curve");
    std::string gen_shape = "circle", gen_out;
    std::size_t gen_n = 360;
    std::vector<std::string> gen_params;
    gen->add_option("--shape", gen_shape,
                    "circle|ellipse|rounded_polygon|random_star|lens|square");
    gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--param", gen_params, "shape parameter key=value");
    gen->add_option("--out", gen_out, "output curve JSON path")->required();

    // corners
    auto* corners = app.add_subcommand("corners", "report special corners");
    std::string corners_curve, corners_json;
    corners->add_option("--curve", corners_curve, "curve JSON/CSV path")->required();
    corners->add_option("--json", corners_json, "write JSON report here");

    // find
    auto* find = app.add_subcommand("find", "search one angle");
    std::string find_curve, find_out, find_svg;
    double find_angle = 0.0, find_tol = 1e-9, find_perturb = 0.0;
    find->add_option("--curve", find_curve)->required();
    find->add_option("--angle", find_angle, "angle in radians")->required();
    find->add_option("--tol", find_tol, "validation tolerance");
    find->add_option("--perturb", find_perturb,
                     "retry offset when the angle yields nothing");
    find->add_option("--out", find_out, "report JSON path")->required();
    find->add_option("--svg", find_svg, "directory for per-angle SVGs");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "search a uniform angle grid");
    std::string sweep_curve, sweep_out, sweep_svg;
    std::size_t sweep_steps = 0;
    std::vector<double> sweep_range;
    double sweep_tol = 1e-9;
    bool sweep_strict = false;
    sweep->add_option("--curve", sweep_curve)->required();
    sweep->add_option("--steps", sweep_steps, "number of angles")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--range", sweep_range, "angle range [A, B)")->expected(2);
    sweep->add_option("--tol", sweep_tol, "validation tolerance");
    sweep->add_option("--out", sweep_out, "report JSON path")->required();
    sweep->add_option("--svg", sweep_svg, "directory for per-angle SVGs");
    sweep->add_flag("--strict", sweep_strict, "exit 3 when findings are present");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check against the oracle");
    std::string verify_curve, verify_out;
    double verify_angle = 0.0;
    std::size_t verify_samples = 2000;
    verify->add_option("--curve", verify_curve)->required();
    verify->add_option("--angle", verify_angle, "angle in radians")->required();
    verify->add_option("--samples", verify_samples, "oracle resample count");
    verify->add_option("--out", verify_out, "match JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            rhombi::CurveSpec spec;
            spec.shape = rhombi::shape_from_name(gen_shape);
            spec.resolution = gen_n;
            parse_kv(gen_params, spec.parameters);
            rhombi::JordanCurve curve = rhombi::generate(spec);
            rhombi::write_file(gen_out, rhombi::emit_curve_json(curve));
            std::printf("wrote %s (%zu vertices, diameter %.6g)\n", gen_out.c_str(),
                        curve.size(), curve.diameter());
        } else if (*corners) {
            rhombi::JordanCurve curve = rhombi::load_curve(corners_curve);
            auto records = rhombi::find_special_corners(curve);
            std::printf("special corners: %zu\n", records.size());
            for (const auto& rec : records) {
                std::printf("  vertex %zu at (%.9g, %.9g), classes:", rec.vertex_index,
                            rec.point.x, rec.point.y);
                for (auto [a, b] : rec.special_angles.parts)
                    std::printf(" [%.9g, %.9g]", a, b);
                std::printf("\n");
            }
            if (!corners_json.empty())
                rhombi::write_file(corners_json, rhombi::emit_corners_json(records));
        } else if (*find) {
            rhombi::JordanCurve curve = rhombi::load_curve(find_curve);
            std::vector<double> angles = {find_angle};
            rhombi::SweepReport report = rhombi::run_sweep(curve, angles, find_tol);
            if (report.entries.front().candidates.empty() && find_perturb != 0.0) {
                angles.push_back(find_angle + find_perturb);
                report = rhombi::run_sweep(curve, angles, find_tol);
            }
            rhombi::emit_report(report, curve, find_out, find_svg);
            print_summary(report);
        } else if (*sweep) {
            rhombi::JordanCurve curve = rhombi::load_curve(sweep_curve);
            double lo = 0.0, hi = 0.5 * rhombi::kPi;
            if (sweep_range.size() == 2) {
                lo = sweep_range[0];
                hi = sweep_range[1];
            }
            std::vector<double> angles;
            for (std::size_t k = 0; k < sweep_steps; ++k)
                angles.push_back(lo + (hi - lo) * static_cast<double>(k) /
                                          static_cast<double>(sweep_steps));
            rhombi::SweepReport report = rhombi::run_sweep(curve, angles, sweep_tol);
            rhombi::emit_report(report, curve, sweep_out, sweep_svg);
            print_summary(report);
            if (sweep_strict && report.finding_count() > 0) return 3;
        } else if (*verify) {
            rhombi::JordanCurve curve = rhombi::load_curve(verify_curve);
            rhombi::FindResult found = rhombi::find_rhombi(curve, verify_angle);
            rhombi::OracleConfig config;
            config.samples = verify_samples;
            auto oracle = rhombi::brute_force_rhombi(curve, verify_angle, config);
            double radius = 2.0 *
                            (2.0 * rhombi::kPi / static_cast<double>(verify_samples)) *
                            curve.diameter();
            auto match = rhombi::compare_with_oracle(found.candidates, oracle, radius);
            rhombi::write_file(verify_out,
                               rhombi::emit_verify_json(
                                   rhombi::canon_angle_class(verify_angle),
                                   found.candidates, oracle, match));
            std::printf("median: %zu, oracle: %zu, matched: %zu, median_only: %zu, "
                        "oracle_only: %zu\n",
                        found.candidates.size(), oracle.size(), match.matched.size(),
                        match.found_only.size(), match.oracle_only.size());
            if (!match.found_only.empty())
                std::printf("FINDING: %zu median candidates unmatched\n",
                            match.found_only.size());
        }
    } catch (const rhombi::ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const rhombi::ValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        for (auto [i, j] : e.offending_pairs)
            std::fprintf(stderr, "  crossing edge pair (%zu, %zu)\n", i, j);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 0;
}
