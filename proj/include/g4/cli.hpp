#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g4/report_io.hpp"

namespace g4 {

enum class Subcommand { frenet, mannheim_check, mannheim_mate, theorem32, invariance, distance };
enum class OutputFormat { csv, json };

/// One run of the tool. Identical configs (including the seed) produce
/// byte-identical outputs.
struct RunConfig {
    Subcommand subcommand = Subcommand::frenet;
    std::string input;                        // curve-spec file; unused by distance
    std::optional<std::string> output;        // file path; stdout when absent
    std::optional<OutputFormat> format;       // subcommand default when absent
    std::optional<double> tol;                // verdict tolerance override
    std::uint64_t seed = 0;                   // seeds the random motion for invariance
    std::optional<MotionParams> motion;       // explicit motion for invariance
    std::array<double, 8> distance_points{};  // two points, curve order
};

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void emit(const std::optional<std::string>& path, const std::string& content,
                 std::ostream& out) {
    if (path)
        write_file_atomic(*path, content);
    else
        out << content;
}

inline std::vector<Curve> load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw Error("missing input file (--input)");
    auto curves = load_curve_spec(read_file(cfg.input));
    if (curves.empty()) throw Error("input file '" + cfg.input + "' defines no curves");
    return curves;
}

inline OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) {
    return cfg.format.value_or(fallback);
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    try {
        const double tol = cfg.tol.value_or(1e-8);
        if (cfg.tol && !(*cfg.tol > 0.0)) throw Error("tolerance must be positive");

        switch (cfg.subcommand) {
            case Subcommand::distance: {
                if (cfg.format) throw Error("distance prints plain text; --format not supported");
                const auto& a = cfg.distance_points;
                const GPoint4 p{a[0], a[1], a[2], a[3]};
                const GPoint4 q{a[4], a[5], a[6], a[7]};
                detail::emit(cfg.output, fmt17(g_distance(p, q)) + "\n", out);
                return kExitPass;
            }

            case Subcommand::frenet: {
                if (detail::format_or(cfg, OutputFormat::csv) != OutputFormat::csv)
                    throw Error("frenet emits CSV; --format json not supported");
                std::string body;
                for (const Curve& c : detail::load_input(cfg))
                    body += frenet_csv(frenet_grid(c));
                detail::emit(cfg.output, body, out);
                return kExitPass;
            }

            case Subcommand::mannheim_check: {
                const auto curves = detail::load_input(cfg);
                std::vector<MannheimReport> reports;
                for (const Curve& c : curves) reports.push_back(check_condition(c, tol));
                if (detail::format_or(cfg, OutputFormat::json) == OutputFormat::json) {
                    detail::emit(cfg.output, mannheim_reports_json(reports), out);
                } else {
                    std::string body;
                    for (const MannheimReport& r : reports) body += mannheim_samples_csv(r);
                    detail::emit(cfg.output, body, out);
                }
                for (const MannheimReport& r : reports)
                    if (!r.is_mannheim) return kExitVerdictFailed;
                return kExitPass;
            }

            case Subcommand::mannheim_mate: {
                const auto curves = detail::load_input(cfg);
                std::string csv_body;
                std::string json_body = "[\n";
                for (std::size_t i = 0; i < curves.size(); ++i) {
                    const Curve& c = curves[i];
                    const MannheimReport rep = check_condition(c, tol);
                    const MateCurve mate = mannheim_mate(c, rep.gamma_fit);
                    const MateTangentDiagnostics diag =
                        verify_mate_tangent(c, rep.gamma_fit);
                    csv_body += mate_csv(mate);
                    json_body += mate_diagnostics_json(c.name, diag);
                    json_body += i + 1 < curves.size() ? ",\n" : "\n";
                }
                json_body += "]\n";
                if (cfg.output) {
                    write_file_atomic(*cfg.output, csv_body);
                    write_file_atomic(*cfg.output + ".diag.json", json_body);
                } else if (detail::format_or(cfg, OutputFormat::csv) == OutputFormat::csv) {
                    out << csv_body;
                } else {
                    out << json_body;
                }
                return kExitPass;
            }

            case Subcommand::theorem32: {
                if (detail::format_or(cfg, OutputFormat::json) != OutputFormat::json)
                    throw Error("theorem32 emits JSON; --format csv not supported");
                const auto curves = detail::load_input(cfg);
                std::vector<MannheimReport> reports;
                bool failed = false;
                for (const Curve& c : curves) {
                    MannheimReport rep = check_condition(c, tol);
                    if (rep.is_mannheim) {
                        rep = theorem_3_2_suite(c, tol);
                        if (*rep.outcome == TheoremOutcome::fail) failed = true;
                    } else {
                        failed = true;  // condition precondition not met
                    }
                    reports.push_back(std::move(rep));
                }
                detail::emit(cfg.output, mannheim_reports_json(reports), out);
                return failed ? kExitVerdictFailed : kExitPass;
            }

            case Subcommand::invariance: {
                if (detail::format_or(cfg, OutputFormat::json) != OutputFormat::json)
                    throw Error("invariance emits JSON; --format csv not supported");
                const auto curves = detail::load_input(cfg);
                std::optional<GalileanMotion> motion;
                if (cfg.motion) {
                    motion.emplace(*cfg.motion);
                } else {
                    std::mt19937_64 rng(cfg.seed);
                    motion.emplace(random_motion(rng));
                }
                std::vector<InvarianceSummary> rows;
                bool all_pass = true;
                for (const Curve& c : curves) {
                    InvarianceSummary row;
                    row.curve = c.name;
                    row.tolerance = tol;
                    for (double s : grid_points(c.domain)) {
                        if (!frenet_at(c, s).ok()) {
                            ++row.skipped;
                            continue;
                        }
                        const InvarianceRecord rec = invariance_check(c, *motion, s);
                        row.sup.dkappa = std::max(row.sup.dkappa, rec.dkappa);
                        row.sup.dtau = std::max(row.sup.dtau, rec.dtau);
                        row.sup.dsigma = std::max(row.sup.dsigma, rec.dsigma);
                        row.sup.n_dev = std::max(row.sup.n_dev, rec.n_dev);
                        row.sup.b_dev = std::max(row.sup.b_dev, rec.b_dev);
                        row.sup.e_dev = std::max(row.sup.e_dev, rec.e_dev);
                        ++row.samples_checked;
                    }
                    row.pass = row.samples_checked > 0 && row.sup.max() <= tol;
                    all_pass = all_pass && row.pass;
                    rows.push_back(std::move(row));
                }
                detail::emit(cfg.output, invariance_json(rows, *motion), out);
                return all_pass ? kExitPass : kExitVerdictFailed;
            }
        }
        throw Error("unknown subcommand");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace g4
