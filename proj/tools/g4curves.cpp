#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "g4/cli.hpp"

namespace {

g4::OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return g4::OutputFormat::csv;
    if (s == "json") return g4::OutputFormat::json;
    throw CLI::ValidationError("--format", "expected 'csv' or 'json'");
}

g4::MotionParams parse_motion(const std::string& s) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string part = s.substr(pos, comma - pos);
        char* end = nullptr;
        vals.push_back(std::strtod(part.c_str(), &end));
        if (part.empty() || end != part.c_str() + part.size())
            throw CLI::ValidationError("--motion", "malformed number '" + part + "'");
        pos = comma + 1;
    }
    if (vals.size() != 11)
        throw CLI::ValidationError(
            "--motion", "expected 11 values: alpha,beta,gamma,v,d1,d2,d3,a,b,c,d");
    g4::MotionParams p;
    p.alpha = vals[0];
    p.beta = vals[1];
    p.gamma_angle = vals[2];
    p.v = vals[3];
    p.d1 = vals[4];
    p.d2 = vals[5];
    p.d3 = vals[6];
    p.ta = vals[7];
    p.tb = vals[8];
    p.tc = vals[9];
    p.td = vals[10];
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves in 4-dimensional Galilean space: Frenet frames, curvatures, "
                 "Mannheim partner curves"};
    app.require_subcommand(1);

    std::string input, output, format, motion;
    double tol = 0.0;
    std::uint64_t seed = 0;
    bool have_tol = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", input, "curve-spec file")->required();
        sub->add_option("--output", output, "output path (stdout when omitted)");
        sub->add_option("--format", format, "csv or json");
        sub->add_option("--tol", tol, "verdict tolerance")->each([&](const std::string&) {
            have_tol = true;
        });
        sub->add_option("--seed", seed, "seed for randomized motions");
        sub->add_option("--motion", motion,
                        "explicit motion: alpha,beta,gamma,v,d1,d2,d3,a,b,c,d");
    };

    CLI::App* frenet = app.add_subcommand("frenet", "per-sample frame and curvature table");
    add_common(frenet, true);
    CLI::App* check =
        app.add_subcommand("mannheim-check", "test the condition kappa = gamma tau^2");
    add_common(check, true);
    CLI::App* mate = app.add_subcommand(
        "mannheim-mate", "construct the partner curve alpha + gamma n with fitted gamma");
    add_common(mate, true);
    CLI::App* theorem =
        app.add_subcommand("theorem32", "full partner-curve verification suite");
    add_common(theorem, true);
    CLI::App* invariance = app.add_subcommand(
        "invariance", "curvature invariance under a rigid motion of G4");
    add_common(invariance, true);

    CLI::App* distance =
        app.add_subcommand("distance", "Galilean distance between two points");
    std::vector<double> points;
    distance->add_option("points", points, "x1 x2 x3 x4  x1 x2 x3 x4")
        ->expected(8)
        ->required();
    distance->add_option("--output", output, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return g4::kExitUsage;
    }

    g4::RunConfig cfg;
    if (frenet->parsed()) cfg.subcommand = g4::Subcommand::frenet;
    if (check->parsed()) cfg.subcommand = g4::Subcommand::mannheim_check;
    if (mate->parsed()) cfg.subcommand = g4::Subcommand::mannheim_mate;
    if (theorem->parsed()) cfg.subcommand = g4::Subcommand::theorem32;
    if (invariance->parsed()) cfg.subcommand = g4::Subcommand::invariance;
    if (distance->parsed()) {
        cfg.subcommand = g4::Subcommand::distance;
        for (std::size_t i = 0; i < 8; ++i) cfg.distance_points[i] = points[i];
    }

    cfg.input = input;
    if (!output.empty()) cfg.output = output;
    if (have_tol) cfg.tol = tol;
    cfg.seed = seed;
    try {
        if (!format.empty()) cfg.format = parse_format(format);
        if (!motion.empty()) cfg.motion = parse_motion(motion);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return g4::kExitUsage;
    }

    return g4::run(cfg);
}
