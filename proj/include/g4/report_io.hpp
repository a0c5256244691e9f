#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "g4/frenet.hpp"
#include "g4/mannheim.hpp"

namespace g4 {

/// 17 significant digits: round-trip safe for doubles, byte-stable across
/// runs. Every number in every report goes through here.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

/// Writes the whole file at once: content goes to a sibling temp file which
/// is then renamed over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Per-sample frame table. Fields past a degenerate stage stay empty; the
/// trailing column names the failed stage instead of poisoning the numeric
/// columns with NaN.
inline std::string frenet_csv(const std::vector<FrenetData>& grid) {
    std::string out = "s,t2,t3,t4,n2,n3,n4,b2,b3,b4,e2,e3,e4,kappa,tau,sigma,degenerate\n";
    for (const FrenetData& f : grid) {
        out += fmt17(f.s);
        auto put_vec = [&out](const std::optional<GVector4>& v) {
            if (v)
                out += "," + fmt17(v->x2) + "," + fmt17(v->x3) + "," + fmt17(v->x4);
            else
                out += ",,,";
        };
        out += "," + fmt17(f.t.x2) + "," + fmt17(f.t.x3) + "," + fmt17(f.t.x4);
        put_vec(f.n);
        put_vec(f.b);
        put_vec(f.e);
        out += "," + fmt17(f.kappa);
        out += f.tau ? "," + fmt17(*f.tau) : ",";
        out += f.sigma ? "," + fmt17(*f.sigma) : ",";
        out += ",";
        out += to_cstring(f.degenerate);
        out += "\n";
    }
    return out;
}

inline std::string mate_csv(const MateCurve& mate) {
    std::string out = "s,x1,x2,x3,x4,v1,v2,v3,v4,degenerate\n";
    for (const MateSample& m : mate.samples) {
        out += fmt17(m.s);
        if (m.point) {
            out += "," + fmt17(m.point->x1) + "," + fmt17(m.point->x2) + "," +
                   fmt17(m.point->x3) + "," + fmt17(m.point->x4);
            out += "," + fmt17(m.velocity->x1) + "," + fmt17(m.velocity->x2) + "," +
                   fmt17(m.velocity->x3) + "," + fmt17(m.velocity->x4);
        } else {
            out += ",,,,,,,,";
        }
        out += ",";
        out += to_cstring(m.base);
        out += "\n";
    }
    return out;
}

/// Condition residual table, the CSV face of a MannheimReport.
inline std::string mannheim_samples_csv(const MannheimReport& rep) {
    std::string out = "s,kappa,tau,residual\n";
    for (const MannheimSampleRecord& r : rep.samples)
        out += fmt17(r.s) + "," + fmt17(r.kappa) + "," + fmt17(r.tau) + "," +
               fmt17(r.residual) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline std::string mannheim_report_json(const MannheimReport& rep, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string out = pad + "{\n";
    const std::string in = pad + "  ";
    out += in + "\"curve\": \"" + json_escape(rep.curve) + "\",\n";
    out += in + "\"gamma_fit\": " + fmt17(rep.gamma_fit) + ",\n";
    out += in + "\"condition_residual_sup\": " + fmt17(rep.condition_residual_sup) + ",\n";
    out += in + "\"tolerance\": " + fmt17(rep.tolerance) + ",\n";
    out += in + "\"is_mannheim\": " + (rep.is_mannheim ? "true" : "false") + ",\n";
    out += in + "\"degenerate_samples\": " + std::to_string(rep.degenerate_samples) + ",\n";
    if (rep.mate) {
        const MateDiagnostics& d = *rep.mate;
        out += in + "\"mate\": {\n";
        out += in + "  \"speed_sup\": " + fmt17(d.speed_sup) + ",\n";
        out += in + "  \"tangent_residual_sup\": " + fmt17(d.tangent_residual_sup) + ",\n";
        out += in + "  \"tangent_proj_sup\": " + fmt17(d.tangent_proj_sup) + ",\n";
        out += in + "  \"normal_proj_sup\": " + fmt17(d.normal_proj_sup) + ",\n";
        out += in + "  \"decomposition_sup\": " + fmt17(d.decomposition_sup) + ",\n";
        out += in + "  \"degenerate_mate_samples\": " +
               std::to_string(d.degenerate_mate_samples) + ",\n";
        out += in + "  \"evaluated_samples\": " + std::to_string(d.evaluated_samples) + "\n";
        out += in + "},\n";
    }
    if (rep.outcome)
        out += in + "\"outcome\": \"" + to_cstring(*rep.outcome) + "\",\n";
    out += in + "\"samples\": [\n";
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const MannheimSampleRecord& r = rep.samples[i];
        out += in + "  {\"s\": " + fmt17(r.s) + ", \"kappa\": " + fmt17(r.kappa) +
               ", \"tau\": " + fmt17(r.tau) + ", \"residual\": " + fmt17(r.residual) + "}";
        out += i + 1 < rep.samples.size() ? ",\n" : "\n";
    }
    out += in + "]\n";
    out += pad + "}";
    return out;
}

inline std::string mannheim_reports_json(const std::vector<MannheimReport>& reps) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        out += mannheim_report_json(reps[i], 2);
        out += i + 1 < reps.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

inline std::string mate_diagnostics_json(const std::string& curve,
                                         const MateTangentDiagnostics& d) {
    std::string out = "{\n";
    out += "  \"curve\": \"" + json_escape(curve) + "\",\n";
    out += "  \"gamma\": " + fmt17(d.gamma) + ",\n";
    out += "  \"speed_sup\": " + fmt17(d.speed_sup) + ",\n";
    out += "  \"tangent_residual_sup\": " + fmt17(d.tangent_residual_sup) + ",\n";
    out += "  \"tangent_proj_sup\": " + fmt17(d.normal_proj_sup) + ",\n";
    out += "  \"skipped_base_samples\": " + std::to_string(d.skipped) + "\n";
    out += "}";
    return out;
}

inline std::string motion_json(const GalileanMotion& m, const std::string& pad) {
    const MotionParams& p = m.params();
    std::string out = "{\n";
    auto field = [&](const char* k, double v, bool last = false) {
        out += pad + "  \"" + k + "\": " + fmt17(v) + (last ? "\n" : ",\n");
    };
    field("alpha", p.alpha);
    field("beta", p.beta);
    field("gamma", p.gamma_angle);
    field("v", p.v);
    field("d1", p.d1);
    field("d2", p.d2);
    field("d3", p.d3);
    field("a", p.ta);
    field("b", p.tb);
    field("c", p.tc);
    field("d", p.td, true);
    out += pad + "}";
    return out;
}

struct InvarianceSummary {
    std::string curve;
    InvarianceRecord sup;           // per-field sup over the checked samples
    std::size_t samples_checked = 0;
    std::size_t skipped = 0;
    double tolerance = 1e-8;
    bool pass = false;
};

inline std::string invariance_json(const std::vector<InvarianceSummary>& rows,
                                   const GalileanMotion& m) {
    std::string out = "{\n  \"motion\": " + motion_json(m, "  ") + ",\n  \"curves\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const InvarianceSummary& r = rows[i];
        out += "    {\n";
        out += "      \"curve\": \"" + json_escape(r.curve) + "\",\n";
        out += "      \"dkappa_sup\": " + fmt17(r.sup.dkappa) + ",\n";
        out += "      \"dtau_sup\": " + fmt17(r.sup.dtau) + ",\n";
        out += "      \"dsigma_sup\": " + fmt17(r.sup.dsigma) + ",\n";
        out += "      \"n_dev_sup\": " + fmt17(r.sup.n_dev) + ",\n";
        out += "      \"b_dev_sup\": " + fmt17(r.sup.b_dev) + ",\n";
        out += "      \"e_dev_sup\": " + fmt17(r.sup.e_dev) + ",\n";
        out += "      \"samples_checked\": " + std::to_string(r.samples_checked) + ",\n";
        out += "      \"skipped\": " + std::to_string(r.skipped) + ",\n";
        out += "      \"tolerance\": " + fmt17(r.tolerance) + ",\n";
        out += std::string("      \"pass\": ") + (r.pass ? "true" : "false") + "\n";
        out += "    }";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace g4
