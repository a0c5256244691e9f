#pragma once

#include <array>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "g4/expr.hpp"
#include "g4/galilean.hpp"

namespace g4 {

/// Sampling window of a curve. Evaluation outside [lo, hi] is permitted; the
/// domain is a hint for grid-based operations.
struct Domain {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t samples = 2;
};

/// Admissible curve of G4: the first component is always the parameter s
/// itself, never user-supplied; only the three spatial components are given
/// as expressions.
struct Curve {
    std::string name;
    ExprPtr y, z, w;
    ParamMap params;
    Domain domain;
};

/// Parses and validates the three spatial components against the declared
/// parameter set.
inline Curve make_curve(std::string name, std::string_view y_src, std::string_view z_src,
                        std::string_view w_src, ParamMap params, Domain domain) {
    if (!(domain.lo < domain.hi))
        throw Error("curve '" + name + "': domain requires lo < hi");
    if (domain.samples < 2)
        throw Error("curve '" + name + "': domain requires at least 2 samples");
    std::set<std::string> names;
    for (const auto& [k, v] : params) names.insert(k);
    Curve c;
    c.name = std::move(name);
    c.y = parse_expr(y_src, names);
    c.z = parse_expr(z_src, names);
    c.w = parse_expr(w_src, names);
    c.params = std::move(params);
    c.domain = domain;
    return c;
}

/// Closed-form helix family y = a cos(p s), z = a sin(p s), w = q s^2/2.
/// Its full frame and all three curvatures have hand-computable closed
/// forms, which makes it the workhorse oracle family of the test suites.
struct HelixFamily {
    double a = 1.0;
    double p = 1.0;
    double q = 1.0;

    Curve curve(Domain domain = {0.0, 6.283185307179586, 256}) const {
        if (a == 0.0 || p == 0.0)
            throw Error("helix family requires a != 0 and p != 0");
        return make_curve("helix", "a*cos(p*s)", "a*sin(p*s)", "q*s^2/2",
                          {{"a", a}, {"p", p}, {"q", q}}, domain);
    }
};

inline GPoint4 curve_point(const Curve& c, double s) {
    return {s, eval_real(*c.y, s, c.params), eval_real(*c.z, s, c.params),
            eval_real(*c.w, s, c.params)};
}

/// Jets of the three spatial components at s.
inline std::array<Jet, 3> spatial_jets(const Curve& c, double s) {
    const Jet js = jet_var(s);
    return {eval_jet(*c.y, js, c.params), eval_jet(*c.z, js, c.params),
            eval_jet(*c.w, js, c.params)};
}

/// All four component jets; the first is the identity jet of s, so the
/// tangent's absolute component is exactly 1 by construction.
inline std::array<Jet, 4> curve_jet(const Curve& c, double s) {
    const auto sp = spatial_jets(c, s);
    return {jet_var(s), sp[0], sp[1], sp[2]};
}

/// Uniform grid over the domain, endpoints included.
inline std::vector<double> grid_points(const Domain& d) {
    std::vector<double> out;
    out.reserve(d.samples);
    const double step = (d.hi - d.lo) / static_cast<double>(d.samples - 1);
    for (std::size_t i = 0; i < d.samples; ++i) {
        out.push_back(i + 1 == d.samples ? d.hi : d.lo + step * static_cast<double>(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Curve-spec files
// ---------------------------------------------------------------------------

namespace detail {

struct RawCurveBlock {
    std::size_t header_line = 0;
    std::string name;
    std::string y, z, w;
    std::size_t y_line = 0, z_line = 0, w_line = 0, name_line = 0, domain_line = 0;
    std::string domain;
    ParamMap params;
    bool has_domain = false;
};

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

inline Curve finish_block(const RawCurveBlock& blk) {
    auto require = [&](const std::string& v, const char* key) {
        if (v.empty())
            throw FormatError(std::string("curve block is missing key '") + key + "'",
                              blk.header_line);
    };
    require(blk.name, "name");
    require(blk.y, "y");
    require(blk.z, "z");
    require(blk.w, "w");
    if (!blk.has_domain)
        throw FormatError("curve block is missing key 'domain'", blk.header_line);

    // domain = lo : hi : samples
    Domain dom;
    {
        const std::string& d = blk.domain;
        std::size_t c1 = d.find(':');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : d.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw FormatError("domain must be 'lo : hi : samples'", blk.domain_line);
        auto parse_num = [&](std::string part, bool integral) -> double {
            part = trim(part);
            char* end = nullptr;
            double v = std::strtod(part.c_str(), &end);
            if (part.empty() || end != part.c_str() + part.size())
                throw FormatError("malformed number '" + part + "' in domain",
                                  blk.domain_line);
            if (integral && v != std::rint(v))
                throw FormatError("sample count must be an integer", blk.domain_line);
            return v;
        };
        dom.lo = parse_num(d.substr(0, c1), false);
        dom.hi = parse_num(d.substr(c1 + 1, c2 - c1 - 1), false);
        const double n = parse_num(d.substr(c2 + 1), true);
        if (n < 2) throw FormatError("sample count must be at least 2", blk.domain_line);
        dom.samples = static_cast<std::size_t>(n);
        if (!(dom.lo < dom.hi))
            throw FormatError("domain requires lo < hi", blk.domain_line);
    }

    std::set<std::string> names;
    for (const auto& [k, v] : blk.params) names.insert(k);
    auto parse_component = [&](const std::string& src, std::size_t line) {
        try {
            return parse_expr(src, names);
        } catch (const ParseError& e) {
            throw FormatError(e.what(), line);
        }
    };
    Curve c;
    c.name = blk.name;
    c.y = parse_component(blk.y, blk.y_line);
    c.z = parse_component(blk.z, blk.z_line);
    c.w = parse_component(blk.w, blk.w_line);
    c.params = blk.params;
    c.domain = dom;
    return c;
}

}  // namespace detail

/// Parses the line-oriented curve-spec format:
///
///   [curve]
///   name = helix
///   y = a*cos(p*s)
///   z = a*sin(p*s)
///   w = q*s^2/2
///   param a = 1
///   param p = 1
///   param q = 1
///   domain = 0 : 6.2831853 : 256
///
/// Multiple [curve] blocks per file; '#' starts a comment; keys are
/// case-sensitive; whitespace around '=' is ignored. Errors carry 1-based
/// line numbers.
inline std::vector<Curve> load_curve_spec(std::string_view text) {
    std::vector<Curve> out;
    detail::RawCurveBlock blk;
    bool in_block = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line = detail::trim(
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string::npos)
            line = detail::trim(std::string_view(line).substr(0, hash));
        if (line.empty()) continue;

        if (line == "[curve]") {
            if (in_block) out.push_back(detail::finish_block(blk));
            blk = detail::RawCurveBlock{};
            blk.header_line = line_no;
            in_block = true;
            continue;
        }
        if (line.front() == '[')
            throw FormatError("unknown section '" + line + "'", line_no);
        if (!in_block)
            throw FormatError("content outside a [curve] block", line_no);

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError("expected 'key = value'", line_no);
        const std::string key = detail::trim(std::string_view(line).substr(0, eq));
        const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        if (value.empty()) throw FormatError("empty value for '" + key + "'", line_no);

        if (key == "name") {
            blk.name = value;
            blk.name_line = line_no;
        } else if (key == "y") {
            blk.y = value;
            blk.y_line = line_no;
        } else if (key == "z") {
            blk.z = value;
            blk.z_line = line_no;
        } else if (key == "w") {
            blk.w = value;
            blk.w_line = line_no;
        } else if (key == "domain") {
            blk.domain = value;
            blk.domain_line = line_no;
            blk.has_domain = true;
        } else if (key.rfind("param ", 0) == 0) {
            const std::string pname = detail::trim(std::string_view(key).substr(6));
            if (pname.empty()) throw FormatError("missing parameter name", line_no);
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end != value.c_str() + value.size())
                throw FormatError("malformed parameter value '" + value + "'", line_no);
            blk.params[pname] = v;
        } else {
            throw FormatError("unknown key '" + key + "'", line_no);
        }
    }
    if (in_block) out.push_back(detail::finish_block(blk));
    return out;
}

}  // namespace g4
