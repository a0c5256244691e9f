#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "g4/curve.hpp"
#include "g4/galilean.hpp"
#include "g4/jet.hpp"

namespace g4 {

/// Stage at which the frame construction stopped. kappa_zero: the curve has
/// no first normal (straight in the spatial components); tau_zero: the first
/// normal has constant direction, so no binormal exists.
enum class Degeneracy { none, kappa_zero, tau_zero };

inline const char* to_cstring(Degeneracy d) {
    switch (d) {
        case Degeneracy::none: return "";
        case Degeneracy::kappa_zero: return "kappa_zero";
        case Degeneracy::tau_zero: return "tau_zero";
    }
    return "";
}

/// Anything that can produce the jets of the three spatial components of an
/// admissible curve at a parameter value. Curves provide one; motion
/// transforms wrap one.
template <class S>
concept SpatialJetSource = requires(const S& src, double s) {
    { src(s) } -> std::convertible_to<std::array<Jet, 3>>;
};

using Jet3 = std::array<Jet, 3>;

namespace detail {

inline Jet3 differentiate3(const Jet3& v) {
    return {differentiate(v[0]), differentiate(v[1]), differentiate(v[2])};
}

inline Jet dot3(const Jet3& a, const Jet3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline GVector4 iso_value(const Jet3& a) {
    return {0.0, a[0].value(), a[1].value(), a[2].value()};
}

}  // namespace detail

/// Full jet state of the frame construction at one parameter value. Fields
/// are valid by stage: pos/vel/t/kappa always; kappa_jet, n, nv, tau,
/// tau_jet unless kappa_zero; everything else only when not degenerate.
/// This is the working representation behind FrenetData; the mate pipeline
/// consumes it directly because it needs jets, not just frame values.
struct FrameJets {
    double s = 0;
    Degeneracy degenerate = Degeneracy::none;
    Jet3 pos{};
    Jet3 vel{};
    GVector4 t{};
    double kappa = 0;
    Jet kappa_jet{};
    Jet3 n{};
    GVector4 nv{};
    double tau = 0;
    Jet tau_jet{};
    Jet3 b{};
    GVector4 bv{};
    GVector4 ev{};
    double sigma = 0;
};

/// Runs the frame construction at s using jets of order 4 and above:
///   t = (1, y', z', w')
///   kappa = |(y'', z'', w'')|,  n = (0, y'', z'', w'') / kappa
///   tau = |n'| (jet division, no finite differences), b = n' / tau
///   e = t x n x b,  sigma = <b', e>
template <SpatialJetSource S>
FrameJets frame_jets(const S& src, double s, double eps_degenerate = 1e-9) {
    FrameJets f;
    f.s = s;
    f.pos = src(s);
    f.vel = detail::differentiate3(f.pos);
    f.t = GVector4{1.0, f.vel[0].value(), f.vel[1].value(), f.vel[2].value()};

    const Jet3 acc = detail::differentiate3(f.vel);
    const Jet acc_sq = detail::dot3(acc, acc);
    f.kappa = std::sqrt(acc_sq.value());
    if (!(f.kappa > eps_degenerate)) {
        f.degenerate = Degeneracy::kappa_zero;
        return f;
    }
    f.kappa_jet = sqrt(acc_sq);
    f.n = {acc[0] / f.kappa_jet, acc[1] / f.kappa_jet, acc[2] / f.kappa_jet};
    f.nv = detail::iso_value(f.n);

    const Jet3 dn = detail::differentiate3(f.n);
    const Jet dn_sq = detail::dot3(dn, dn);
    f.tau = std::sqrt(dn_sq.value());
    if (!(f.tau > eps_degenerate)) {
        f.degenerate = Degeneracy::tau_zero;
        return f;
    }
    f.tau_jet = sqrt(dn_sq);
    f.b = {dn[0] / f.tau_jet, dn[1] / f.tau_jet, dn[2] / f.tau_jet};
    f.bv = detail::iso_value(f.b);

    f.ev = g_cross(f.t, f.nv, f.bv);
    const Jet3 db = detail::differentiate3(f.b);
    f.sigma = db[0].value() * f.ev.x2 + db[1].value() * f.ev.x3 + db[2].value() * f.ev.x4;
    return f;
}

/// Frame and curvatures at one parameter value. Fields beyond the failing
/// stage are absent rather than filled with sentinels, so residual
/// statistics never ingest garbage.
struct FrenetData {
    double s = 0;
    GVector4 t{};
    double kappa = 0;
    std::optional<GVector4> n, b, e;
    std::optional<double> tau, sigma;
    Degeneracy degenerate = Degeneracy::none;

    bool ok() const { return degenerate == Degeneracy::none; }
};

inline FrenetData to_frenet_data(const FrameJets& f) {
    FrenetData d;
    d.s = f.s;
    d.t = f.t;
    d.kappa = f.kappa;
    d.degenerate = f.degenerate;
    if (f.degenerate == Degeneracy::kappa_zero) return d;
    d.n = f.nv;
    d.tau = f.tau;
    if (f.degenerate == Degeneracy::tau_zero) return d;
    d.b = f.bv;
    d.e = f.ev;
    d.sigma = f.sigma;
    return d;
}

/// Jet source of a curve's spatial components.
inline auto curve_source(Curve c) {
    return [c = std::move(c)](double s) { return spatial_jets(c, s); };
}

/// Jet source of the motion image of another source: the original is sampled
/// at the unshifted parameter and its components are mapped by the rotation,
/// the boost (linear in the absolute coordinate) and the spatial
/// translations. The image is again admissible with parameter u = s + td.
template <SpatialJetSource S>
auto transformed_source(S src, const GalileanMotion& m) {
    return [src = std::move(src), m](double u) -> Jet3 {
        const double s = u - m.time_shift();
        const Jet3 sp = src(s);
        const Jet abs = jet_var(s);
        const auto& R = m.rotation();
        const auto dir = m.boost_direction();
        const auto& p = m.params();
        const double shift[3] = {p.ta, p.tb, p.tc};
        Jet3 out;
        for (int i = 0; i < 3; ++i)
            out[i] = R[i][0] * sp[0] + R[i][1] * sp[1] + R[i][2] * sp[2] +
                     (p.v * dir[i]) * abs + shift[i];
        return out;
    };
}

template <SpatialJetSource S>
FrenetData frenet_at(const S& src, double s, double eps_degenerate = 1e-9) {
    return to_frenet_data(frame_jets(src, s, eps_degenerate));
}

inline FrenetData frenet_at(const Curve& c, double s, double eps_degenerate = 1e-9) {
    return frenet_at(curve_source(c), s, eps_degenerate);
}

/// One FrenetData per grid point of the curve's domain, in grid order.
inline std::vector<FrenetData> frenet_grid(const Curve& c, double eps_degenerate = 1e-9) {
    const auto src = curve_source(c);
    std::vector<FrenetData> out;
    for (double s : grid_points(c.domain)) out.push_back(frenet_at(src, s, eps_degenerate));
    return out;
}

/// Central-difference residuals of the four frame equations
///   t' = kappa n,  n' = tau b,  b' = -tau n + sigma e,  e' = -sigma b
/// at one parameter value. Each residual decays as O(h^2) on analytic curves.
struct FrenetResiduals {
    double tangent = 0, normal = 0, binormal = 0, trinormal = 0;

    double max() const {
        return std::max(std::max(tangent, normal), std::max(binormal, trinormal));
    }
};

inline FrenetResiduals frenet_residuals(const Curve& c, double s, double h = 1e-4,
                                        double eps_degenerate = 1e-9) {
    const auto src = curve_source(c);
    const FrenetData mid = frenet_at(src, s, eps_degenerate);
    const FrenetData fwd = frenet_at(src, s + h, eps_degenerate);
    const FrenetData bwd = frenet_at(src, s - h, eps_degenerate);
    if (!mid.ok() || !fwd.ok() || !bwd.ok())
        throw Error("frenet_residuals: degenerate frame in the stencil at s = " +
                    detail::num_str(s));
    const double inv = 1.0 / (2.0 * h);
    const GVector4 dt = inv * (fwd.t - bwd.t);
    const GVector4 dn = inv * (*fwd.n - *bwd.n);
    const GVector4 db = inv * (*fwd.b - *bwd.b);
    const GVector4 de = inv * (*fwd.e - *bwd.e);
    return {g_norm(dt - mid.kappa * (*mid.n)),
            g_norm(dn - *mid.tau * (*mid.b)),
            g_norm(db + *mid.tau * (*mid.n) - *mid.sigma * (*mid.e)),
            g_norm(de + *mid.sigma * (*mid.b))};
}

/// How the Frenet data at s changes under a motion: curvature deltas, and
/// the deviation of the transformed frame vectors from the rotation image of
/// the originals. The transformed curve is evaluated at s + td.
struct InvarianceRecord {
    double dkappa = 0, dtau = 0, dsigma = 0;
    double n_dev = 0, b_dev = 0, e_dev = 0;

    double max() const {
        return std::max(std::max(std::max(dkappa, dtau), std::max(dsigma, n_dev)),
                        std::max(b_dev, e_dev));
    }
};

inline InvarianceRecord invariance_check(const Curve& c, const GalileanMotion& m, double s,
                                         double eps_degenerate = 1e-9) {
    const FrenetData base = frenet_at(c, s, eps_degenerate);
    const auto moved_src = transformed_source(curve_source(c), m);
    const FrenetData moved = frenet_at(moved_src, s + m.time_shift(), eps_degenerate);
    if (!base.ok() || !moved.ok())
        throw Error("invariance_check: degenerate frame at s = " + detail::num_str(s));
    auto rotated = [&](const GVector4& v) { return apply_motion_to_vector(m, v); };
    return {std::abs(moved.kappa - base.kappa),
            std::abs(*moved.tau - *base.tau),
            std::abs(*moved.sigma - *base.sigma),
            g_norm(*moved.n - rotated(*base.n)),
            g_norm(*moved.b - rotated(*base.b)),
            g_norm(*moved.e - rotated(*base.e))};
}

}  // namespace g4
