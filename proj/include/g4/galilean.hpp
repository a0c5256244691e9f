#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <random>

#include "g4/error.hpp"

namespace g4 {

/// Vector in G4. The first component is the absolute coordinate; a vector
/// whose absolute component vanishes is isotropic and carries the Euclidean
/// metric on its spatial part.
struct GVector4 {
    double x1 = 0, x2 = 0, x3 = 0, x4 = 0;

    friend constexpr bool operator==(const GVector4&, const GVector4&) = default;
};

/// Affine point of G4, absolute coordinate first.
struct GPoint4 {
    double x1 = 0, x2 = 0, x3 = 0, x4 = 0;

    friend constexpr bool operator==(const GPoint4&, const GPoint4&) = default;
};

constexpr GVector4 operator+(const GVector4& a, const GVector4& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
}
constexpr GVector4 operator-(const GVector4& a, const GVector4& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
}
constexpr GVector4 operator-(const GVector4& a) { return {-a.x1, -a.x2, -a.x3, -a.x4}; }
constexpr GVector4 operator*(double s, const GVector4& a) {
    return {s * a.x1, s * a.x2, s * a.x3, s * a.x4};
}
constexpr GVector4 operator*(const GVector4& a, double s) { return s * a; }
constexpr GVector4 operator-(const GPoint4& p, const GPoint4& q) {
    return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3, p.x4 - q.x4};
}
constexpr GPoint4 operator+(const GPoint4& p, const GVector4& v) {
    return {p.x1 + v.x1, p.x2 + v.x2, p.x3 + v.x3, p.x4 + v.x4};
}

constexpr double kIsotropyEps = 1e-12;

/// A vector built with a literal zero absolute component is isotropic
/// exactly; computed vectors may carry rounding dust in x1, so the test is
/// relative to the largest component magnitude.
inline bool is_isotropic(const GVector4& v) {
    const double m = std::max(std::max(std::abs(v.x1), std::abs(v.x2)),
                              std::max(std::abs(v.x3), std::abs(v.x4)));
    return std::abs(v.x1) <= kIsotropyEps * (1.0 + m);
}

/// Galilean scalar product. Both arguments non-isotropic: product of the
/// absolute parts. Exactly one isotropic: zero. Both isotropic: Euclidean
/// product of the spatial parts. This is the degenerate-metric convention
/// under which an admissible curve's frame is orthonormal identically.
inline double g_dot(const GVector4& a, const GVector4& b) {
    const bool ia = is_isotropic(a), ib = is_isotropic(b);
    if (!ia && !ib) return a.x1 * b.x1;
    if (ia != ib) return 0.0;
    return a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4;
}

inline double g_norm(const GVector4& a) {
    if (!is_isotropic(a)) return std::abs(a.x1);
    return std::sqrt(a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4);
}

/// Two-case Galilean distance: absolute separation when the absolute
/// coordinates differ, Euclidean spatial distance otherwise.
inline double g_distance(const GPoint4& p, const GPoint4& q) {
    if (p.x1 != q.x1) return std::abs(q.x1 - p.x1);
    const double d2 = q.x2 - p.x2, d3 = q.x3 - p.x3, d4 = q.x4 - p.x4;
    return std::sqrt(d2 * d2 + d3 * d3 + d4 * d4);
}

/// Ternary cross product: the formal determinant with first row
/// (0, e2, e3, e4) over rows a, b, c. The result is always isotropic.
inline GVector4 g_cross(const GVector4& a, const GVector4& b, const GVector4& c) {
    auto det3 = [](double m11, double m12, double m13,
                   double m21, double m22, double m23,
                   double m31, double m32, double m33) {
        return m11 * (m22 * m33 - m23 * m32) - m12 * (m21 * m33 - m23 * m31) +
               m13 * (m21 * m32 - m22 * m31);
    };
    // Cofactors of the first row; the e1 slot is zeroed by the leading 0.
    const double m12 = det3(a.x1, a.x3, a.x4, b.x1, b.x3, b.x4, c.x1, c.x3, c.x4);
    const double m13 = det3(a.x1, a.x2, a.x4, b.x1, b.x2, b.x4, c.x1, c.x2, c.x4);
    const double m14 = det3(a.x1, a.x2, a.x3, b.x1, b.x2, b.x3, c.x1, c.x2, c.x3);
    return {0.0, -m12, m13, -m14};
}

// ---------------------------------------------------------------------------
// Galilean motions
// ---------------------------------------------------------------------------

/// Raw parameters of a Galilean motion: ZXZ Euler angles of the spatial
/// rotation, boost speed v with direction angles d1..d3 (whose cosines must
/// form a unit vector), and four translations. Angles are radians.
struct MotionParams {
    double alpha = 0, beta = 0, gamma_angle = 0;
    double v = 0;
    double d1 = 0, d2 = 0, d3 = 0;
    double ta = 0, tb = 0, tc = 0, td = 0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// The 10-parameter motion group of G4. Validated at construction:
/// cos²d1 + cos²d2 + cos²d3 = 1 and RᵀR = I, both within 1e-12. Direction
/// angles are never renormalized silently.
class GalileanMotion {
public:
    static constexpr double kValidationEps = 1e-12;

    explicit GalileanMotion(const MotionParams& p) : params_(p), rot_(build_rotation(p)) {
        const double s = std::cos(p.d1) * std::cos(p.d1) + std::cos(p.d2) * std::cos(p.d2) +
                         std::cos(p.d3) * std::cos(p.d3);
        if (std::abs(s - 1.0) > kValidationEps)
            throw Error("invalid motion: cos^2 d1 + cos^2 d2 + cos^2 d3 = " +
                        detail::num_str(s));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double acc = 0.0;
                for (int k = 0; k < 3; ++k) acc += rot_[k][i] * rot_[k][j];
                if (std::abs(acc - (i == j ? 1.0 : 0.0)) > kValidationEps)
                    throw Error("invalid motion: rotation block is not orthogonal");
            }
    }

    const MotionParams& params() const { return params_; }
    const Mat3& rotation() const { return rot_; }

    std::array<double, 3> boost_direction() const {
        return {std::cos(params_.d1), std::cos(params_.d2), std::cos(params_.d3)};
    }

    double speed() const { return params_.v; }
    double time_shift() const { return params_.td; }

    /// Identity: zero angles, zero speed, direction (0, pi/2, pi/2) so the
    /// cosine constraint holds, zero translations.
    static GalileanMotion identity() { return GalileanMotion(MotionParams{
        0, 0, 0, 0, 0, std::acos(0.0), std::acos(0.0), 0, 0, 0, 0}); }

    static GalileanMotion rotation_only(double alpha, double beta, double gamma_angle) {
        MotionParams p;
        p.alpha = alpha;
        p.beta = beta;
        p.gamma_angle = gamma_angle;
        p.d2 = p.d3 = std::acos(0.0);
        return GalileanMotion(p);
    }

    static GalileanMotion boost_only(double v, double d1, double d2, double d3) {
        MotionParams p;
        p.v = v;
        p.d1 = d1;
        p.d2 = d2;
        p.d3 = d3;
        return GalileanMotion(p);
    }

    static GalileanMotion translation_only(double ta, double tb, double tc, double td) {
        MotionParams p;
        p.d2 = p.d3 = std::acos(0.0);
        p.ta = ta;
        p.tb = tb;
        p.tc = tc;
        p.td = td;
        return GalileanMotion(p);
    }

private:
    static Mat3 build_rotation(const MotionParams& p) {
        const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
        const double cb = std::cos(p.beta), sb = std::sin(p.beta);
        const double cg = std::cos(p.gamma_angle), sg = std::sin(p.gamma_angle);
        return Mat3{{{cb * ca - cg * sb * sa, sb * ca + cg * cb * sa, sg * sa},
                     {-(cb * sa + cg * sb * ca), -sb * sa + cg * cb * ca, sg * ca},
                     {sg * sb, -sg * cb, cg}}};
    }

    MotionParams params_;
    Mat3 rot_;
};

/// Curve order keeps the absolute coordinate first; the motion equations are
/// written in (x, y, z, t) order with the absolute coordinate last. These two
/// adapters are the only place the permutation appears.
constexpr std::array<double, 4> from_curve_order(const GPoint4& p) {
    return {p.x2, p.x3, p.x4, p.x1};
}

constexpr GPoint4 to_curve_order(const std::array<double, 4>& xyzt) {
    return {xyzt[3], xyzt[0], xyzt[1], xyzt[2]};
}

/// Applies the full affine motion to a point given in curve order.
inline GPoint4 apply_motion(const GalileanMotion& m, const GPoint4& p) {
    const auto xyzt = from_curve_order(p);
    const auto& R = m.rotation();
    const auto dir = m.boost_direction();
    const auto& q = m.params();
    std::array<double, 4> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = R[i][0] * xyzt[0] + R[i][1] * xyzt[1] + R[i][2] * xyzt[2] +
                 q.v * dir[i] * xyzt[3];
    out[0] += q.ta;
    out[1] += q.tb;
    out[2] += q.tc;
    out[3] = xyzt[3] + q.td;
    return to_curve_order(out);
}

/// Linear part of the motion: rotation plus boost, translations dropped.
/// Isotropic vectors simply rotate; tangent-shaped vectors also pick up the
/// boost contribution on their spatial part.
inline GVector4 apply_motion_to_vector(const GalileanMotion& m, const GVector4& v) {
    const auto& R = m.rotation();
    const auto dir = m.boost_direction();
    const double sp[3] = {v.x2, v.x3, v.x4};
    double out[3];
    for (int i = 0; i < 3; ++i)
        out[i] = R[i][0] * sp[0] + R[i][1] * sp[1] + R[i][2] * sp[2] +
                 m.speed() * dir[i] * v.x1;
    return {v.x1, out[0], out[1], out[2]};
}

/// Uniformly random valid motion: Euler angles in [0, 2pi), speed in [-3, 3],
/// boost direction from a random unit vector, translations in [-2, 2].
inline GalileanMotion random_motion(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> speed(-3.0, 3.0);
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double u1 = gauss(rng), u2 = gauss(rng), u3 = gauss(rng);
    double n = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
    while (n < 1e-6) {
        u1 = gauss(rng);
        u2 = gauss(rng);
        u3 = gauss(rng);
        n = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
    }
    MotionParams p;
    p.alpha = angle(rng);
    p.beta = angle(rng);
    p.gamma_angle = angle(rng);
    p.v = speed(rng);
    p.d1 = std::acos(u1 / n);
    p.d2 = std::acos(u2 / n);
    p.d3 = std::acos(u3 / n);
    p.ta = shift(rng);
    p.tb = shift(rng);
    p.tc = shift(rng);
    p.td = shift(rng);
    return GalileanMotion(p);
}

inline std::ostream& operator<<(std::ostream& out, const GVector4& v) {
    return out << "(" << v.x1 << ", " << v.x2 << ", " << v.x3 << ", " << v.x4 << ")";
}

inline std::ostream& operator<<(std::ostream& out, const GPoint4& p) {
    return out << "(" << p.x1 << ", " << p.x2 << ", " << p.x3 << ", " << p.x4 << ")";
}

}  // namespace g4
