// Independent oracles used by the test suites. Everything here is written
// from first principles (permutation determinants, difference stencils,
// hand-differentiated closed forms) and must stay independent of the library
// implementation paths it checks.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "g4/galilean.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Brute-force determinants
// ---------------------------------------------------------------------------

/// 4x4 determinant by explicit permutation expansion (24 terms, sign from
/// the inversion count).
inline double det4(const std::array<std::array<double, 4>, 4>& m) {
    int idx[4] = {0, 1, 2, 3};
    double acc = 0.0;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (idx[i] > idx[j]) ++inversions;
        double term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (int row = 0; row < 4; ++row) term *= m[row][idx[row]];
        acc += term;
    } while (std::next_permutation(idx, idx + 4));
    return acc;
}

/// Cross-product oracle: component i of a^b^c is the determinant of the
/// matrix whose first row is the i-th standard basis vector over rows a, b,
/// c. Component 1 is zero because the formal first row starts with 0.
inline g4::GVector4 cross_oracle(const g4::GVector4& a, const g4::GVector4& b,
                                 const g4::GVector4& c) {
    auto as_row = [](const g4::GVector4& v) {
        return std::array<double, 4>{v.x1, v.x2, v.x3, v.x4};
    };
    g4::GVector4 out{0.0, 0.0, 0.0, 0.0};
    double* slots[3] = {&out.x2, &out.x3, &out.x4};
    for (int i = 0; i < 3; ++i) {
        std::array<std::array<double, 4>, 4> m{};
        m[0][i + 1] = 1.0;
        m[1] = as_row(a);
        m[2] = as_row(b);
        m[3] = as_row(c);
        *slots[i] = det4(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metric reimplementation (acceptance criterion 1)
// ---------------------------------------------------------------------------

inline bool isotropic_oracle(const g4::GVector4& v) {
    const double m = std::max(std::max(std::abs(v.x1), std::abs(v.x2)),
                              std::max(std::abs(v.x3), std::abs(v.x4)));
    return std::abs(v.x1) <= 1e-12 * (1.0 + m);
}

inline double dot_oracle(const g4::GVector4& a, const g4::GVector4& b) {
    const bool ia = isotropic_oracle(a), ib = isotropic_oracle(b);
    if (!ia && !ib) return a.x1 * b.x1;
    if (ia && ib) return a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4;
    return 0.0;
}

inline double norm_oracle(const g4::GVector4& a) {
    if (!isotropic_oracle(a)) return std::abs(a.x1);
    return std::sqrt(a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4);
}

inline double distance_oracle(const g4::GPoint4& p, const g4::GPoint4& q) {
    if (p.x1 != q.x1) return std::abs(q.x1 - p.x1);
    return std::sqrt((q.x2 - p.x2) * (q.x2 - p.x2) + (q.x3 - p.x3) * (q.x3 - p.x3) +
                     (q.x4 - p.x4) * (q.x4 - p.x4));
}

// ---------------------------------------------------------------------------
// Finite differences with one Richardson step
// ---------------------------------------------------------------------------

/// Central difference of the given order with step h; error O(h^2).
inline double central_diff(const std::function<double(double)>& f, double x, int order,
                           double h) {
    switch (order) {
        case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        case 3:
            return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
                   (2.0 * h * h * h);
        case 4:
            return (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) +
                    f(x - 2.0 * h)) /
                   (h * h * h * h);
        default: return 0.0;
    }
}

/// Base step per order: higher orders divide by h^order, so they need a
/// larger starting step to stay above the rounding floor.
inline double fd_step(int order) {
    switch (order) {
        case 1: return 0.05;
        case 2: return 0.05;
        case 3: return 0.15;
        default: return 0.3;
    }
}

/// Richardson tableau over halving steps (the error series of a central
/// stencil has only even powers). Returns the diagonal entry with the best
/// successive agreement, which rides the sweet spot between truncation and
/// rounding noise.
inline double fd_derivative(const std::function<double(double)>& f, double x, int order,
                            double h0 = 0.0, int levels = 5) {
    if (h0 == 0.0) h0 = fd_step(order);
    double tableau[8][8];
    double best = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < levels; ++i) {
        tableau[i][0] = central_diff(f, x, order, h0 / static_cast<double>(1 << i));
        double weight = 1.0;
        for (int k = 1; k <= i; ++k) {
            weight *= 4.0;
            tableau[i][k] =
                (weight * tableau[i][k - 1] - tableau[i - 1][k - 1]) / (weight - 1.0);
        }
        if (i > 0) {
            const double err = std::abs(tableau[i][i] - tableau[i - 1][i - 1]);
            if (err < best_err) {
                best_err = err;
                best = tableau[i][i];
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Closed-form helix frame (hand differentiation of y = a cos(ps),
// z = a sin(ps), w = q s^2/2 through the frame construction; valid for
// a > 0, p > 0)
// ---------------------------------------------------------------------------

struct HelixOracle {
    double a, p, q;

    double kappa() const { return std::sqrt(a * a * p * p * p * p + q * q); }
    double tau() const { return a * p * p * p / kappa(); }
    double sigma() const { return -p * q / kappa(); }

    g4::GVector4 t(double s) const {
        return {1.0, -a * p * std::sin(p * s), a * p * std::cos(p * s), q * s};
    }
    g4::GVector4 n(double s) const {
        const double k = kappa();
        return {0.0, -a * p * p * std::cos(p * s) / k, -a * p * p * std::sin(p * s) / k,
                q / k};
    }
    g4::GVector4 b(double s) const {
        return {0.0, std::sin(p * s), -std::cos(p * s), 0.0};
    }
    g4::GVector4 e(double s) const {
        const double k = kappa();
        return {0.0, -q * std::cos(p * s) / k, -q * std::sin(p * s) / k, -a * p * p / k};
    }

    /// gamma solving kappa = gamma tau^2.
    double gamma() const { return kappa() / (tau() * tau()); }
};

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

inline g4::GVector4 random_vector(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

inline g4::GVector4 random_isotropic(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {0.0, u(rng), u(rng), u(rng)};
}

inline g4::GPoint4 random_point(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace oracle
