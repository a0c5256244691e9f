#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

#include "g4/error.hpp"

namespace g4 {

/// Truncated Taylor series of a scalar function at an expansion point.
///
/// c[k] holds f^(k)(s0)/k!. The order is fixed at 5: the frame pipeline needs
/// the fourth derivative of curve components, and one spare order absorbs the
/// differentiation of derived quantities such as the second curvature.
/// Arithmetic on jets propagates derivatives exactly for analytic inputs; no
/// finite differencing is involved anywhere in this type.
struct Jet {
    static constexpr std::size_t order = 5;
    std::array<double, order + 1> c{};

    constexpr Jet() = default;

    /// Constant jet. Implicit so that mixed jet/double arithmetic reads like
    /// ordinary math in generic evaluation code.
    constexpr Jet(double v) : c{v} {}

    constexpr double value() const { return c[0]; }

    friend constexpr bool operator==(const Jet&, const Jet&) = default;
};

constexpr Jet jet_const(double v) { return Jet{v}; }

/// Jet of the identity function s ↦ s at s0: [s0, 1, 0, ...].
constexpr Jet jet_var(double s0) {
    Jet j;
    j.c[0] = s0;
    j.c[1] = 1.0;
    return j;
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

constexpr Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

constexpr Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

constexpr Jet operator-(const Jet& a) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) r.c[k] = -a.c[k];
    return r;
}

constexpr Jet operator+(const Jet& a) { return a; }

/// Cauchy product truncated at the jet order.
constexpr Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= Jet::order; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i <= k; ++i) acc += a.c[i] * b.c[k - i];
        r.c[k] = acc;
    }
    return r;
}

/// Recursive quotient: q[k] = (a[k] - sum_{i<k} q[i] b[k-i]) / b[0].
inline Jet operator/(const Jet& a, const Jet& b) {
    if (b.c[0] == 0.0) throw DomainError("divide", 0.0);
    Jet q;
    for (std::size_t k = 0; k <= Jet::order; ++k) {
        double acc = a.c[k];
        for (std::size_t i = 0; i < k; ++i) acc -= q.c[i] * b.c[k - i];
        q.c[k] = acc / b.c[0];
    }
    return q;
}

constexpr Jet operator*(const Jet& a, double s) { return a * Jet{s}; }
constexpr Jet operator*(double s, const Jet& a) { return a * Jet{s}; }
constexpr Jet operator+(const Jet& a, double s) { return a + Jet{s}; }
constexpr Jet operator+(double s, const Jet& a) { return a + Jet{s}; }
constexpr Jet operator-(const Jet& a, double s) { return a - Jet{s}; }
constexpr Jet operator-(double s, const Jet& a) { return Jet{s} - a; }
inline Jet operator/(const Jet& a, double s) { return a / Jet{s}; }
inline Jet operator/(double s, const Jet& a) { return Jet{s} / a; }

// ---------------------------------------------------------------------------
// Derivative access
// ---------------------------------------------------------------------------

/// k-th derivative value of the represented function, k!·c[k].
inline double derivative(const Jet& a, std::size_t k) {
    if (k > Jet::order) throw Error("jet derivative order out of range: " + std::to_string(k));
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return fact * a.c[k];
}

/// Jet of the derivative function. The top coefficient of the result is not
/// tracked (set to zero); each application loses one valid order.
constexpr Jet differentiate(const Jet& a) {
    Jet r;
    for (std::size_t k = 0; k < Jet::order; ++k)
        r.c[k] = static_cast<double>(k + 1) * a.c[k + 1];
    r.c[Jet::order] = 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Elementary functions (standard univariate Taylor recurrences)
// ---------------------------------------------------------------------------

namespace detail {

// sin and cos propagate as a coupled pair: s' = a'·cos, c' = -a'·sin.
inline void sincos_jets(const Jet& a, Jet& s, Jet& c, bool hyperbolic) {
    if (hyperbolic) {
        s.c[0] = std::sinh(a.c[0]);
        c.c[0] = std::cosh(a.c[0]);
    } else {
        s.c[0] = std::sin(a.c[0]);
        c.c[0] = std::cos(a.c[0]);
    }
    const double sign = hyperbolic ? 1.0 : -1.0;
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double accs = 0.0, accc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            accs += static_cast<double>(j) * a.c[j] * c.c[k - j];
            accc += static_cast<double>(j) * a.c[j] * s.c[k - j];
        }
        s.c[k] = accs / static_cast<double>(k);
        c.c[k] = sign * accc / static_cast<double>(k);
    }
}

}  // namespace detail

inline Jet sin(const Jet& a) {
    Jet s, c;
    detail::sincos_jets(a, s, c, false);
    return s;
}

inline Jet cos(const Jet& a) {
    Jet s, c;
    detail::sincos_jets(a, s, c, false);
    return c;
}

inline Jet sinh(const Jet& a) {
    Jet s, c;
    detail::sincos_jets(a, s, c, true);
    return s;
}

inline Jet cosh(const Jet& a) {
    Jet s, c;
    detail::sincos_jets(a, s, c, true);
    return c;
}

inline Jet tan(const Jet& a) {
    Jet s, c;
    detail::sincos_jets(a, s, c, false);
    if (c.c[0] == 0.0) throw DomainError("tan", a.c[0]);
    return s / c;
}

inline Jet exp(const Jet& a) {
    Jet e;
    e.c[0] = std::exp(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * a.c[j] * e.c[k - j];
        e.c[k] = acc / static_cast<double>(k);
    }
    return e;
}

inline Jet log(const Jet& a) {
    if (!(a.c[0] > 0.0)) throw DomainError("log", a.c[0]);
    Jet l;
    l.c[0] = std::log(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i < k; ++i)
            acc += static_cast<double>(k - i) * a.c[i] * l.c[k - i];
        l.c[k] = (a.c[k] - acc / static_cast<double>(k)) / a.c[0];
    }
    return l;
}

/// Requires a strictly positive constant term: at zero the derivative of the
/// square root is unbounded, so the jet does not exist.
inline Jet sqrt(const Jet& a) {
    if (!(a.c[0] > 0.0)) throw DomainError("sqrt", a.c[0]);
    Jet r;
    r.c[0] = std::sqrt(a.c[0]);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double acc = a.c[k];
        for (std::size_t i = 1; i < k; ++i) acc -= r.c[i] * r.c[k - i];
        r.c[k] = acc / (2.0 * r.c[0]);
    }
    return r;
}

/// Integer power by repeated squaring; works for any base, avoids branch
/// cuts. Negative exponents go through the reciprocal and need c[0] != 0.
inline Jet pow(const Jet& a, long n) {
    if (n < 0) return Jet{1.0} / pow(a, -n);
    Jet result{1.0};
    Jet base = a;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

/// Real power via the recurrence a·p' = α·a'·p; needs a positive constant
/// term. Integer-valued exponents are routed to repeated squaring.
inline Jet pow(const Jet& a, double alpha) {
    if (alpha == std::rint(alpha) && std::abs(alpha) <= 1e15)
        return pow(a, static_cast<long>(alpha));
    if (!(a.c[0] > 0.0)) throw DomainError("pow", a.c[0]);
    Jet p;
    p.c[0] = std::pow(a.c[0], alpha);
    for (std::size_t k = 1; k <= Jet::order; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            acc += (alpha * static_cast<double>(k - j) - static_cast<double>(j)) *
                   a.c[k - j] * p.c[j];
        p.c[k] = acc / (static_cast<double>(k) * a.c[0]);
    }
    return p;
}

inline Jet pow(const Jet& a, int n) { return pow(a, static_cast<long>(n)); }

inline Jet pow(const Jet& a, const Jet& b) {
    bool constant_exponent = true;
    for (std::size_t k = 1; k <= Jet::order; ++k)
        if (b.c[k] != 0.0) constant_exponent = false;
    if (constant_exponent) return pow(a, b.c[0]);
    if (!(a.c[0] > 0.0)) throw DomainError("pow", a.c[0]);
    return exp(b * log(a));
}

// ---------------------------------------------------------------------------
// Elementary-function tags
// ---------------------------------------------------------------------------

/// Tags for the supported elementary functions, shared by the jet layer and
/// the expression evaluator.
enum class Func { sin, cos, tan, exp, log, sqrt, sinh, cosh, neg };

inline const char* func_name(Func f) {
    switch (f) {
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::tan: return "tan";
        case Func::exp: return "exp";
        case Func::log: return "log";
        case Func::sqrt: return "sqrt";
        case Func::sinh: return "sinh";
        case Func::cosh: return "cosh";
        case Func::neg: return "neg";
    }
    return "?";
}

inline Jet jet_fun(Func f, const Jet& a) {
    switch (f) {
        case Func::sin: return sin(a);
        case Func::cos: return cos(a);
        case Func::tan: return tan(a);
        case Func::exp: return exp(a);
        case Func::log: return log(a);
        case Func::sqrt: return sqrt(a);
        case Func::sinh: return sinh(a);
        case Func::cosh: return cosh(a);
        case Func::neg: return -a;
    }
    throw Error("unknown function tag");
}

/// Same tags on plain reals, with the same domain checks as the jet path.
inline double apply_fun(Func f, double x) {
    switch (f) {
        case Func::sin: return std::sin(x);
        case Func::cos: return std::cos(x);
        case Func::tan:
            if (std::cos(x) == 0.0) throw DomainError("tan", x);
            return std::tan(x);
        case Func::exp: return std::exp(x);
        case Func::log:
            if (!(x > 0.0)) throw DomainError("log", x);
            return std::log(x);
        case Func::sqrt:
            if (x < 0.0) throw DomainError("sqrt", x);
            return std::sqrt(x);
        case Func::sinh: return std::sinh(x);
        case Func::cosh: return std::cosh(x);
        case Func::neg: return -x;
    }
    throw Error("unknown function tag");
}

inline std::ostream& operator<<(std::ostream& out, const Jet& j) {
    out << "[";
    for (std::size_t k = 0; k <= Jet::order; ++k) out << (k ? ", " : "") << j.c[k];
    return out << "]";
}

}  // namespace g4
