#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "g4/jet.hpp"
#include "oracles.hpp"

using g4::Jet;

namespace {

Jet random_jet(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Jet j;
    for (auto& c : j.c) c = u(rng);
    return j;
}

bool coeffs_close(const Jet& a, const Jet& b, double tol) {
    for (std::size_t k = 0; k <= Jet::order; ++k)
        if (std::abs(a.c[k] - b.c[k]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("construction") {
    CHECK(g4::jet_const(3.0).c == std::array<double, 6>{3, 0, 0, 0, 0, 0});
    CHECK(g4::jet_var(2.0).c == std::array<double, 6>{2, 1, 0, 0, 0, 0});
    CHECK(g4::jet_var(0.0).c == std::array<double, 6>{0, 1, 0, 0, 0, 0});
}

TEST_CASE("product of identity jets is the square series") {
    const Jet s = g4::jet_var(1.0);
    CHECK((s * s).c == std::array<double, 6>{1, 2, 1, 0, 0, 0});
}

TEST_CASE("reciprocal of the identity jet is the geometric series") {
    // 1/(1+h) = 1 - h + h^2 - ...: alternating signs, the classic oracle
    const Jet r = g4::jet_const(1.0) / g4::jet_var(1.0);
    for (std::size_t k = 0; k <= Jet::order; ++k)
        CHECK(r.c[k] == Catch::Approx(k % 2 == 0 ? 1.0 : -1.0).margin(1e-15));
}

TEST_CASE("additive identity") {
    std::mt19937_64 rng(5);
    const Jet a = random_jet(rng);
    CHECK((a + g4::jet_const(0.0)).c == a.c);
}

TEST_CASE("sine of the identity jet is the Maclaurin series") {
    const Jet s = sin(g4::jet_var(0.0));
    CHECK(s.c[0] == 0.0);
    CHECK(s.c[1] == Catch::Approx(1.0).margin(1e-16));
    CHECK(s.c[2] == Catch::Approx(0.0).margin(1e-16));
    CHECK(s.c[3] == Catch::Approx(-1.0 / 6.0).margin(1e-16));
    CHECK(s.c[4] == Catch::Approx(0.0).margin(1e-16));
    CHECK(s.c[5] == Catch::Approx(1.0 / 120.0).margin(1e-16));
}

TEST_CASE("exp of a constant jet is constant") {
    CHECK(exp(g4::jet_const(0.0)).c == std::array<double, 6>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("composed elementary functions match finite differences") {
    const auto f = [](double s) { return std::cos(std::sin(s)); };
    const Jet j = cos(sin(g4::jet_var(0.3)));
    for (int order = 1; order <= 4; ++order) {
        const double ref = oracle::fd_derivative(f, 0.3, order);
        CHECK(g4::derivative(j, static_cast<std::size_t>(order)) ==
              Catch::Approx(ref).margin(1e-6));
    }
}

TEST_CASE("derivative extraction") {
    CHECK(g4::derivative(g4::jet_var(7.0), 1) == 1.0);
    CHECK(g4::derivative(g4::jet_const(4.0), 2) == 0.0);
    const Jet s = g4::jet_var(2.0);
    CHECK(g4::derivative(s * s, 2) == 2.0);
    CHECK_THROWS_AS(g4::derivative(s, 6), g4::Error);
}

TEST_CASE("differentiate shifts coefficients") {
    std::mt19937_64 rng(9);
    const Jet a = random_jet(rng);
    const Jet d = g4::differentiate(a);
    for (std::size_t k = 0; k < Jet::order; ++k)
        CHECK(d.c[k] == static_cast<double>(k + 1) * a.c[k + 1]);
    CHECK(d.c[Jet::order] == 0.0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(g4::jet_const(1.0) / g4::jet_const(0.0), g4::DomainError);
    CHECK_THROWS_AS(log(g4::jet_const(0.0)), g4::DomainError);
    CHECK_THROWS_AS(log(g4::jet_const(-1.0)), g4::DomainError);
    CHECK_THROWS_AS(sqrt(g4::jet_const(-2.0)), g4::DomainError);
    CHECK_THROWS_AS(sqrt(g4::jet_const(0.0)), g4::DomainError);
    CHECK_THROWS_AS(pow(g4::jet_const(-1.0), 0.5), g4::DomainError);
}

TEST_CASE("ring axioms hold coefficient-wise") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Jet a = random_jet(rng, 1.5);
        const Jet b = random_jet(rng, 1.5);
        const Jet c = random_jet(rng, 1.5);
        CHECK(coeffs_close(a + b, b + a, 1e-12));
        CHECK(coeffs_close(a * b, b * a, 1e-12));
        CHECK(coeffs_close((a + b) + c, a + (b + c), 1e-12));
        CHECK(coeffs_close((a * b) * c, a * (b * c), 1e-12));
        CHECK(coeffs_close(a * (b + c), a * b + a * c, 1e-12));
    }
}

TEST_CASE("division inverts multiplication") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> off(0.3, 2.0);
    for (int i = 0; i < 100; ++i) {
        const Jet a = random_jet(rng);
        Jet b = random_jet(rng);
        b.c[0] = off(rng) * (i % 2 == 0 ? 1.0 : -1.0);
        CHECK(coeffs_close((a * b) / b, a, 1e-10));
    }
}

TEST_CASE("pythagorean identity on random jets") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Jet a = random_jet(rng);
        const Jet one = sin(a) * sin(a) + cos(a) * cos(a);
        CHECK(coeffs_close(one, g4::jet_const(1.0), 1e-12));
    }
}

TEST_CASE("hyperbolic identity on random jets") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 50; ++i) {
        const Jet a = random_jet(rng, 1.0);
        const Jet one = cosh(a) * cosh(a) - sinh(a) * sinh(a);
        CHECK(coeffs_close(one, g4::jet_const(1.0), 1e-10));
    }
}

TEST_CASE("every elementary function matches finite differences") {
    struct Case {
        g4::Func tag;
        double (*fn)(double);
        double lo, hi;
    };
    const Case cases[] = {
        {g4::Func::sin, std::sin, -1.5, 1.5},
        {g4::Func::cos, std::cos, -1.5, 1.5},
        {g4::Func::tan, std::tan, -0.6, 0.6},
        {g4::Func::exp, std::exp, -1.0, 1.0},
        {g4::Func::log, std::log, 0.8, 3.0},
        {g4::Func::sqrt, std::sqrt, 0.8, 3.0},
        {g4::Func::sinh, std::sinh, -1.0, 1.0},
        {g4::Func::cosh, std::cosh, -1.0, 1.0},
    };
    std::mt19937_64 rng(31);
    for (const Case& c : cases) {
        std::uniform_real_distribution<double> u(c.lo, c.hi);
        for (int rep = 0; rep < 10; ++rep) {
            const double x0 = u(rng);
            const Jet j = g4::jet_fun(c.tag, g4::jet_var(x0));
            for (int order = 1; order <= 4; ++order) {
                const double ref = oracle::fd_derivative(
                    [&](double x) { return c.fn(x); }, x0, order);
                CHECK(g4::derivative(j, static_cast<std::size_t>(order)) ==
                      Catch::Approx(ref).margin(1e-6));
            }
        }
    }
}

TEST_CASE("integer powers avoid branch cuts") {
    const Jet s = g4::jet_var(-2.0);
    const Jet cube = pow(s, 3);
    CHECK(cube.c[0] == -8.0);
    CHECK(cube.c[1] == 12.0);   // 3 s^2
    CHECK(cube.c[2] == -6.0);   // 6 s / 2!
    CHECK(cube.c[3] == 1.0);    // 6 / 3!

    const Jet inv = pow(g4::jet_var(2.0), -2);
    CHECK(inv.c[0] == Catch::Approx(0.25).margin(1e-15));
    CHECK(inv.c[1] == Catch::Approx(-0.25).margin(1e-15));  // -2 s^-3
}

TEST_CASE("real power matches log-exp route") {
    const Jet a = g4::jet_var(1.7);
    const Jet direct = pow(a, 0.37);
    const Jet viaexp = exp(0.37 * log(a));
    CHECK(coeffs_close(direct, viaexp, 1e-12));
}

TEST_CASE("jet exponent falls back to exp-log") {
    const Jet s = g4::jet_var(1.3);
    const Jet self = pow(s, s);  // s^s
    const auto f = [](double x) { return std::pow(x, x); };
    for (int order = 1; order <= 4; ++order)
        CHECK(g4::derivative(self, static_cast<std::size_t>(order)) ==
              Catch::Approx(oracle::fd_derivative(f, 1.3, order)).margin(1e-6));
}
