#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "g4/galilean.hpp"
#include "oracles.hpp"

using g4::GPoint4;
using g4::GVector4;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;
}  // namespace

TEST_CASE("scalar product routes by isotropy") {
    CHECK(g4::g_dot({1, 5, 7, 9}, {1, 0, 0, 0}) == 1.0);
    CHECK(g4::g_dot({0, 3, 4, 0}, {0, 3, 4, 0}) == 25.0);

    // mixed case: one isotropic argument makes the product vanish, which is
    // exactly what the frame orthogonality relations need
    CHECK(g4::g_dot({1, 0.3, -0.4, 2.0}, {0, 5, 6, 7}) == 0.0);
    CHECK(g4::g_dot({0, 5, 6, 7}, {1, 0.3, -0.4, 2.0}) == 0.0);
}

TEST_CASE("scalar product is symmetric in all routings") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const GVector4 a = oracle::random_vector(rng);
        const GVector4 b = oracle::random_vector(rng);
        const GVector4 ai = oracle::random_isotropic(rng);
        const GVector4 bi = oracle::random_isotropic(rng);
        CHECK(g4::g_dot(a, b) == g4::g_dot(b, a));
        CHECK(g4::g_dot(a, bi) == g4::g_dot(bi, a));
        CHECK(g4::g_dot(ai, bi) == g4::g_dot(bi, ai));
    }
}

TEST_CASE("norm") {
    CHECK(g4::g_norm({2, 100, -3, 7}) == 2.0);
    CHECK(g4::g_norm({0, 3, 4, 0}) == 5.0);
    // any admissible tangent has unit norm regardless of the spatial slope
    CHECK(g4::g_norm({1, 12.5, -8.0, 0.25}) == 1.0);
}

TEST_CASE("norm squared equals self dot product") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const GVector4 a = oracle::random_vector(rng);
        const GVector4 b = oracle::random_isotropic(rng);
        CHECK(g4::g_norm(a) * g4::g_norm(a) == Catch::Approx(g4::g_dot(a, a)).margin(1e-12));
        CHECK(g4::g_norm(b) * g4::g_norm(b) == Catch::Approx(g4::g_dot(b, b)).margin(1e-12));
    }
}

TEST_CASE("isotropy classification tolerates rounding dust") {
    CHECK(g4::is_isotropic({0.0, 3, 4, 0}));
    CHECK(g4::is_isotropic({1e-15, 3, 4, 0}));
    CHECK_FALSE(g4::is_isotropic({1e-9, 3, 4, 0}));
    CHECK_FALSE(g4::is_isotropic({1.0, 0, 0, 0}));
}

TEST_CASE("distance") {
    CHECK(g4::g_distance({0, 0, 0, 0}, {2, 5, 5, 5}) == 2.0);
    CHECK(g4::g_distance({1, 0, 0, 0}, {1, 3, 4, 0}) == 5.0);
    const GPoint4 p{0.7, -1.2, 3.4, 0.0};
    CHECK(g4::g_distance(p, p) == 0.0);
}

TEST_CASE("cross product of the spatial basis") {
    const GVector4 r = g4::g_cross({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0});
    CHECK(r == GVector4{0, 0, 0, -1});
}

TEST_CASE("cross product with a repeated row vanishes") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const GVector4 a = oracle::random_vector(rng);
        const GVector4 c = oracle::random_vector(rng);
        const GVector4 r = g4::g_cross(a, a, c);
        CHECK(std::abs(r.x2) < 1e-12);
        CHECK(std::abs(r.x3) < 1e-12);
        CHECK(std::abs(r.x4) < 1e-12);
    }
}

TEST_CASE("cross product frame value for the unit helix") {
    // frame of y = cos s, z = sin s, w = s^2/2 at s = 0, from the closed form
    const GVector4 t{1, 0, 1, 0};
    const GVector4 n{0, -1 / kSqrt2, 0, 1 / kSqrt2};
    const GVector4 b{0, 0, -1, 0};
    const GVector4 e = g4::g_cross(t, n, b);
    CHECK(e.x1 == 0.0);
    CHECK(e.x2 == Catch::Approx(-1 / kSqrt2).margin(1e-15));
    CHECK(e.x3 == Catch::Approx(0.0).margin(1e-15));
    CHECK(e.x4 == Catch::Approx(-1 / kSqrt2).margin(1e-15));

    const GVector4 ref = oracle::cross_oracle(t, n, b);
    CHECK(e.x2 == Catch::Approx(ref.x2).margin(1e-14));
    CHECK(e.x3 == Catch::Approx(ref.x3).margin(1e-14));
    CHECK(e.x4 == Catch::Approx(ref.x4).margin(1e-14));
}

TEST_CASE("cross product matches the permutation-determinant oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const GVector4 a = oracle::random_vector(rng);
        const GVector4 b = oracle::random_vector(rng);
        const GVector4 c = oracle::random_vector(rng);
        const GVector4 got = g4::g_cross(a, b, c);
        const GVector4 ref = oracle::cross_oracle(a, b, c);
        CHECK(got.x1 == 0.0);
        CHECK(got.x2 == Catch::Approx(ref.x2).margin(1e-12));
        CHECK(got.x3 == Catch::Approx(ref.x3).margin(1e-12));
        CHECK(got.x4 == Catch::Approx(ref.x4).margin(1e-12));
    }
}

TEST_CASE("cross product is trilinear and antisymmetric") {
    std::mt19937_64 rng(23);
    auto close = [](const GVector4& u, const GVector4& v) {
        return std::abs(u.x2 - v.x2) <= 1e-12 && std::abs(u.x3 - v.x3) <= 1e-12 &&
               std::abs(u.x4 - v.x4) <= 1e-12;
    };
    for (int i = 0; i < 100; ++i) {
        const GVector4 a = oracle::random_vector(rng, 1.0);
        const GVector4 a2 = oracle::random_vector(rng, 1.0);
        const GVector4 b = oracle::random_vector(rng, 1.0);
        const GVector4 c = oracle::random_vector(rng, 1.0);
        const double lam = 0.75;

        CHECK(close(g4::g_cross(a + lam * a2, b, c),
                    g4::g_cross(a, b, c) + lam * g4::g_cross(a2, b, c)));
        CHECK(close(g4::g_cross(a, b, c), -1.0 * g4::g_cross(b, a, c)));
        CHECK(close(g4::g_cross(a, b, c), -1.0 * g4::g_cross(a, c, b)));
        CHECK(close(g4::g_cross(a, b, c), -1.0 * g4::g_cross(c, b, a)));
    }
}

TEST_CASE("cross product is orthogonal to its isotropic factors") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const GVector4 a = oracle::random_vector(rng);
        const GVector4 b = oracle::random_isotropic(rng);
        const GVector4 c = oracle::random_isotropic(rng);
        const GVector4 r = g4::g_cross(a, b, c);
        CHECK(std::abs(g4::g_dot(r, b)) < 1e-12);
        CHECK(std::abs(g4::g_dot(r, c)) < 1e-12);
    }
}

TEST_CASE("motion construction validates the direction constraint") {
    g4::MotionParams p;
    p.d1 = p.d2 = p.d3 = 0.0;  // cos^2 sum = 3
    CHECK_THROWS_AS(g4::GalileanMotion(p), g4::Error);

    p.d1 = 0.0;
    p.d2 = p.d3 = std::acos(0.0);
    CHECK_NOTHROW(g4::GalileanMotion(p));
}

TEST_CASE("rotation block is orthogonal for random angles") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 100; ++i) {
        const auto m = g4::GalileanMotion::rotation_only(angle(rng), angle(rng), angle(rng));
        const auto& R = m.rotation();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (int k = 0; k < 3; ++k) acc += R[k][r] * R[k][c];
                CHECK(acc == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-12));
            }
    }
}

TEST_CASE("identity motion fixes every point") {
    const auto id = g4::GalileanMotion::identity();
    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
        const GPoint4 p = oracle::random_point(rng);
        const GPoint4 q = g4::apply_motion(id, p);
        CHECK(q.x1 == Catch::Approx(p.x1).margin(1e-15));
        CHECK(q.x2 == Catch::Approx(p.x2).margin(1e-15));
        CHECK(q.x3 == Catch::Approx(p.x3).margin(1e-15));
        CHECK(q.x4 == Catch::Approx(p.x4).margin(1e-15));
    }
}

TEST_CASE("pure time translation shifts only the absolute coordinate") {
    const auto m = g4::GalileanMotion::translation_only(0, 0, 0, 2.5);
    const GPoint4 q = g4::apply_motion(m, {1.0, 3.0, -4.0, 5.0});
    CHECK(q == GPoint4{3.5, 3.0, -4.0, 5.0});
}

TEST_CASE("pure boost adds v t along the direction cosines") {
    // direction (0, pi/2, pi/2): cosines (1, 0, 0)
    const auto m = g4::GalileanMotion::boost_only(3.0, 0.0, std::acos(0.0), std::acos(0.0));
    const GPoint4 q = g4::apply_motion(m, {2.0, 1.0, 1.0, 1.0});
    CHECK(q.x1 == 2.0);
    CHECK(q.x2 == Catch::Approx(1.0 + 3.0 * 2.0).margin(1e-12));
    CHECK(q.x3 == Catch::Approx(1.0).margin(1e-12));
    CHECK(q.x4 == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("coordinate-order adapters invert each other") {
    const GPoint4 p{1.0, 2.0, 3.0, 4.0};
    const auto xyzt = g4::from_curve_order(p);
    CHECK(xyzt == std::array<double, 4>{2.0, 3.0, 4.0, 1.0});
    CHECK(g4::to_curve_order(xyzt) == p);
}

TEST_CASE("vector transform: translation-only leaves vectors unchanged") {
    const auto m = g4::GalileanMotion::translation_only(1, 2, 3, 4);
    const GVector4 v{0.5, 1.0, -2.0, 0.25};
    const GVector4 w = g4::apply_motion_to_vector(m, v);
    CHECK(w == v);
}

TEST_CASE("vector transform: isotropic vectors rotate, absolute part stays zero") {
    const auto m = g4::GalileanMotion::rotation_only(0.3, 1.1, -0.7);
    const GVector4 v{0.0, 1.0, 2.0, 3.0};
    const GVector4 w = g4::apply_motion_to_vector(m, v);
    CHECK(w.x1 == 0.0);
    const auto& R = m.rotation();
    CHECK(w.x2 == Catch::Approx(R[0][0] * 1 + R[0][1] * 2 + R[0][2] * 3).margin(1e-14));
    CHECK(w.x3 == Catch::Approx(R[1][0] * 1 + R[1][1] * 2 + R[1][2] * 3).margin(1e-14));
    CHECK(w.x4 == Catch::Approx(R[2][0] * 1 + R[2][1] * 2 + R[2][2] * 3).margin(1e-14));
}

TEST_CASE("vector transform agrees with finite differences of the point map") {
    // derivative of m(p0 + t v) in t at 0 is the linear part applied to v
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto m = g4::random_motion(rng);
        const GVector4 v = oracle::random_vector(rng);
        const GPoint4 p0 = oracle::random_point(rng);
        const double h = 1e-6;
        const GPoint4 fwd = g4::apply_motion(m, p0 + h * v);
        const GPoint4 bwd = g4::apply_motion(m, p0 + (-h) * v);
        const GVector4 fd = (1.0 / (2.0 * h)) * (fwd - bwd);
        const GVector4 lin = g4::apply_motion_to_vector(m, v);
        CHECK(fd.x1 == Catch::Approx(lin.x1).margin(1e-8));
        CHECK(fd.x2 == Catch::Approx(lin.x2).margin(1e-8));
        CHECK(fd.x3 == Catch::Approx(lin.x3).margin(1e-8));
        CHECK(fd.x4 == Catch::Approx(lin.x4).margin(1e-8));
    }
}

TEST_CASE("motions preserve the Galilean distance in both branches") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const auto m = g4::random_motion(rng);
        GPoint4 p = oracle::random_point(rng);
        GPoint4 q = oracle::random_point(rng);

        // branch 1: differing absolute coordinates
        if (p.x1 == q.x1) q.x1 += 0.5;
        CHECK(g4::g_distance(g4::apply_motion(m, p), g4::apply_motion(m, q)) ==
              Catch::Approx(g4::g_distance(p, q)).margin(1e-9));

        // branch 2: equal absolute coordinates stay equal under t' = t + d
        q.x1 = p.x1;
        CHECK(g4::g_distance(g4::apply_motion(m, p), g4::apply_motion(m, q)) ==
              Catch::Approx(g4::g_distance(p, q)).margin(1e-9));
    }
}
