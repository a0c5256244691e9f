// Prints the moving frame and curvatures of a helix at a few parameter
// values, then the residuals of the frame equations.

#include <cstdio>

#include "g4/curve.hpp"
#include "g4/frenet.hpp"

int main() {
    const g4::Curve helix = g4::HelixFamily{1.0, 1.0, 1.0}.curve({0.0, 6.28, 8});

    std::printf("%8s %24s %10s %10s %10s\n", "s", "t (spatial)", "kappa", "tau", "sigma");
    for (double s : g4::grid_points(helix.domain)) {
        const g4::FrenetData f = g4::frenet_at(helix, s);
        std::printf("%8.4f (%7.4f, %7.4f, %7.4f) %10.6f %10.6f %10.6f\n", s, f.t.x2,
                    f.t.x3, f.t.x4, f.kappa, *f.tau, *f.sigma);
    }

    const g4::FrenetResiduals r = g4::frenet_residuals(helix, 1.0);
    std::printf("\nframe-equation residuals at s = 1 (h = 1e-4):\n");
    std::printf("  t' - kappa n        : %.3e\n", r.tangent);
    std::printf("  n' - tau b          : %.3e\n", r.normal);
    std::printf("  b' + tau n - sigma e: %.3e\n", r.binormal);
    std::printf("  e' + sigma b        : %.3e\n", r.trinormal);
    return 0;
}
