#pragma once

#include "cutstokes/error_norms.hpp"

namespace cutstokes {

struct BenchmarkCase {
    ExactSolution exact;
    PhysicalParams params;
    Vec2 circle_center{0.0, 0.0};
    double circle_radius = 0.5;
};

// Single-phase smooth benchmark on [-1,1]^2 with mu = 1:
// u = (20 x y^3, 5 x^4 - 5 y^4), p = 60 x^2 y - 20 y^3, f = 0.
BenchmarkCase example1();

// Two-phase benchmark with kinked velocity across the circle r = 0.5:
// u_i = (y (x^2+y^2-0.25), -x (x^2+y^2-0.25)) / mu_i, p = 4 (y^2 - x^2),
// f = (-8x-8y, 8x+8y). Default viscosities (1000, 1). A nonzero center
// translates the whole problem (interface, solution and data) while the
// mesh stays put.
BenchmarkCase example2(double mu1 = 1000.0, double mu2 = 1.0, const Vec2& center = Vec2(0.0, 0.0));

// Rigid-rotation patch configuration: u = (y, -x), p = 0, f = 0, mu = 1.
BenchmarkCase patch_case();

} // namespace cutstokes
