#include "cutstokes/solutions.hpp"

#include <array>
#include <cmath>

namespace cutstokes {

BenchmarkCase example1() {
    BenchmarkCase bench;
    bench.exact.name = "example1";
    bench.exact.velocity = [](int, const Vec2& x) {
        return Vec2(20.0 * x.x() * x.y() * x.y() * x.y(),
                    5.0 * std::pow(x.x(), 4) - 5.0 * std::pow(x.y(), 4));
    };
    bench.exact.velocity_gradient = [](int, const Vec2& x) {
        Mat2 g;
        g(0, 0) = 20.0 * x.y() * x.y() * x.y();
        g(0, 1) = 60.0 * x.x() * x.y() * x.y();
        g(1, 0) = 20.0 * std::pow(x.x(), 3);
        g(1, 1) = -20.0 * std::pow(x.y(), 3);
        return g;
    };
    bench.exact.pressure = [](int, const Vec2& x) {
        return 60.0 * x.x() * x.x() * x.y() - 20.0 * std::pow(x.y(), 3);
    };
    // -mu lap u + grad p vanishes identically: lap u = (120xy, 60x^2-60y^2) = grad p.
    bench.exact.body_force = [](int, const Vec2&) { return Vec2::Zero(); };

    bench.params.mu1 = 1.0;
    bench.params.mu2 = 1.0;
    bench.params.body_force = bench.exact.body_force;
    bench.params.dirichlet = [u = bench.exact.velocity](const Vec2& x) { return u(0, x); };
    return bench;
}

BenchmarkCase example2(double mu1, double mu2, const Vec2& center) {
    BenchmarkCase bench;
    bench.exact.name = "example2";
    bench.circle_center = center;
    const std::array<double, 2> mu{mu1, mu2};
    bench.exact.velocity = [mu, center](int side, const Vec2& x) {
        const Vec2 z = x - center;
        const double s = z.squaredNorm() - 0.25;
        return Vec2(z.y() * s / mu[side], -z.x() * s / mu[side]);
    };
    bench.exact.velocity_gradient = [mu, center](int side, const Vec2& x) {
        const Vec2 z = x - center;
        Mat2 g;
        g(0, 0) = 2.0 * z.x() * z.y() / mu[side];
        g(0, 1) = (z.x() * z.x() + 3.0 * z.y() * z.y() - 0.25) / mu[side];
        g(1, 0) = -(3.0 * z.x() * z.x() + z.y() * z.y() - 0.25) / mu[side];
        g(1, 1) = -2.0 * z.x() * z.y() / mu[side];
        return g;
    };
    bench.exact.pressure = [center](int, const Vec2& x) {
        const Vec2 z = x - center;
        return 4.0 * (z.y() * z.y() - z.x() * z.x());
    };
    bench.exact.body_force = [center](int, const Vec2& x) {
        const Vec2 z = x - center;
        return Vec2(-8.0 * z.x() - 8.0 * z.y(), 8.0 * z.x() + 8.0 * z.y());
    };

    bench.params.mu1 = mu1;
    bench.params.mu2 = mu2;
    bench.params.body_force = bench.exact.body_force;
    bench.params.dirichlet = [u = bench.exact.velocity](const Vec2& x) { return u(0, x); };
    return bench;
}

BenchmarkCase patch_case() {
    BenchmarkCase bench;
    bench.exact.name = "patch";
    bench.exact.velocity = [](int, const Vec2& x) { return Vec2(x.y(), -x.x()); };
    bench.exact.velocity_gradient = [](int, const Vec2&) {
        Mat2 g;
        g << 0.0, 1.0, -1.0, 0.0;
        return g;
    };
    bench.exact.pressure = [](int, const Vec2&) { return 0.0; };
    bench.exact.body_force = [](int, const Vec2&) { return Vec2::Zero(); };

    bench.params.mu1 = 1.0;
    bench.params.mu2 = 1.0;
    bench.params.body_force = bench.exact.body_force;
    bench.params.dirichlet = [](const Vec2& x) { return Vec2(x.y(), -x.x()); };
    return bench;
}

} // namespace cutstokes
