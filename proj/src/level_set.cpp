#include "cutstokes/level_set.hpp"

#include <algorithm>
#include <cmath>

namespace cutstokes {

LevelSet make_circle_level_set(const Vec2& center, double radius) {
    LevelSet ls;
    ls.phi = [center, radius](const Vec2& x) { return (x - center).squaredNorm() - radius * radius; };
    ls.normal = [center](const Vec2& x) {
        Vec2 g = x - center;
        double n = g.norm();
        // phi grows outward (into subdomain 1); the convention points 1 -> 2.
        return n > 0.0 ? Vec2(-g / n) : Vec2(1.0, 0.0);
    };
    ls.edge_intersection = [center, radius](const Vec2& a, const Vec2& b) -> std::optional<double> {
        const Vec2 d = b - a;
        const Vec2 m = a - center;
        const double qa = d.squaredNorm();
        const double qb = 2.0 * m.dot(d);
        const double qc = m.squaredNorm() - radius * radius;
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0 || qa == 0.0)
            return std::nullopt;
        const double s = std::sqrt(disc);
        // Stable quadratic roots.
        const double q = -0.5 * (qb + (qb >= 0.0 ? s : -s));
        double t0 = q / qa;
        double t1 = (q != 0.0) ? qc / q : t0;
        if (t0 > t1)
            std::swap(t0, t1);
        const double eps = 1e-12;
        const bool in0 = (t0 > eps && t0 < 1.0 - eps);
        const bool in1 = (t1 > eps && t1 < 1.0 - eps);
        if (in0 && in1 && t1 - t0 > eps)
            throw AssumptionViolation("circle crosses one open edge twice");
        if (in0)
            return t0;
        if (in1)
            return t1;
        // Root at (or beyond) an endpoint: report the clamped endpoint root so
        // the caller can detect vertex touches.
        if (t0 >= -eps && t0 <= 1.0 + eps)
            return std::clamp(t0, 0.0, 1.0);
        if (t1 >= -eps && t1 <= 1.0 + eps)
            return std::clamp(t1, 0.0, 1.0);
        return std::nullopt;
    };
    return ls;
}

} // namespace cutstokes
