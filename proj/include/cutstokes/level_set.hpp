#pragma once

#include <functional>
#include <optional>

#include "cutstokes/types.hpp"

namespace cutstokes {

// Scalar field describing the interface: phi > 0 in subdomain 1, phi < 0 in
// subdomain 2, phi = 0 on the interface. The optional edge_intersection hook
// returns the parameter t in [0,1] where phi vanishes on the segment
// a + t*(b-a); when absent the classifier falls back to bisection.
struct LevelSet {
    std::function<double(const Vec2&)> phi;
    std::function<std::optional<double>(const Vec2&, const Vec2&)> edge_intersection;
    std::function<Vec2(const Vec2&)> normal; // unit, subdomain 1 -> subdomain 2

    double operator()(const Vec2& x) const { return phi(x); }
};

// Circle of radius r centered at c: phi = |x-c|^2 - r^2, so the inside is
// subdomain 2. Edge intersections are the closed-form segment/circle roots;
// two interior roots on one open edge trip the resolution assumption.
LevelSet make_circle_level_set(const Vec2& center, double radius);

} // namespace cutstokes
