#pragma once

#include <array>
#include <vector>

#include "cutstokes/types.hpp"

namespace cutstokes {

// Points/weights on a concrete cell (triangle, polygon or segment). Weights
// are positive and sum to the cell measure.
struct QuadratureRule {
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }

    template <typename F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (int q = 0; q < size(); ++q)
            s += weights[q] * f(points[q]);
        return s;
    }
};

// Rule on the reference triangle (0,0),(1,0),(0,1), exact for polynomials up
// to `degree`. Degrees 1..5 use symmetric positive rules; 6..10 a collapsed
// Gauss product. Throws std::invalid_argument otherwise.
QuadratureRule triangle_rule(int degree);

// Same rule mapped affinely onto the triangle (a,b,c).
QuadratureRule triangle_rule_on(const Vec2& a, const Vec2& b, const Vec2& c, int degree);

// Convex polygon with 3 or 4 vertices, fan-triangulated from vertex 0.
// Throws GeometryDegenerate when the polygon area is not positive.
QuadratureRule polygon_rule(const std::vector<Vec2>& poly, int degree);

// Gauss rule on the segment [a,b]; weights sum to |b-a|.
QuadratureRule segment_rule(const Vec2& a, const Vec2& b, int degree);

double polygon_area(const std::vector<Vec2>& poly);

} // namespace cutstokes
