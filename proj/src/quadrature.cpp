#include "cutstokes/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cutstokes {

namespace {

// Gauss-Legendre nodes/weights on [0,1], exact for degree 2n-1.
void gauss_legendre_unit(int npts, std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    switch (npts) {
    case 1:
        x = {0.5};
        w = {1.0};
        break;
    case 2: {
        const double d = 0.5 / std::sqrt(3.0);
        x = {0.5 - d, 0.5 + d};
        w = {0.5, 0.5};
        break;
    }
    case 3: {
        const double d = 0.5 * std::sqrt(0.6);
        x = {0.5 - d, 0.5, 0.5 + d};
        w = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
        break;
    }
    case 4: {
        const double a = 0.3399810435848563, b = 0.8611363115940526;
        const double wa = 0.6521451548625461, wb = 0.3478548451374538;
        x = {0.5 - 0.5 * b, 0.5 - 0.5 * a, 0.5 + 0.5 * a, 0.5 + 0.5 * b};
        w = {0.5 * wb, 0.5 * wa, 0.5 * wa, 0.5 * wb};
        break;
    }
    case 5: {
        const double a = 0.5384693101056831, b = 0.9061798459386640;
        const double w0 = 0.5688888888888889, wa = 0.4786286704993665, wb = 0.2369268850561891;
        x = {0.5 - 0.5 * b, 0.5 - 0.5 * a, 0.5, 0.5 + 0.5 * a, 0.5 + 0.5 * b};
        w = {0.5 * wb, 0.5 * wa, 0.5 * w0, 0.5 * wa, 0.5 * wb};
        break;
    }
    case 6: {
        const double a = 0.2386191860831969, b = 0.6612093864662645, c = 0.9324695142031521;
        const double wa = 0.4679139345726910, wb = 0.3607615730481386, wc = 0.1713244923791704;
        x = {0.5 - 0.5 * c, 0.5 - 0.5 * b, 0.5 - 0.5 * a, 0.5 + 0.5 * a, 0.5 + 0.5 * b, 0.5 + 0.5 * c};
        w = {0.5 * wc, 0.5 * wb, 0.5 * wa, 0.5 * wa, 0.5 * wb, 0.5 * wc};
        break;
    }
    default:
        throw std::invalid_argument("gauss_legendre_unit: unsupported point count");
    }
}

// Barycentric coordinates w.r.t. (0,0),(1,0),(0,1): point = (l2, l3).
void push_barycentric(QuadratureRule& rule, double l2, double l3, double weight) {
    rule.points.emplace_back(l2, l3);
    rule.weights.push_back(weight);
}

void push_orbit3(QuadratureRule& rule, double a, double weight) {
    const double c = 1.0 - 2.0 * a;
    push_barycentric(rule, a, c, weight);
    push_barycentric(rule, c, a, weight);
    push_barycentric(rule, a, a, weight);
}

QuadratureRule duffy_rule(int degree) {
    // Collapsed-square product rule: x in [0,1], y in [0, 1-x]. A monomial of
    // total degree d becomes degree d+1 in x (the Jacobian adds one) and d in y.
    const int nx = (degree + 3) / 2;
    const int ny = (degree + 2) / 2;
    std::vector<double> gx, wx, gy, wy;
    gauss_legendre_unit(nx, gx, wx);
    gauss_legendre_unit(ny, gy, wy);
    QuadratureRule rule;
    rule.points.reserve(nx * ny);
    rule.weights.reserve(nx * ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            rule.points.emplace_back(gx[i], gy[j] * (1.0 - gx[i]));
            rule.weights.push_back(wx[i] * wy[j] * (1.0 - gx[i]));
        }
    }
    return rule;
}

} // namespace

QuadratureRule triangle_rule(int degree) {
    QuadratureRule rule;
    switch (degree) {
    case 1:
        push_barycentric(rule, 1.0 / 3.0, 1.0 / 3.0, 1.0);
        break;
    case 2:
        push_orbit3(rule, 1.0 / 6.0, 1.0 / 3.0);
        break;
    case 3:
    case 4:
        // Six-point degree-4 rule (positive weights).
        push_orbit3(rule, 0.445948490915965, 0.223381589678011);
        push_orbit3(rule, 0.091576213509771, 0.109951743655322);
        break;
    case 5:
        push_barycentric(rule, 1.0 / 3.0, 1.0 / 3.0, 0.225);
        push_orbit3(rule, 0.470142064105115, 0.132394152788506);
        push_orbit3(rule, 0.101286507323456, 0.125939180544827);
        break;
    default:
        if (degree >= 6 && degree <= 10)
            return duffy_rule(degree);
        throw std::invalid_argument("triangle_rule: unsupported degree");
    }
    // Tabulated weights are normalized to 1; the reference triangle has area 1/2.
    for (double& w : rule.weights)
        w *= 0.5;
    return rule;
}

QuadratureRule triangle_rule_on(const Vec2& a, const Vec2& b, const Vec2& c, int degree) {
    QuadratureRule ref = triangle_rule(degree);
    const Vec2 e1 = b - a, e2 = c - a;
    const double det = e1.x() * e2.y() - e1.y() * e2.x();
    if (!(det > 0.0))
        throw GeometryDegenerate("triangle_rule_on: non-positive orientation");
    QuadratureRule rule;
    rule.points.reserve(ref.size());
    rule.weights.reserve(ref.size());
    for (int q = 0; q < ref.size(); ++q) {
        rule.points.push_back(a + ref.points[q].x() * e1 + ref.points[q].y() * e2);
        rule.weights.push_back(ref.weights[q] * det); // reference weights carry the 1/2 measure
    }
    return rule;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double s = 0.0;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        s += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * s;
}

QuadratureRule polygon_rule(const std::vector<Vec2>& poly, int degree) {
    if (poly.size() < 3 || poly.size() > 4)
        throw std::invalid_argument("polygon_rule: expected 3 or 4 vertices");
    if (!(polygon_area(poly) > 0.0))
        throw GeometryDegenerate("polygon_rule: non-positive polygon area");
    QuadratureRule rule;
    for (size_t k = 1; k + 1 < poly.size(); ++k) {
        QuadratureRule part = triangle_rule_on(poly[0], poly[k], poly[k + 1], degree);
        rule.points.insert(rule.points.end(), part.points.begin(), part.points.end());
        rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
    }
    return rule;
}

QuadratureRule segment_rule(const Vec2& a, const Vec2& b, int degree) {
    const double len = (b - a).norm();
    if (!(len > 0.0))
        throw GeometryDegenerate("segment_rule: zero-length segment");
    const int npts = (degree + 2) / 2;
    std::vector<double> x, w;
    gauss_legendre_unit(npts, x, w);
    QuadratureRule rule;
    rule.points.reserve(npts);
    rule.weights.reserve(npts);
    for (int q = 0; q < npts; ++q) {
        rule.points.push_back(a + x[q] * (b - a));
        rule.weights.push_back(w[q] * len);
    }
    return rule;
}

} // namespace cutstokes
