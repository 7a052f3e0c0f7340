#pragma once

#include <random>

#include "cutstokes/assembly.hpp"
#include "cutstokes/quadrature.hpp"

namespace cutstokes::testing {

inline Mesh single_triangle_mesh(const Vec2& a, const Vec2& b, const Vec2& c) {
    Mesh mesh;
    mesh.vertices = {a, b, c};
    mesh.triangles = {{0, 1, 2}};
    build_edge_tables(mesh);
    return mesh;
}

// Level set with every point in subdomain 1 (interface far away).
inline LevelSet far_level_set() {
    return make_circle_level_set(Vec2(100.0, 100.0), 0.5);
}

// Affine level set phi(x) = g . x + c with bisection-based intersections.
inline LevelSet line_level_set(const Vec2& g, double c) {
    LevelSet ls;
    ls.phi = [g, c](const Vec2& x) { return g.dot(x) + c; };
    return ls;
}

inline Eigen::VectorXd random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v[i] = dist(rng);
    return v;
}

// Direct quadrature evaluation of the full bilinear form
//   B[(u,p),(v,q)] = a_h(u,v) + J_u(u,v) + b_h(p,v) - b_h(q,u) + J_p(p,q)
// from field evaluations only; independent of the matrix assembly path.
inline double direct_bilinear_form(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                   const PhysicalParams& params, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& p, const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& q) {
    double total = 0.0;

    auto b_form = [&](const Eigen::VectorXd& pr, const Eigen::VectorXd& vel) {
        double sum = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int k : geo.subdomain_elements[i]) {
                const double pk = pressure_value(dofs, pr, k, i);
                Mat2 g = velocity_gradient(mesh, dofs, vel, k, i);
                sum -= geo.side_area(mesh, i, k) * pk * (g(0, 0) + g(1, 1));
            }
            for (const CutSegment& seg : geo.f_cut[i]) {
                QuadratureRule rule = segment_rule(seg.a, seg.b, 3);
                const double pavg = 0.5 * (pressure_value(dofs, pr, seg.tri_l, i) +
                                           pressure_value(dofs, pr, seg.tri_r, i));
                for (int iq = 0; iq < rule.size(); ++iq) {
                    Vec2 jump = velocity_value(mesh, dofs, vel, seg.tri_l, i, rule.points[iq]) -
                                velocity_value(mesh, dofs, vel, seg.tri_r, i, rule.points[iq]);
                    sum += rule.weights[iq] * pavg * jump.dot(seg.normal);
                }
            }
        }
        for (const CutElementData& cd : geo.cut_data) {
            QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], 3);
            const double pw = params.w(0) * pressure_value(dofs, pr, cd.element, 0) +
                              params.w(1) * pressure_value(dofs, pr, cd.element, 1);
            for (int iq = 0; iq < rule.size(); ++iq) {
                Vec2 jump = velocity_value(mesh, dofs, vel, cd.element, 0, rule.points[iq]) -
                            velocity_value(mesh, dofs, vel, cd.element, 1, rule.points[iq]);
                sum += rule.weights[iq] * pw * jump.dot(cd.normal);
            }
        }
        return sum;
    };

    // a_h volume
    for (int i = 0; i < 2; ++i) {
        for (int k : geo.subdomain_elements[i]) {
            Mat2 gu = velocity_gradient(mesh, dofs, u, k, i);
            Mat2 gv = velocity_gradient(mesh, dofs, v, k, i);
            total += params.mu(i) * geo.side_area(mesh, i, k) * gu.cwiseProduct(gv).sum();
        }
    }
    // a_h interface chords
    for (const CutElementData& cd : geo.cut_data) {
        QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], 3);
        Vec2 flux_u = Vec2::Zero(), flux_v = Vec2::Zero();
        for (int i = 0; i < 2; ++i) {
            flux_u += params.w(i) * params.mu(i) *
                      (velocity_gradient(mesh, dofs, u, cd.element, i) * cd.normal);
            flux_v += params.w(i) * params.mu(i) *
                      (velocity_gradient(mesh, dofs, v, cd.element, i) * cd.normal);
        }
        for (int iq = 0; iq < rule.size(); ++iq) {
            Vec2 ju = velocity_value(mesh, dofs, u, cd.element, 0, rule.points[iq]) -
                      velocity_value(mesh, dofs, u, cd.element, 1, rule.points[iq]);
            Vec2 jv = velocity_value(mesh, dofs, v, cd.element, 0, rule.points[iq]) -
                      velocity_value(mesh, dofs, v, cd.element, 1, rule.points[iq]);
            total += rule.weights[iq] * (-(flux_u.dot(jv) + flux_v.dot(ju)) +
                                         params.gamma0 * params.mu_harm() / mesh.h * ju.dot(jv));
        }
    }
    // a_h cut segments
    for (int i = 0; i < 2; ++i) {
        for (const CutSegment& seg : geo.f_cut[i]) {
            QuadratureRule rule = segment_rule(seg.a, seg.b, 3);
            Vec2 flux_u = 0.5 * params.mu(i) *
                          ((velocity_gradient(mesh, dofs, u, seg.tri_l, i) +
                            velocity_gradient(mesh, dofs, u, seg.tri_r, i)) *
                           seg.normal);
            Vec2 flux_v = 0.5 * params.mu(i) *
                          ((velocity_gradient(mesh, dofs, v, seg.tri_l, i) +
                            velocity_gradient(mesh, dofs, v, seg.tri_r, i)) *
                           seg.normal);
            for (int iq = 0; iq < rule.size(); ++iq) {
                Vec2 ju = velocity_value(mesh, dofs, u, seg.tri_l, i, rule.points[iq]) -
                          velocity_value(mesh, dofs, u, seg.tri_r, i, rule.points[iq]);
                Vec2 jv = velocity_value(mesh, dofs, v, seg.tri_l, i, rule.points[iq]) -
                          velocity_value(mesh, dofs, v, seg.tri_r, i, rule.points[iq]);
                total += rule.weights[iq] * (-(flux_u.dot(jv) + flux_v.dot(ju)) +
                                             params.gamma_cut(i) * params.mu(i) / seg.length * ju.dot(jv));
            }
        }
    }
    // J_u
    for (int i = 0; i < 2; ++i) {
        for (int e : geo.f_gamma[i]) {
            const Edge& edge = mesh.edges[e];
            const double len = mesh.edge_length(e);
            Mat2 ju = velocity_gradient(mesh, dofs, u, edge.tri[0], i) -
                      velocity_gradient(mesh, dofs, u, edge.tri[1], i);
            Mat2 jv = velocity_gradient(mesh, dofs, v, edge.tri[0], i) -
                      velocity_gradient(mesh, dofs, v, edge.tri[1], i);
            total += params.mu(i) * len * len * ju.cwiseProduct(jv).sum();
        }
        for (const CutSegment& seg : geo.f_cut[i]) {
            Vec2 ju = (velocity_gradient(mesh, dofs, u, seg.tri_l, i) -
                       velocity_gradient(mesh, dofs, u, seg.tri_r, i)) *
                      seg.normal;
            Vec2 jv = (velocity_gradient(mesh, dofs, v, seg.tri_l, i) -
                       velocity_gradient(mesh, dofs, v, seg.tri_r, i)) *
                      seg.normal;
            total += params.mu(i) * seg.length * seg.length * ju.dot(jv);
        }
    }
    // b_h(p, v) - b_h(q, u)
    total += b_form(p, v) - b_form(q, u);
    // J_p
    for (int i = 0; i < 2; ++i) {
        for (int e : geo.f_gamma[i]) {
            const Edge& edge = mesh.edges[e];
            const double len = mesh.edge_length(e);
            double jp = pressure_value(dofs, p, edge.tri[0], i) - pressure_value(dofs, p, edge.tri[1], i);
            double jq = pressure_value(dofs, q, edge.tri[0], i) - pressure_value(dofs, q, edge.tri[1], i);
            total += len * len / params.mu(i) * jp * jq;
        }
        for (const CutSegment& seg : geo.f_cut[i]) {
            double jp = pressure_value(dofs, p, seg.tri_l, i) - pressure_value(dofs, p, seg.tri_r, i);
            double jq = pressure_value(dofs, q, seg.tri_l, i) - pressure_value(dofs, q, seg.tri_r, i);
            total += seg.length * seg.length / params.mu(i) * jp * jq;
        }
    }
    return total;
}

} // namespace cutstokes::testing
