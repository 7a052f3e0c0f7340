#include "cutstokes/error_norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutstokes/quadrature.hpp"

namespace cutstokes {

ErrorReport compute_errors(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                           const PhysicalParams& params, const Solution& sol, const ExactSolution& exact,
                           int degree) {
    // Gauge shift: move p_h onto the exact pressure's weighted mean.
    double mean_diff = 0.0, mean_weight = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double inv_mu = 1.0 / params.mu(i);
        for (int k : geo.subdomain_elements[i]) {
            QuadratureRule rule = polygon_rule(geo.side_polygon(mesh, i, k), degree);
            const double ph = pressure_value(dofs, sol.pressure, k, i);
            for (int q = 0; q < rule.size(); ++q)
                mean_diff += rule.weights[q] * inv_mu * (exact.pressure(i, rule.points[q]) - ph);
            double area = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                area += rule.weights[q];
            mean_weight += inv_mu * area;
        }
    }
    const double shift = mean_diff / mean_weight;

    double num_u0 = 0.0, den_u0 = 0.0;
    double num_u1 = 0.0, den_u1 = 0.0;
    double num_p0 = 0.0, den_p0 = 0.0;

    for (int i = 0; i < 2; ++i) {
        const double mu = params.mu(i);
        const double inv_mu = 1.0 / mu;
        for (int k : geo.subdomain_elements[i]) {
            QuadratureRule rule = polygon_rule(geo.side_polygon(mesh, i, k), degree);
            const Mat2 grad_h = velocity_gradient(mesh, dofs, sol.velocity, k, i);
            const double ph = pressure_value(dofs, sol.pressure, k, i) + shift;
            for (int q = 0; q < rule.size(); ++q) {
                const Vec2& x = rule.points[q];
                const double w = rule.weights[q];
                const Vec2 u = exact.velocity(i, x);
                const Vec2 uh = velocity_value(mesh, dofs, sol.velocity, k, i, x);
                const Mat2 gu = exact.velocity_gradient(i, x);
                const double p = exact.pressure(i, x);
                num_u0 += w * (u - uh).squaredNorm();
                den_u0 += w * u.squaredNorm();
                num_u1 += w * mu * (gu - grad_h).squaredNorm();
                den_u1 += w * mu * gu.squaredNorm();
                num_p0 += w * inv_mu * (p - ph) * (p - ph);
                den_p0 += w * inv_mu * p * p;
            }
        }
    }

    // A vanishing exact field has no relative scale; report the absolute norm.
    auto rel = [](double num, double den) { return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num); };
    ErrorReport report;
    report.h = mesh.h;
    report.e0_u = rel(num_u0, den_u0);
    report.e1_u = rel(num_u1, den_u1);
    report.e0_p = rel(num_p0, den_p0);
    return report;
}

std::vector<double> rates(const std::vector<double>& h, const std::vector<double>& errors) {
    if (h.size() != errors.size())
        throw std::invalid_argument("rates: size mismatch");
    for (size_t j = 1; j < h.size(); ++j)
        if (!(h[j] < h[j - 1]))
            throw std::invalid_argument("rates: h must decrease strictly");
    std::vector<double> out(h.size(), std::numeric_limits<double>::quiet_NaN());
    for (size_t j = 1; j < h.size(); ++j)
        out[j] = std::log(errors[j - 1] / errors[j]) / std::log(h[j - 1] / h[j]);
    return out;
}

EnergyDiagnostics energy_diagnostics(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                     const PhysicalParams& params, const Solution& sol,
                                     const ExactSolution& exact) {
    EnergyDiagnostics d;

    for (int i = 0; i < 2; ++i) {
        const double mu = params.mu(i);
        for (int k : geo.subdomain_elements[i]) {
            QuadratureRule rule = polygon_rule(geo.side_polygon(mesh, i, k), 5);
            const Mat2 grad_h = velocity_gradient(mesh, dofs, sol.velocity, k, i);
            for (int q = 0; q < rule.size(); ++q)
                d.broken_grad_sq +=
                    rule.weights[q] * mu * (exact.velocity_gradient(i, rule.points[q]) - grad_h).squaredNorm();
        }
    }

    // Exact fields are single-valued across chords and cut segments, so the
    // error jumps are the (negated) discrete jumps.
    const double wh = params.mu_harm() / mesh.h;
    for (const CutElementData& cd : geo.cut_data) {
        QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], 5);
        for (int q = 0; q < rule.size(); ++q) {
            const Vec2 jump = velocity_value(mesh, dofs, sol.velocity, cd.element, 0, rule.points[q]) -
                              velocity_value(mesh, dofs, sol.velocity, cd.element, 1, rule.points[q]);
            d.interface_jump_sq += rule.weights[q] * wh * jump.squaredNorm();
        }
    }
    for (int i = 0; i < 2; ++i) {
        const double mu = params.mu(i);
        for (const CutSegment& seg : geo.f_cut[i]) {
            QuadratureRule rule = segment_rule(seg.a, seg.b, 5);
            for (int q = 0; q < rule.size(); ++q) {
                const Vec2 jump = velocity_value(mesh, dofs, sol.velocity, seg.tri_l, i, rule.points[q]) -
                                  velocity_value(mesh, dofs, sol.velocity, seg.tri_r, i, rule.points[q]);
                d.cut_jump_sq += rule.weights[q] * mu / seg.length * jump.squaredNorm();
            }
        }

        for (int e : geo.f_gamma[i]) {
            const Edge& edge = mesh.edges[e];
            const double len = mesh.edge_length(e);
            const Mat2 jump = velocity_gradient(mesh, dofs, sol.velocity, edge.tri[0], i) -
                              velocity_gradient(mesh, dofs, sol.velocity, edge.tri[1], i);
            d.grad_stab_sq += mu * len * len * jump.squaredNorm();
            const double pjump = pressure_value(dofs, sol.pressure, edge.tri[0], i) -
                                 pressure_value(dofs, sol.pressure, edge.tri[1], i);
            d.pressure_stab_sq += len * len / mu * pjump * pjump;
        }
        for (const CutSegment& seg : geo.f_cut[i]) {
            const Vec2 njump = (velocity_gradient(mesh, dofs, sol.velocity, seg.tri_l, i) -
                                velocity_gradient(mesh, dofs, sol.velocity, seg.tri_r, i)) *
                               seg.normal;
            d.grad_stab_sq += params.mu(i) * seg.length * seg.length * njump.squaredNorm();
            const double pjump = pressure_value(dofs, sol.pressure, seg.tri_l, i) -
                                 pressure_value(dofs, sol.pressure, seg.tri_r, i);
            d.pressure_stab_sq += seg.length * seg.length / params.mu(i) * pjump * pjump;
        }
    }

    return d;
}

} // namespace cutstokes
