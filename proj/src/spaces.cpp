#include "cutstokes/spaces.hpp"

#include "cutstokes/quadrature.hpp"

namespace cutstokes {

DofMap build_dof_map(const Mesh& mesh, const InterfaceGeometry& geo) {
    DofMap dofs;
    for (int i = 0; i < 2; ++i) {
        dofs.edge_velocity_base[i].assign(mesh.n_edges(), -1);
        dofs.element_pressure[i].assign(mesh.n_triangles(), -1);
    }

    std::array<std::vector<char>, 2> edge_in{};
    for (int i = 0; i < 2; ++i)
        edge_in[i].assign(mesh.n_edges(), 0);
    for (int i = 0; i < 2; ++i)
        for (int k : geo.subdomain_elements[i])
            for (int e : mesh.triangle_to_edges[k])
                edge_in[i][e] = 1;

    int next = 0;
    for (int i = 0; i < 2; ++i) {
        for (int e = 0; e < mesh.n_edges(); ++e) {
            if (!edge_in[i][e])
                continue;
            dofs.edge_velocity_base[i][e] = next;
            for (int c = 0; c < 2; ++c)
                dofs.velocity_info.push_back({e, i, c});
            next += 2;
        }
    }
    dofs.n_u = next;

    next = 0;
    for (int i = 0; i < 2; ++i) {
        for (int k : geo.subdomain_elements[i]) {
            dofs.element_pressure[i][k] = next;
            dofs.pressure_info.push_back({k, i});
            ++next;
        }
    }
    dofs.n_p = next;

    dofs.velocity_dirichlet.assign(dofs.n_u, 0);
    for (int i = 0; i < 2; ++i)
        for (int e = 0; e < mesh.n_edges(); ++e)
            if (dofs.edge_velocity_base[i][e] >= 0 && mesh.boundary_edge_flags[e])
                for (int c = 0; c < 2; ++c)
                    dofs.velocity_dirichlet[dofs.vdof(i, e, c)] = 1;
    return dofs;
}

CrBasis cr_basis(const Mesh& mesh, int k, const Vec2& x) {
    const Vec2& p0 = mesh.vertex(k, 0);
    const Vec2& p1 = mesh.vertex(k, 1);
    const Vec2& p2 = mesh.vertex(k, 2);
    const double inv2a = 0.5 / mesh.triangle_area(k);
    auto perp = [](const Vec2& v) { return Vec2(-v.y(), v.x()); };
    // grad lambda_m = perp(P_{m+2} - P_{m+1}) / (2 |K|)
    const std::array<Vec2, 3> grad_l = {perp(p2 - p1) * inv2a, perp(p0 - p2) * inv2a, perp(p1 - p0) * inv2a};
    const Vec2 centroid = mesh.triangle_centroid(k);
    CrBasis basis;
    for (int m = 0; m < 3; ++m) {
        const double lambda = 1.0 / 3.0 + grad_l[m].dot(x - centroid); // affine, 1/3 at the centroid
        basis.value[m] = 1.0 - 2.0 * lambda;
        basis.grad[m] = -2.0 * grad_l[m];
    }
    return basis;
}

std::pair<double, Vec2> cr_basis_function(const Mesh& mesh, int k, int m, const Vec2& x) {
    CrBasis basis = cr_basis(mesh, k, x);
    return {basis.value[m], basis.grad[m]};
}

Eigen::VectorXd interpolate_velocity(const Mesh& mesh, const InterfaceGeometry&, const DofMap& dofs,
                                     const VelocityFn& u) {
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dofs.n_u);
    for (int i = 0; i < 2; ++i) {
        for (int e = 0; e < mesh.n_edges(); ++e) {
            if (!dofs.has_vdof(i, e))
                continue;
            const Vec2& a = mesh.vertices[mesh.edges[e].v[0]];
            const Vec2& b = mesh.vertices[mesh.edges[e].v[1]];
            QuadratureRule rule = segment_rule(a, b, 3);
            Vec2 mean = Vec2::Zero();
            for (int q = 0; q < rule.size(); ++q)
                mean += rule.weights[q] * u(i, rule.points[q]);
            mean /= mesh.edge_length(e);
            for (int c = 0; c < 2; ++c)
                coeffs[dofs.vdof(i, e, c)] = mean[c];
        }
    }
    return coeffs;
}

Eigen::VectorXd project_pressure(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                 const ScalarSideFn& p) {
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dofs.n_p);
    for (int i = 0; i < 2; ++i) {
        for (int k : geo.subdomain_elements[i]) {
            QuadratureRule rule = triangle_rule_on(mesh.vertex(k, 0), mesh.vertex(k, 1), mesh.vertex(k, 2), 4);
            double mean = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                mean += rule.weights[q] * p(i, rule.points[q]);
            coeffs[dofs.pdof(i, k)] = mean / mesh.triangle_area(k);
        }
    }
    return coeffs;
}

std::vector<std::pair<int, double>> apply_dirichlet(const Mesh& mesh, const DofMap& dofs, const BoundaryFn& g) {
    std::vector<std::pair<int, double>> values;
    for (int i = 0; i < 2; ++i) {
        for (int e = 0; e < mesh.n_edges(); ++e) {
            if (!dofs.has_vdof(i, e) || !mesh.boundary_edge_flags[e])
                continue;
            const Vec2& a = mesh.vertices[mesh.edges[e].v[0]];
            const Vec2& b = mesh.vertices[mesh.edges[e].v[1]];
            QuadratureRule rule = segment_rule(a, b, 3);
            Vec2 mean = Vec2::Zero();
            for (int q = 0; q < rule.size(); ++q)
                mean += rule.weights[q] * g(rule.points[q]);
            mean /= mesh.edge_length(e);
            for (int c = 0; c < 2; ++c)
                values.emplace_back(dofs.vdof(i, e, c), mean[c]);
        }
    }
    return values;
}

Vec2 velocity_value(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side,
                    const Vec2& x) {
    CrBasis basis = cr_basis(mesh, k, x);
    Vec2 value = Vec2::Zero();
    for (int m = 0; m < 3; ++m) {
        int e = mesh.triangle_to_edges[k][m];
        for (int c = 0; c < 2; ++c)
            value[c] += basis.value[m] * coeffs[dofs.vdof(side, e, c)];
    }
    return value;
}

Mat2 velocity_gradient(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side) {
    CrBasis basis = cr_basis(mesh, k, mesh.triangle_centroid(k));
    Mat2 grad = Mat2::Zero();
    for (int m = 0; m < 3; ++m) {
        int e = mesh.triangle_to_edges[k][m];
        for (int c = 0; c < 2; ++c)
            grad.row(c) += basis.grad[m].transpose() * coeffs[dofs.vdof(side, e, c)];
    }
    return grad;
}

double pressure_value(const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side) {
    return coeffs[dofs.pdof(side, k)];
}

} // namespace cutstokes
