#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cutstokes/interface_geometry.hpp"
#include "cutstokes/mesh.hpp"
#include "cutstokes/types.hpp"

namespace cutstokes {

using VelocityFn = std::function<Vec2(int side, const Vec2&)>;
using ScalarSideFn = std::function<double(int side, const Vec2&)>;
using BoundaryFn = std::function<Vec2(const Vec2&)>;

// Degrees of freedom of the doubled Crouzeix-Raviart / P0 pair. Velocity
// carries one dof per edge of T_{h,i}, per component and per subdomain;
// pressure one dof per element of T_{h,i}. Edges and elements shared by both
// subdomains (cut elements and their edges) are doubled. Numbering is
// subdomain-1 block first, then subdomain 2; components interleave per edge.
struct DofMap {
    std::array<std::vector<int>, 2> edge_velocity_base; // per edge: first of 2 dofs, -1 if absent
    std::array<std::vector<int>, 2> element_pressure;   // per element: dof, -1 if absent
    int n_u = 0;
    int n_p = 0;
    std::vector<char> velocity_dirichlet; // flag per velocity dof

    struct VelocityInfo {
        int edge;
        int subdomain;
        int component;
    };
    struct PressureInfo {
        int element;
        int subdomain;
    };
    std::vector<VelocityInfo> velocity_info;
    std::vector<PressureInfo> pressure_info;

    int vdof(int i, int edge, int comp) const { return edge_velocity_base[i][edge] + comp; }
    bool has_vdof(int i, int edge) const { return edge_velocity_base[i][edge] >= 0; }
    int pdof(int i, int k) const { return element_pressure[i][k]; }
};

DofMap build_dof_map(const Mesh& mesh, const InterfaceGeometry& geo);

// Scaled Crouzeix-Raviart basis on element k: function m has unit mean on
// local edge m (opposite vertex m) and zero mean on the other two; value is
// 1 - 2*lambda_m with a constant gradient.
struct CrBasis {
    std::array<double, 3> value;
    std::array<Vec2, 3> grad;
};
CrBasis cr_basis(const Mesh& mesh, int k, const Vec2& x);
std::pair<double, Vec2> cr_basis_function(const Mesh& mesh, int k, int m, const Vec2& x);

// Edge-mean interpolant of a per-side velocity formula; every subdomain-i dof
// is the mean of u(i,.) over its (full) edge.
Eigen::VectorXd interpolate_velocity(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                     const VelocityFn& u);

// Elementwise mean of a per-side pressure formula over the full element.
Eigen::VectorXd project_pressure(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                 const ScalarSideFn& p);

// Boundary velocity dofs and their edge-mean values, ascending by dof.
std::vector<std::pair<int, double>> apply_dirichlet(const Mesh& mesh, const DofMap& dofs, const BoundaryFn& g);

// Evaluation of a discrete velocity/pressure on the side-i restriction of
// element k (coefficients over the DofMap index spaces).
Vec2 velocity_value(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side,
                    const Vec2& x);
// Rows are components: grad(c, d) = d u_c / d x_d. Constant per element side.
Mat2 velocity_gradient(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side);
double pressure_value(const DofMap& dofs, const Eigen::VectorXd& coeffs, int k, int side);

} // namespace cutstokes
